"""
Sweep Command
(R, Z) surface of one rate quantity written as CSV
"""
import argparse
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence, Tuple

import numpy as np
import structlog

from commands.options import add_config_argument, add_polarization_argument, read_config, resolve_polarization
from config.settings import settings
from core.exceptions import ConfigurationError
from rates.closed_form import quantity_values
from schemas.geometry import UNBOUNDED, PolarizationAxis
from schemas.results import AxisRange, RateQuantity, SweepSpec
from utils.file_utils import render_csv, write_output

logger = structlog.get_logger(__name__)

HEADER = ("pol", "R", "Z", "quantity", "value")
QUANTITY_CHOICES = ["gamma11", "gamma12", "gamma_plus", "gamma_minus", "v_shift"]

RowTask = Tuple[PolarizationAxis, RateQuantity, float, np.ndarray, bool]


def register(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("sweep", help="Write a rate quantity on an (R, Z) grid as CSV")
    add_polarization_argument(parser)
    parser.add_argument("--grid", default=None, help="Points per axis as RxZ (default from settings)")
    parser.add_argument("--r-range", default=None, help="R bounds as MIN:MAX")
    parser.add_argument("--z-range", default=None, help="Z bounds as MIN:MAX")
    parser.add_argument("--log", action="store_true", help="Geometric spacing on both axes")
    parser.add_argument("--quantity", choices=QUANTITY_CHOICES, default="gamma_plus")
    parser.add_argument("--unbounded", action="store_true", help="Add a free-space row after each R")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes (default from settings)")
    parser.add_argument("--out", default=None, help="CSV destination (default stdout)")
    add_config_argument(parser)
    parser.set_defaults(handler=cmd_sweep)
    return parser


# ============================================================================
# ARGUMENT PARSING
# ============================================================================
def parse_grid(text: str | None) -> Tuple[int, int]:
    """'200x150' -> (200, 150)"""
    if text is None:
        return settings.sweep_default_count, settings.sweep_default_count
    try:
        r_count, z_count = (int(part) for part in text.lower().split("x"))
    except ValueError:
        raise ConfigurationError(f"expected RxZ point counts, got {text!r}", key="grid") from None
    return r_count, z_count


def parse_bounds(text: str | None, key: str) -> Tuple[float, float]:
    """'0.05:20' -> (0.05, 20.0)"""
    if text is None:
        return settings.sweep_default_min, settings.sweep_default_max
    try:
        low, high = (float(part) for part in text.split(":"))
    except ValueError:
        raise ConfigurationError(f"expected MIN:MAX, got {text!r}", key=key) from None
    return low, high


def build_spec(args: argparse.Namespace) -> SweepSpec:
    """Validated SweepSpec from flags, falling back to the run configuration for --pol"""
    pol = resolve_polarization(args, read_config(args))
    r_count, z_count = parse_grid(args.grid)
    r_min, r_max = parse_bounds(args.r_range, "r_range")
    z_min, z_max = parse_bounds(args.z_range, "z_range")
    scale = "log" if args.log else "linear"
    return SweepSpec(
        polarization=pol,
        r_range=AxisRange(min=r_min, max=r_max, count=r_count, scale=scale),
        z_range=AxisRange(min=z_min, max=z_max, count=z_count, scale=scale),
        include_unbounded=args.unbounded,
        quantity=args.quantity,
        output=args.out,
    )


# ============================================================================
# EVALUATION
# ============================================================================
def sweep_row(task: RowTask) -> List[Tuple]:
    """All CSV rows of one separation R: finite Z in order, then Unbounded"""
    pol, quantity, R, z_values, include_unbounded = task
    values = quantity_values(pol, quantity, R, z_values)
    rows = [(pol.value, R, Z, quantity, value) for Z, value in zip(z_values.tolist(), values.tolist())]
    if include_unbounded:
        rows.append((pol.value, R, UNBOUNDED.value, quantity, float(quantity_values(pol, quantity, R, None))))
    logger.debug("sweep_row_completed", pol=pol.value, R=R, points=len(rows))
    return rows


def run_sweep(spec: SweepSpec, workers: int = 1) -> str:
    """
    Evaluate the sweep and render it as CSV.

    Rows are merged in R order whatever the worker count.

    Args:
        spec: Sweep description
        workers: Process count (1 evaluates in-process)

    Returns:
        str: CSV text with header pol,R,Z,quantity,value
    """
    z_values = spec.z_range.values()
    tasks: Sequence[RowTask] = [
        (spec.polarization, spec.quantity, R, z_values, spec.include_unbounded)
        for R in spec.r_range.values().tolist()
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(sweep_row, tasks))
    else:
        blocks = [sweep_row(task) for task in tasks]

    return render_csv(HEADER, (row for block in blocks for row in block))


def cmd_sweep(args: argparse.Namespace) -> int:
    spec = build_spec(args)
    workers = args.workers if args.workers is not None else settings.sweep_workers
    if workers < 1:
        raise ConfigurationError("must be at least 1", key="workers")

    logger.info(
        "sweep_started",
        pol=spec.polarization.value,
        quantity=spec.quantity,
        points=spec.r_range.count * (spec.z_range.count + int(spec.include_unbounded)),
        workers=workers,
    )
    digest = write_output(run_sweep(spec, workers), spec.output)
    logger.info("sweep_completed", sha256=digest)
    return 0
