"""
Dynamics Command
Concurrence time series of an initial single-excitation state
"""
import argparse

import numpy as np
import structlog

from commands.options import add_geometry_arguments, resolve_run
from core.exceptions import ConfigurationError
from dynamics.evolution import dynamics_table
from rates.closed_form import collective_rates
from schemas.geometry import InitialState, boundary_label
from utils.file_utils import render_csv, write_output

logger = structlog.get_logger(__name__)

HEADER = ("t", "re_b1", "im_b1", "re_b2", "im_b2", "p_photon", "concurrence", "l1_coherence")


def register(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("dynamics", help="Write b1(t), b2(t) and the concurrence as CSV")
    add_geometry_arguments(parser)
    parser.add_argument("--state", choices=["psi+", "psi-", "custom"], default="psi+")
    parser.add_argument("--c-eg", default=None, help="Amplitude of |eg> for --state custom, e.g. 0.6+0.8j")
    parser.add_argument("--c-ge", default=None, help="Amplitude of |ge> for --state custom")
    parser.add_argument("--tmax", type=float, default=100.0, help="Final time in units of 1/gamma0")
    parser.add_argument("--steps", type=int, default=100, help="Number of time steps after t=0")
    parser.add_argument("--shift", action="store_true", help="Include the dipole-dipole potential V")
    parser.add_argument("--out", default=None, help="CSV destination (default stdout)")
    parser.set_defaults(handler=cmd_dynamics)
    return parser


def _amplitude(text: str | None, key: str) -> complex:
    if text is None:
        raise ConfigurationError("required with --state custom", key=key)
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise ConfigurationError(f"not a complex number: {text!r}", key=key) from None


def initial_state(args: argparse.Namespace) -> InitialState:
    if args.state == "psi+":
        return InitialState.psi_plus()
    if args.state == "psi-":
        return InitialState.psi_minus()
    return InitialState(c_eg=_amplitude(args.c_eg, "c_eg"), c_ge=_amplitude(args.c_ge, "c_ge"))


def time_grid(t_max: float, steps: int) -> np.ndarray:
    """steps + 1 equally spaced times from 0 to t_max"""
    if not (np.isfinite(t_max) and t_max > 0):
        raise ConfigurationError("must be positive", key="tmax")
    if steps < 1:
        raise ConfigurationError("must be at least 1", key="steps")
    return np.linspace(0.0, t_max, steps + 1)


def cmd_dynamics(args: argparse.Namespace) -> int:
    run = resolve_run(args)
    initial = initial_state(args)
    grid = time_grid(args.tmax, args.steps)
    rates = collective_rates(run.pol, run.geometry.R, run.geometry.Z, include_shift=args.shift)

    logger.info(
        "dynamics_started",
        state=args.state,
        pol=run.pol.value,
        R=run.geometry.R,
        Z=boundary_label(run.geometry.Z),
        gamma_plus=rates.gamma_plus,
        gamma_minus=rates.gamma_minus,
    )
    rows = dynamics_table(initial, rates, grid)
    write_output(render_csv(HEADER, (row.as_csv_fields() for row in rows)), args.out)
    return 0
