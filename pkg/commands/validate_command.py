"""
Validate Command
Triangular check of the closed forms against the numerical oracles
"""
import argparse
from typing import List

import structlog
from rich.console import Console
from rich.table import Table

from config.settings import settings
from core.exceptions import ConfigurationError, ConvergenceError, ValidationFailure
from oracle.report import run_validation
from schemas.geometry import boundary_label
from schemas.results import QuadratureParams, ValidationReport
from utils.file_utils import format_number, render_json, write_output

logger = structlog.get_logger(__name__)


def register(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("validate", help="Compare closed forms with the Fourier, mode-sum and PV oracles")
    parser.add_argument("--values", default=None, help="Comma-separated R and Z grid values (default from settings)")
    parser.add_argument("--tolerance", type=float, default=None, help="Pairwise absolute tolerance in gamma0")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes (default from settings)")
    parser.add_argument("--out", default=None, help="JSON report destination (default stdout)")
    parser.set_defaults(handler=cmd_validate)
    return parser


def parse_values(text: str | None) -> List[float]:
    if text is None:
        return settings.validation_grid_values
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError(f"expected comma-separated numbers, got {text!r}", key="values") from None
    if not values or any(not v > 0 for v in values):
        raise ConfigurationError("values must be positive", key="values")
    return values


def report_payload(report: ValidationReport) -> list:
    """JSON array: rate records in grid order, then shift records"""
    return [record.model_dump(mode="json") for record in [*report.records, *report.shift_records]]


def print_summary(report: ValidationReport) -> None:
    """Failing records as a table on stderr"""
    console = Console(stderr=True, width=120)
    failures = report.failures
    console.print(
        f"validation: {len(report.records)} rate points, {len(report.shift_records)} shift checks, "
        f"{len(failures)} failing"
    )
    if not failures:
        return

    table = Table(title="failing records")
    for column in ("check", "pol", "pair", "R", "Z", "closed_form", "oracle", "diff", "converged"):
        table.add_column(column)
    for record in failures:
        rate = record.check == "rate"
        oracle = record.ft_oracle if rate else record.pv_oracle
        diff = record.abs_diff if rate else record.rel_diff
        table.add_row(
            record.check,
            record.pol.value,
            record.pair if rate else "-",
            format_number(record.R),
            format_number(boundary_label(record.Z)),
            format_number(record.closed_form),
            "-" if oracle is None else format_number(oracle),
            "-" if diff is None else format_number(diff),
            str(record.converged),
        )
    console.print(table)


def cmd_validate(args: argparse.Namespace) -> int:
    """
    Run the validation and write the JSON report.

    Raises:
        ConvergenceError: An oracle did not converge (reported before tolerance failures)
        ValidationFailure: Some converged comparison exceeded its tolerance
    """
    values = parse_values(args.values)
    tolerance = args.tolerance if args.tolerance is not None else settings.validation_tolerance
    workers = args.workers if args.workers is not None else settings.sweep_workers
    if workers < 1:
        raise ConfigurationError("must be at least 1", key="workers")

    report = run_validation(
        values,
        params=QuadratureParams.from_settings(),
        tolerance=tolerance,
        shift_tolerance=settings.shift_tolerance,
        workers=workers,
    )
    write_output(render_json(report_payload(report)), args.out)
    print_summary(report)

    if not report.converged:
        raise ConvergenceError(f"{sum(not r.converged for r in report.failures)} checks did not converge")
    if not report.passed:
        logger.warning("validation_failed", failures=len(report.failures))
        raise ValidationFailure(f"{len(report.failures)} checks exceeded tolerance")
    return 0
