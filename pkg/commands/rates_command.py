"""
Rates Command
Single-point query of the collective rates
"""
import argparse

import structlog
from rich.console import Console
from rich.table import Table

from commands.options import add_geometry_arguments, resolve_run
from rates.closed_form import collective_rates, rate_set_physical
from schemas.geometry import boundary_label
from utils.file_utils import format_number

logger = structlog.get_logger(__name__)

QUANTITIES = ("gamma11", "gamma12", "gamma_plus", "gamma_minus", "v_shift")


def register(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("rates", help="Print gamma11, gamma12, Gamma+- and optionally V")
    add_geometry_arguments(parser)
    parser.add_argument("--shift", action="store_true", help="Also evaluate the dipole-dipole potential V")
    parser.set_defaults(handler=cmd_rates)
    return parser


def cmd_rates(args: argparse.Namespace) -> int:
    """
    Print the RateSet of one geometry.

    Physical-mode configurations add a column in 1/s.
    """
    run = resolve_run(args)
    rates = collective_rates(run.pol, run.geometry.R, run.geometry.Z, include_shift=args.shift)
    physical = rate_set_physical(rates, run.params) if run.params.mode == "physical" else None

    table = Table(title=f"pol={run.pol.value}  R={format_number(run.geometry.R)}  Z={format_number(boundary_label(run.geometry.Z))}")
    table.add_column("quantity")
    table.add_column("value (gamma0)", justify="right")
    if physical is not None:
        table.add_column("value (1/s)", justify="right")
    table.add_column("provenance")

    for name in QUANTITIES:
        value = getattr(rates, name)
        if value is None:
            continue
        row = [name, format_number(value)]
        if physical is not None:
            row.append(format_number(getattr(physical, name)))
        row.append(rates.provenance.get(name, ""))
        table.add_row(*row)

    Console(width=120).print(table)
    logger.info("rates_reported", pol=run.pol.value, R=run.geometry.R, Z=boundary_label(run.geometry.Z))
    return 0
