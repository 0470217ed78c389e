"""
Shared Command Options
Geometry flags and their merge with an optional JSON run configuration
"""
import argparse
from dataclasses import dataclass
from typing import Optional

import structlog

from core.exceptions import ConfigurationError
from core.units import load_run_config, make_geometry
from rates.closed_form import as_axis
from schemas.geometry import UNBOUNDED, AtomParams, GeometryConfig, PolarizationAxis, RunConfig

logger = structlog.get_logger(__name__)

POLARIZATIONS = [axis.value for axis in PolarizationAxis]


@dataclass(frozen=True)
class ResolvedRun:
    """Polarization, geometry and atom parameters after flag/config merge"""

    pol: PolarizationAxis
    geometry: GeometryConfig
    params: AtomParams


def add_config_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON run configuration; flags override its keys")


def add_polarization_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pol", choices=POLARIZATIONS, help="Dipole axis (x and y parallel, z normal to the mirror)")


def add_geometry_arguments(parser: argparse.ArgumentParser) -> None:
    """--pol, --R, --Z/--unbounded and --config"""
    add_polarization_argument(parser)
    parser.add_argument("--R", type=float, help="Separation r omega0 / c")
    boundary = parser.add_mutually_exclusive_group()
    boundary.add_argument("--Z", type=float, help="Doubled mirror distance 2 z0 omega0 / c")
    boundary.add_argument("--unbounded", action="store_true", help="Free space, no mirror")
    add_config_argument(parser)


def read_config(args: argparse.Namespace) -> Optional[RunConfig]:
    if not getattr(args, "config", None):
        return None
    return load_run_config(args.config)


def resolve_polarization(args: argparse.Namespace, config: Optional[RunConfig]) -> PolarizationAxis:
    if args.pol is not None:
        return as_axis(args.pol)
    if config is not None:
        return config.polarization
    raise ConfigurationError("required, pass --pol or --config", key="pol")


def resolve_run(args: argparse.Namespace) -> ResolvedRun:
    """
    Merge geometry flags over the run configuration.

    Args:
        args: Parsed command-line arguments

    Returns:
        ResolvedRun: validated inputs, before any computation

    Raises:
        ConfigurationError: A required value is missing or invalid
    """
    config = read_config(args)
    params = config.atom_params if config else AtomParams()
    pol = resolve_polarization(args, config)
    base = make_geometry(config.r, config.z0, params) if config else None

    R = args.R if args.R is not None else (base.R if base else None)
    if R is None:
        raise ConfigurationError("required, pass --R or --config", key="R")

    if args.unbounded:
        Z = UNBOUNDED
    elif args.Z is not None:
        Z = args.Z
    elif base is not None:
        Z = base.Z
    else:
        raise ConfigurationError("required, pass --Z, --unbounded or --config", key="Z")

    geometry = GeometryConfig(R=R, Z=Z)
    logger.debug("run_resolved", pol=pol.value, R=geometry.R, unbounded=geometry.unbounded, mode=params.mode)
    return ResolvedRun(pol=pol, geometry=geometry, params=params)
