"""
Core package
Units convention, physical parameters and the error hierarchy
"""
from core.exceptions import (
    ConfigurationError,
    ConvergenceError,
    InvalidStateError,
    MirrorEntError,
    OutOfDomainError,
    QuadratureOrderError,
    TailBoundError,
    ValidationFailure,
)
from core.units import config_error_from, gamma0, load_run_config, make_geometry

__all__ = [
    "ConfigurationError",
    "ConvergenceError",
    "InvalidStateError",
    "MirrorEntError",
    "OutOfDomainError",
    "QuadratureOrderError",
    "TailBoundError",
    "ValidationFailure",
    "config_error_from",
    "gamma0",
    "load_run_config",
    "make_geometry",
]
