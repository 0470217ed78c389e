"""
Units and Physical Parameters

Internal units are hbar = c = eps0 = 1 with omega0 = 1 and gamma0 = 1.
Conversion to SI happens only here, at the library boundary.
"""

import math
from pathlib import Path
from typing import Union

import structlog
from pydantic import ValidationError
from scipy import constants

from core.exceptions import ConfigurationError
from schemas.geometry import (
    UNBOUNDED,
    AtomParams,
    BoundaryDistance,
    GeometryConfig,
    RunConfig,
    is_unbounded,
)

logger = structlog.get_logger(__name__)


def gamma0(params: AtomParams) -> float:
    """
    Free-space spontaneous emission rate of one atom.

    Args:
        params: Atomic parameters

    Returns:
        float: 1.0 in normalized mode, otherwise
            d^2 omega0^3 / (3 pi hbar eps0 c^3) in 1/s
    """
    if params.mode == "normalized":
        return 1.0
    return (
        params.dipole_sq
        * params.omega0**3
        / (3.0 * math.pi * constants.hbar * constants.epsilon_0 * constants.c**3)
    )


def _speed_of_light(params: AtomParams) -> float:
    return constants.c if params.mode == "physical" else 1.0


def make_geometry(r: float, z0: Union[float, str, None], params: AtomParams) -> GeometryConfig:
    """
    Convert lengths into the dimensionless geometry.

    Args:
        r: Interatomic distance
        z0: Distance of the atoms from the mirror; None or "unbounded" for free space
        params: Atomic parameters supplying omega0 (and c in physical mode)

    Returns:
        GeometryConfig: R = r omega0 / c, Z = 2 z0 omega0 / c
    """
    if not r > 0:
        raise ConfigurationError("must be positive", key="r")
    scale = params.omega0 / _speed_of_light(params)
    if z0 is None or is_unbounded(z0) or (isinstance(z0, str) and z0.lower() == UNBOUNDED.value):
        z_value: BoundaryDistance = UNBOUNDED
    else:
        if not z0 > 0:
            raise ConfigurationError("must be positive or 'unbounded'", key="z0")
        z_value = 2.0 * z0 * scale
    try:
        return GeometryConfig(R=r * scale, Z=z_value)
    except ValidationError as exc:
        raise config_error_from(exc) from exc


def config_error_from(exc: ValidationError) -> ConfigurationError:
    """Turn the first pydantic error into a ConfigurationError naming its field"""
    first = exc.errors()[0]
    key = ".".join(str(part) for part in first.get("loc", ())) or None
    return ConfigurationError(first.get("msg", str(exc)), key=key)


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """
    Read and validate a JSON run configuration.

    Args:
        path: Location of the JSON document

    Returns:
        RunConfig: Validated configuration

    Raises:
        ConfigurationError: Unreadable file or invalid key
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot read {path}: {exc.strerror}", key="config") from exc

    try:
        config = RunConfig.model_validate_json(text)
    except ValidationError as exc:
        raise config_error_from(exc) from exc

    logger.debug("run_config_loaded", path=str(path), mode=config.mode, polarization=config.polarization.value)
    return config
