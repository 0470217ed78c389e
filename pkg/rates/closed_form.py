"""
Closed-Form Collective Rates

Spontaneous emission rate gamma11, cross rate gamma12, collective rates
Gamma+- and the dipole-dipole shift V for two identical atoms in front of
a perfect mirror. The mirror is an image dipole reflected with the sign
matrix diag(+1, +1, -1); every quantity is the free-space kernel minus
the signed image kernel. All rates are in units of gamma0.
"""

from typing import Dict, Optional, Union

import numpy as np
import structlog

from core.exceptions import ConfigurationError
from core.units import gamma0
from rates.series import (
    SERIES_THRESHOLD,
    ArrayLike,
    complement_b,
    kernel_a,
    kernel_a_conjugate,
    kernel_b,
    kernel_b_conjugate,
    sinc,
    uses_complement_series,
    uses_series,
)
from schemas.geometry import (
    REFLECTION_SIGN,
    AtomParams,
    BoundaryDistance,
    PolarizationAxis,
    coerce_boundary,
    is_unbounded,
)
from schemas.results import RateQuantity, RateSet

logger = structlog.get_logger(__name__)


# ============================================================================
# ARGUMENT HANDLING
# ============================================================================
def as_axis(pol: Union[PolarizationAxis, str]) -> PolarizationAxis:
    try:
        return PolarizationAxis(pol)
    except ValueError:
        raise ConfigurationError(f"unknown polarization {pol!r}, expected x, y or z", key="pol") from None


def _check_separation(R: float) -> float:
    if not (np.isfinite(R) and R > 0):
        raise ConfigurationError(f"must be positive and finite, got {R!r}", key="R")
    return float(R)


def _check_boundary(Z: BoundaryDistance) -> BoundaryDistance:
    try:
        return coerce_boundary(Z)
    except ValueError as exc:
        raise ConfigurationError(f"{exc}, got {Z!r}", key="Z") from None


# ============================================================================
# IMAGE KERNELS
# ============================================================================
def _oblique(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    """
    Kernel of a dipole component at angle arccos(a/D) to the displacement.

    a is the displacement along the dipole, b the perpendicular part,
    D = sqrt(a^2 + b^2).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = np.hypot(a, b)
    with np.errstate(divide="ignore", invalid="ignore"):
        printed = (3.0 / (2.0 * d**3)) * (
            (b * b - 2.0 * a * a) / d * np.cos(d) + ((2.0 * a * a - b * b) / (d * d) + b * b) * np.sin(d)
        )
        near = 1.5 * (b * b) / (d * d) * sinc(d) - 0.5 * (b * b - 2.0 * a * a) / (d * d) * kernel_a(d)
    out = np.where(d < SERIES_THRESHOLD, near, printed)
    return float(out) if out.ndim == 0 else out


def _oblique_conjugate(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    d = np.hypot(a, b)
    return (3.0 / (2.0 * d**3)) * (
        (b * b - 2.0 * a * a) / d * np.sin(d) - ((2.0 * a * a - b * b) / (d * d) + b * b) * np.cos(d)
    )


def _image_kernel(pol: PolarizationAxis, R: ArrayLike, Z: ArrayLike) -> ArrayLike:
    if pol is PolarizationAxis.X:
        return _oblique(R, Z)
    if pol is PolarizationAxis.Y:
        return kernel_b(np.hypot(R, Z))
    return _oblique(Z, R)


def _image_kernel_conjugate(pol: PolarizationAxis, R: ArrayLike, Z: ArrayLike) -> ArrayLike:
    if pol is PolarizationAxis.X:
        return _oblique_conjugate(R, Z)
    if pol is PolarizationAxis.Y:
        return kernel_b_conjugate(np.hypot(R, Z))
    return _oblique_conjugate(Z, R)


# ============================================================================
# VECTORIZED RATES (no argument validation; None means unbounded)
# ============================================================================
def self_rate_values(pol: PolarizationAxis, Z: Optional[ArrayLike]) -> ArrayLike:
    """gamma11 on an array of boundary distances"""
    if Z is None:
        return 1.0
    if pol is PolarizationAxis.Z:
        return 1.0 + kernel_a(Z)
    return complement_b(Z)


def cross_rate_values(pol: PolarizationAxis, R: ArrayLike, Z: Optional[ArrayLike]) -> ArrayLike:
    """gamma12 on broadcastable arrays of separations and boundary distances"""
    free = kernel_a(R) if pol is PolarizationAxis.X else kernel_b(R)
    if Z is None:
        return free
    return free - REFLECTION_SIGN[pol] * _image_kernel(pol, R, Z)


def shift_values(pol: PolarizationAxis, R: ArrayLike, Z: Optional[ArrayLike]) -> ArrayLike:
    """
    Dipole-dipole potential V: one half of the Hilbert-conjugate of gamma12.

    Each oscillatory term of gamma12 has sin -> -cos and cos -> sin with
    its rational prefactor kept.
    """
    free = kernel_a_conjugate(R) if pol is PolarizationAxis.X else kernel_b_conjugate(R)
    if Z is None:
        return 0.5 * free
    return 0.5 * (free - REFLECTION_SIGN[pol] * _image_kernel_conjugate(pol, R, Z))


def quantity_values(pol: PolarizationAxis, quantity: RateQuantity, R: ArrayLike, Z: Optional[ArrayLike]) -> np.ndarray:
    """
    One RateSet quantity on broadcastable (R, Z) arrays.

    Collective rates follow the operation order of RateSet.from_components,
    so gamma_plus + gamma_minus == 2 gamma11 holds elementwise.
    """
    R = np.asarray(R, dtype=float)
    shape = R.shape if Z is None else np.broadcast(R, Z).shape
    if quantity == "v_shift":
        return np.broadcast_to(np.asarray(shift_values(pol, R, Z), dtype=float), shape)

    g11 = np.broadcast_to(np.asarray(self_rate_values(pol, Z), dtype=float), shape)
    g12 = np.broadcast_to(np.asarray(cross_rate_values(pol, R, Z), dtype=float), shape)
    if quantity == "gamma11":
        return g11
    if quantity == "gamma12":
        return g12

    total = 2.0 * g11
    larger = np.where(g12 >= 0, g11 + g12, g11 - g12)
    smaller = total - larger
    if quantity == "gamma_plus":
        return np.where(g12 >= 0, larger, smaller)
    return np.where(g12 >= 0, smaller, larger)


# ============================================================================
# SCALAR OPERATIONS
# ============================================================================
def gamma11(pol: Union[PolarizationAxis, str], Z: BoundaryDistance) -> float:
    """
    Boundary-modified spontaneous emission rate of one atom.

    Args:
        pol: Dipole axis
        Z: Doubled mirror distance 2 z0 omega0 / c, or Unbounded

    Returns:
        float: gamma11 / gamma0 (exactly 1.0 when unbounded)
    """
    axis = as_axis(pol)
    Z = _check_boundary(Z)
    if is_unbounded(Z):
        return 1.0
    return float(self_rate_values(axis, Z))


def gamma12(pol: Union[PolarizationAxis, str], R: float, Z: BoundaryDistance) -> float:
    """
    Cross-atom modulation of the emission rate.

    Args:
        pol: Dipole axis
        R: Separation r omega0 / c
        Z: Doubled mirror distance, or Unbounded

    Returns:
        float: gamma12 / gamma0
    """
    axis = as_axis(pol)
    R = _check_separation(R)
    Z = _check_boundary(Z)
    return float(cross_rate_values(axis, R, None if is_unbounded(Z) else Z))


def dipole_shift(pol: Union[PolarizationAxis, str], R: float, Z: BoundaryDistance) -> float:
    """Dipole-dipole potential V in units of gamma0"""
    axis = as_axis(pol)
    R = _check_separation(R)
    Z = _check_boundary(Z)
    return float(shift_values(axis, R, None if is_unbounded(Z) else Z))


def _provenance(pol: PolarizationAxis, R: float, Z: BoundaryDistance, include_shift: bool) -> Dict[str, str]:
    def tag(flag) -> str:
        return "series" if bool(flag) else "closed-form"

    if is_unbounded(Z):
        self_tag, cross_tag = "closed-form", tag(uses_series(R))
    else:
        self_tag = tag(uses_series(Z) if pol is PolarizationAxis.Z else uses_complement_series(Z))
        cross_tag = tag(uses_series(R) or uses_series(np.hypot(R, Z)))
    provenance = {
        "gamma11": self_tag,
        "gamma12": cross_tag,
        "gamma_plus": "series" if "series" in (self_tag, cross_tag) else "closed-form",
    }
    provenance["gamma_minus"] = provenance["gamma_plus"]
    if include_shift:
        provenance["v_shift"] = "closed-form"
    return provenance


def collective_rates(
    pol: Union[PolarizationAxis, str],
    R: float,
    Z: BoundaryDistance,
    include_shift: bool = False,
) -> RateSet:
    """
    Superradiant and subradiant rates Gamma+- = gamma11 +- gamma12.

    Args:
        pol: Dipole axis
        R: Separation r omega0 / c
        Z: Doubled mirror distance, or Unbounded
        include_shift: Also evaluate the dipole-dipole potential V

    Returns:
        RateSet: Rates in units of gamma0 with provenance tags
    """
    axis = as_axis(pol)
    R = _check_separation(R)
    Z = _check_boundary(Z)
    g11 = gamma11(axis, Z)
    g12 = gamma12(axis, R, Z)
    v = dipole_shift(axis, R, Z) if include_shift else None
    rates = RateSet.from_components(g11, g12, v_shift=v, provenance=_provenance(axis, R, Z, include_shift))

    logger.debug(
        "rates_evaluated",
        pol=axis.value,
        R=R,
        Z=Z if not is_unbounded(Z) else "unbounded",
        gamma_plus=rates.gamma_plus,
        gamma_minus=rates.gamma_minus,
    )
    return rates


def rate_set_physical(rates: RateSet, params: AtomParams) -> RateSet:
    """Rescale a normalized RateSet to 1/s using gamma0(params)"""
    if rates.units == "per_second":
        return rates
    scale = gamma0(params)
    return rates.model_copy(
        update={
            "gamma11": rates.gamma11 * scale,
            "gamma12": rates.gamma12 * scale,
            "gamma_plus": rates.gamma_plus * scale,
            "gamma_minus": rates.gamma_minus * scale,
            "v_shift": None if rates.v_shift is None else rates.v_shift * scale,
            "units": "per_second",
        }
    )
