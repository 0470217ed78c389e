"""
Vacuum Field Correlators

Regularized two-point functions <E_i(x_a, t) E_i(x_b, 0)> along static
atomic trajectories next to a perfect mirror, in units hbar = c = eps0 = 1
with t in 1/omega0 (so r -> R and 2 z0 -> Z).

Each diagonal component is a free-space term evaluated at
tau = t - i*epsilon minus the mirror-image term carrying the reflection
sign diag(+1, +1, -1). The image numerators carry the real time t, as the
xx form does. Every function accepts scalar or array t, real or complex.
"""

import math
from typing import Union

import mpmath
import numpy as np
import structlog

from core.exceptions import ConfigurationError
from schemas.geometry import (
    AtomPair,
    BoundaryDistance,
    CorrelatorSpec,
    GeometryConfig,
    REFLECTION_SIGN,
    PolarizationAxis,
    is_unbounded,
)

logger = structlog.get_logger(__name__)

PREFACTOR = 1.0 / math.pi**2
EXTENDED_DPS = 48  # three times double precision

TimeLike = Union[float, complex, np.ndarray]


def _as_component(component) -> PolarizationAxis:
    try:
        return PolarizationAxis(component)
    except ValueError:
        raise ConfigurationError(f"unknown component {component!r}, expected x, y or z", key="component") from None


def _check_epsilon(epsilon: float) -> None:
    if not epsilon > 0:
        raise ConfigurationError(f"regulator must be positive, got {epsilon!r}", key="epsilon")


def _cube(x):
    return x * x * x


# ============================================================================
# PRINTED xx FORMS
# ============================================================================
def wightman_xx_same(t: TimeLike, Z: BoundaryDistance, epsilon: float) -> TimeLike:
    """
    Same-point xx correlator.

        (1/pi^2) [ 1/tau^4 - (t^2 + Z^2) / (tau^2 - Z^2)^3 ],  tau = t - i eps

    Args:
        t: Time in units of 1/omega0
        Z: Doubled mirror distance, or Unbounded (second term dropped)
        epsilon: Regulator

    Returns:
        Complex correlator value(s)
    """
    _check_epsilon(epsilon)
    t = np.asarray(t)
    tau = t - 1j * epsilon
    tau2 = tau * tau
    value = 1.0 / (tau2 * tau2)
    if not is_unbounded(Z):
        value = value - (t * t + Z * Z) / _cube(tau2 - Z * Z)
    out = PREFACTOR * value
    return complex(out) if out.ndim == 0 else out


def wightman_xx_cross(t: TimeLike, R: float, Z: BoundaryDistance, epsilon: float) -> TimeLike:
    """
    Cross xx correlator, identical for the 12 and 21 orderings.

        (1/pi^2) [ 1/(tau^2 - R^2)^2 - (t^2 + Z^2 - R^2) / (tau^2 - R^2 - Z^2)^3 ]
    """
    _check_epsilon(epsilon)
    t = np.asarray(t)
    tau = t - 1j * epsilon
    tau2 = tau * tau
    free = tau2 - R * R
    value = 1.0 / (free * free)
    if not is_unbounded(Z):
        value = value - (t * t + Z * Z - R * R) / _cube(tau2 - R * R - Z * Z)
    out = PREFACTOR * value
    return complex(out) if out.ndim == 0 else out


# ============================================================================
# GENERAL DIAGONAL COMPONENT
# ============================================================================
def _point_kernel(rho_sq, along_sq, tau_sq, numerator_sq):
    """[-(rho^2 + T^2) + 2 Delta_i^2] / (rho^2 - tau^2)^3 for displacement Delta"""
    return (2.0 * along_sq - rho_sq - numerator_sq) / _cube(rho_sq - tau_sq)


def _displacements(component: PolarizationAxis, pair: AtomPair, geometry: GeometryConfig, square=lambda x: x * x):
    """(rho^2, Delta_i^2) of the direct and image displacements"""
    R_sq = square(geometry.R) if pair == "cross" else 0.0
    direct = (R_sq, R_sq if component is PolarizationAxis.X else 0.0)
    if geometry.unbounded:
        return direct, None
    Z_sq = square(geometry.Z)
    along = {PolarizationAxis.X: R_sq, PolarizationAxis.Y: 0.0, PolarizationAxis.Z: Z_sq}[component]
    return direct, (R_sq + Z_sq, along)


def wightman_tensor(
    component: Union[PolarizationAxis, str],
    pair: AtomPair,
    t: TimeLike,
    geometry: GeometryConfig,
    epsilon: float,
) -> TimeLike:
    """
    Diagonal correlator component for the same-point or cross pair.

    The xx component delegates to the printed forms; yy and zz use the
    image construction with reflection sign diag(+1, +1, -1).
    """
    component = _as_component(component)
    if pair not in ("same", "cross"):
        raise ConfigurationError(f"unknown pair {pair!r}", key="pair")
    if component is PolarizationAxis.X:
        if pair == "same":
            return wightman_xx_same(t, geometry.Z, epsilon)
        return wightman_xx_cross(t, geometry.R, geometry.Z, epsilon)

    _check_epsilon(epsilon)
    t = np.asarray(t)
    tau = t - 1j * epsilon
    tau2 = tau * tau
    direct, image = _displacements(component, pair, geometry)
    value = _point_kernel(direct[0], direct[1], tau2, tau2)
    if image is not None:
        value = value - REFLECTION_SIGN[component] * _point_kernel(image[0], image[1], tau2, t * t)
    out = PREFACTOR * value
    return complex(out) if out.ndim == 0 else out


def evaluate_correlator(spec: CorrelatorSpec, t: TimeLike) -> TimeLike:
    """Evaluate the correlator selected by a CorrelatorSpec"""
    return wightman_tensor(spec.component, spec.pair, t, spec.geometry, spec.epsilon)


# ============================================================================
# EXTENDED PRECISION
# ============================================================================
def wightman_reference(
    component: Union[PolarizationAxis, str],
    pair: AtomPair,
    t: float,
    geometry: GeometryConfig,
    epsilon: float,
    dps: int = EXTENDED_DPS,
) -> mpmath.mpc:
    """
    Re-evaluate one correlator value in extended precision.

    Inputs are taken as exact binary values; the same rational expression
    is evaluated with `dps` decimal digits.
    """
    component = _as_component(component)
    _check_epsilon(epsilon)
    with mpmath.workdps(dps):
        t_mp = mpmath.mpf(t)
        tau = mpmath.mpc(t_mp, -mpmath.mpf(epsilon))
        tau2 = tau * tau
        direct, image = _displacements(component, pair, geometry, square=lambda x: mpmath.mpf(x) ** 2)
        value = _point_kernel(mpmath.mpf(direct[0]), mpmath.mpf(direct[1]), tau2, tau2)
        if image is not None:
            sign = REFLECTION_SIGN[component]
            value -= sign * _point_kernel(mpmath.mpf(image[0]), mpmath.mpf(image[1]), tau2, t_mp * t_mp)
        result = value / mpmath.pi**2
    logger.debug("wightman_reference_evaluated", component=component.value, pair=pair, t=t, dps=dps)
    return result
