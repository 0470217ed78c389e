"""
Angular Mode-Sum Oracle

gamma_ab,jj / gamma0 = (3/8pi) Int dOmega (1 - k_j^2) [cos(k.d) - s_j cos(k.d')]

over the unit shell |k| = omega0/c, with d the direct displacement, d' the
image displacement and s_j the reflection sign of the dipole axis. The
sphere rule is Gauss-Legendre in cos(theta) times the trapezoid rule in phi.
"""

from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np
import structlog
from numpy.polynomial.legendre import leggauss

from core.exceptions import QuadratureOrderError
from rates.closed_form import as_axis
from schemas.geometry import REFLECTION_SIGN, AtomPair, GeometryConfig, PolarizationAxis, boundary_label
from schemas.results import OracleResult, QuadratureParams

logger = structlog.get_logger(__name__)

_AXIS_INDEX = {PolarizationAxis.X: 0, PolarizationAxis.Y: 1, PolarizationAxis.Z: 2}


@lru_cache(maxsize=8)
def sphere_rule(n_theta: int, n_phi: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Unit wave vectors and weights of the product rule.

    Returns:
        (khat, weights): shapes (n_theta*n_phi, 3) and (n_theta*n_phi,);
            the weights sum to 4 pi
    """
    cos_theta, w_theta = leggauss(n_theta)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    sin_theta = np.sqrt(1.0 - cos_theta**2)
    khat = np.stack(
        [
            np.outer(sin_theta, np.cos(phi)).ravel(),
            np.outer(sin_theta, np.sin(phi)).ravel(),
            np.repeat(cos_theta, n_phi),
        ],
        axis=1,
    )
    weights = np.repeat(w_theta, n_phi) * (2.0 * np.pi / n_phi)
    khat.setflags(write=False)
    weights.setflags(write=False)
    return khat, weights


def _mode_sum(pol: PolarizationAxis, pair: AtomPair, geometry: GeometryConfig, order: Tuple[int, int]) -> float:
    khat, weights = sphere_rule(*order)
    projector = 1.0 - khat[:, _AXIS_INDEX[pol]] ** 2
    separation = geometry.R if pair == "cross" else 0.0

    phase = np.cos(khat[:, 0] * separation)
    if not geometry.unbounded:
        image = np.cos(khat[:, 0] * separation + khat[:, 2] * geometry.Z)
        phase = phase - REFLECTION_SIGN[pol] * image
    return float(3.0 / (8.0 * np.pi) * np.sum(weights * projector * phase))


def modesum_rate(
    pol: Union[PolarizationAxis, str],
    pair: AtomPair,
    geometry: GeometryConfig,
    params: Optional[QuadratureParams] = None,
) -> OracleResult:
    """
    Mode-sum oracle for gamma11 (pair="same") or gamma12 (pair="cross").

    Both node counts are doubled until two successive rules agree within
    max(abs_tol, rel_tol * |value|); the finer value is returned. Still
    disagreeing after max_refinements extra doublings raises
    QuadratureOrderError.
    """
    params = params or QuadratureParams.from_settings()
    axis = as_axis(pol)
    order = params.angular_order
    value = _mode_sum(axis, pair, geometry, order)
    for _ in range(params.max_refinements + 1):
        order = (2 * order[0], 2 * order[1])
        refined = _mode_sum(axis, pair, geometry, order)
        change = abs(refined - value)
        value = refined
        if change <= max(params.abs_tol, params.rel_tol * abs(refined)):
            break
    else:
        raise QuadratureOrderError(
            f"doubling the angular order to {order[0]}x{order[1]} still changed the {pair} rate by {change:.3g} "
            f"(pol={axis.value}, R={geometry.R}, Z={boundary_label(geometry.Z)})"
        )

    logger.debug(
        "modesum_rate_converged",
        pol=axis.value,
        pair=pair,
        R=geometry.R,
        Z=boundary_label(geometry.Z),
        value=value,
        change=change,
        angular_order=order,
    )
    return OracleResult(value=value, error_estimate=change, angular_order=order)
