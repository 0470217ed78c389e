"""
Time-Domain Fourier Oracle

Recovers gamma_ab / gamma0 as the frequency-omega0 Fourier transform of the
regularized correlators. For each regulator epsilon the integral over
[-t_max, t_max] is evaluated on a contour pushed below the real axis by
`contour_shift` (all poles sit at Im t = +epsilon), the epsilon -> 0 limit is
taken by polynomial extrapolation, and the result is divided by the same
pipeline's free-space same-point value.
"""

import math
from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np
import structlog

from core.exceptions import ConvergenceError, TailBoundError
from correlators.wightman import evaluate_correlator
from oracle.quadrature import gauss_rule
from rates.closed_form import as_axis
from schemas.geometry import UNBOUNDED, AtomPair, CorrelatorSpec, GeometryConfig, PolarizationAxis, boundary_label
from schemas.results import OracleResult, QuadratureParams

logger = structlog.get_logger(__name__)

RESIDUAL_FACTOR = 10.0


# ============================================================================
# CONTOUR QUADRATURE
# ============================================================================
@lru_cache(maxsize=8)
def _contour_rule(t_max: float, shift: float, width: float, nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes and complex weights (dt included) of the path
    -T -> -T - i d -> T - i d -> T.
    """
    x, w = gauss_rule(-t_max, t_max, width, nodes)
    s, ws = gauss_rule(0.0, shift, width, nodes)
    t = np.concatenate([-t_max - 1j * s, x - 1j * shift, t_max - 1j * s])
    weights = np.concatenate([-1j * ws, w.astype(complex), 1j * ws])
    t.setflags(write=False)
    weights.setflags(write=False)
    return t, weights


def _transform(spec: CorrelatorSpec, params: QuadratureParams) -> complex:
    t, weights = _contour_rule(params.t_max, params.contour_shift, params.panel_width, params.panel_nodes)
    return complex(np.sum(weights * np.exp(1j * t) * evaluate_correlator(spec, t)))


def _tail_magnitude(spec: CorrelatorSpec, t_max: float) -> float:
    """Remainder bound for |t| > t_max of an integrand decaying as 1/t^4"""
    ends = np.abs(evaluate_correlator(spec, np.array([-t_max, t_max])))
    return float(t_max / 3.0 * np.sum(ends))


def _extrapolate(epsilons: np.ndarray, values: np.ndarray) -> Tuple[float, float, Optional[float]]:
    """
    Polynomial extrapolation to epsilon -> 0.

    Returns:
        (limit, residual, order): limit from the full fit, residual against
        the linear fit of the two smallest regulators, empirical order
    """
    full = np.polynomial.polynomial.polyfit(epsilons, values, len(values) - 1)[0]
    linear = np.polynomial.polynomial.polyfit(epsilons[-2:], values[-2:], 1)[0]
    steps = np.abs(np.diff(values))
    order = None
    if steps[-1] > 0 and steps[-2] > 0:
        order = float(math.log(steps[-2] / steps[-1]) / math.log(epsilons[-3] / epsilons[-2]))
    return float(full), float(abs(full - linear)), order


def _raw_rate(spec_base: dict, params: QuadratureParams) -> Tuple[float, float, Optional[float], float]:
    epsilons = np.array(params.epsilon_sequence)
    values = np.array(
        [_transform(CorrelatorSpec(epsilon=eps, **spec_base), params).real for eps in epsilons]
    )
    limit, residual, order = _extrapolate(epsilons, values)
    tail = _tail_magnitude(CorrelatorSpec(epsilon=epsilons[-1], **spec_base), params.t_max)
    return limit, residual, order, tail


@lru_cache(maxsize=8)
def _free_reference(params: QuadratureParams) -> float:
    """Free-space same-point transform, the unit of every oracle output"""
    base = {"component": PolarizationAxis.X, "pair": "same", "geometry": GeometryConfig(R=1.0, Z=UNBOUNDED)}
    limit, residual, _, _ = _raw_rate(base, params)
    logger.debug("ft_reference_computed", reference=limit, residual=residual)
    return limit


# ============================================================================
# PUBLIC API
# ============================================================================
def ft_rate(
    component: Union[PolarizationAxis, str],
    pair: AtomPair,
    geometry: GeometryConfig,
    params: Optional[QuadratureParams] = None,
) -> OracleResult:
    """
    Fourier-transform oracle for gamma11 (pair="same") or gamma12 (pair="cross").

    Args:
        component: Diagonal correlator component, equal to the dipole axis
        pair: "same" or "cross"
        geometry: Dimensionless geometry
        params: Quadrature controls (environment defaults when omitted)

    Returns:
        OracleResult: rate in units of gamma0 with extrapolation diagnostics

    Raises:
        ConvergenceError: extrapolation residual above 10 x rel_tol
        TailBoundError: truncated remainder above abs_tol
    """
    params = params or QuadratureParams.from_settings()
    component = as_axis(component)
    reference = _free_reference(params)
    limit, residual, order, tail = _raw_rate(
        {"component": component, "pair": pair, "geometry": geometry}, params
    )

    value = limit / reference
    error = residual / abs(reference)
    tail_bound = tail / abs(reference)
    context = dict(component=component.value, pair=pair, R=geometry.R, Z=boundary_label(geometry.Z))

    if tail_bound > params.abs_tol:
        logger.debug("ft_rate_tail_exceeded", tail_bound=tail_bound, **context)
        raise TailBoundError(f"tail bound {tail_bound:.3g} exceeds abs_tol {params.abs_tol:.3g} (t_max={params.t_max})")
    if error > RESIDUAL_FACTOR * params.rel_tol:
        logger.debug("ft_rate_not_converged", residual=error, **context)
        raise ConvergenceError(
            f"epsilon extrapolation residual {error:.3g} exceeds {RESIDUAL_FACTOR * params.rel_tol:.3g} "
            f"({component.value}{component.value}, {pair}, R={geometry.R}, Z={boundary_label(geometry.Z)})"
        )

    logger.debug("ft_rate_converged", value=value, residual=error, order=order, **context)
    return OracleResult(value=value, error_estimate=error, tail_bound=tail_bound, order_estimate=order)
