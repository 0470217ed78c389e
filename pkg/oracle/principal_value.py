"""
Principal-Value Oracle for the Dipole-Dipole Shift

    V = -(1/2pi) P Int_{-inf}^{inf} G(w) / (w - w0) dw
      = -(1/pi)  P Int_0^inf G(w) w / (w^2 - w0^2) dw      (G odd in w)

with G(w) = w^3 [F(w d) - s_j F(w d')] the cross-rate spectrum built from
spherical Bessel functions. The pole at w0 = 1 is removed by symmetric
subtraction on (0, 2). Above that the integrand oscillates without
decaying, so the tail is summed either with a smooth C-infinity taper or
as a windowed mean of partial integrals; both are checked by doubling the
cutoff.
"""

import math
from typing import List, Literal, Optional, Tuple, Union

import numpy as np
import structlog
from scipy.special import spherical_jn

from core.exceptions import ConvergenceError, OutOfDomainError
from oracle.quadrature import gauss_rule, panel_edges, panel_rule
from rates.closed_form import as_axis
from schemas.geometry import REFLECTION_SIGN, GeometryConfig, PolarizationAxis, boundary_label
from schemas.results import OracleResult, QuadratureParams

logger = structlog.get_logger(__name__)

TailMode = Literal["taper", "cesaro"]

NEAR_ZONE_LIMIT = 1e6  # largest admissible 1/R^3 in units of gamma0
MIN_CUTOFF = 8.0


# ============================================================================
# SPECTRUM
# ============================================================================
def _dipole_kernel(x: np.ndarray, along_sq: float) -> np.ndarray:
    """(3/2)(1 - n^2) j0(x) - (1/2)(1 - 3 n^2) 3 j1(x)/x, n^2 = along_sq"""
    return 1.5 * (1.0 - along_sq) * spherical_jn(0, x) - 0.5 * (1.0 - 3.0 * along_sq) * 3.0 * spherical_jn(1, x) / x


def _displacements(pol: PolarizationAxis, geometry: GeometryConfig) -> List[Tuple[float, float, float]]:
    """(distance, n_j^2, weight) of the direct and image terms of the cross rate"""
    R = geometry.R
    terms = [(R, 1.0 if pol is PolarizationAxis.X else 0.0, 1.0)]
    if not geometry.unbounded:
        D = math.hypot(R, geometry.Z)
        along = {PolarizationAxis.X: (R / D) ** 2, PolarizationAxis.Y: 0.0, PolarizationAxis.Z: (geometry.Z / D) ** 2}
        terms.append((D, along[pol], -REFLECTION_SIGN[pol]))
    return terms


def _spectrum(omega: np.ndarray, terms: List[Tuple[float, float, float]]) -> np.ndarray:
    total = np.zeros_like(omega)
    for distance, along_sq, weight in terms:
        total += weight * _dipole_kernel(omega * distance, along_sq)
    return omega**3 * total


def smooth_taper(s: np.ndarray) -> np.ndarray:
    """C-infinity step: 1 for s <= 1/2, 0 for s >= 1"""
    x = np.clip(2.0 * (1.0 - s), 0.0, 1.0)

    def h(u):
        with np.errstate(divide="ignore"):
            return np.where(u > 0, np.exp(-1.0 / np.where(u > 0, u, 1.0)), 0.0)

    return h(x) / (h(x) + h(1.0 - x))


# ============================================================================
# PRINCIPAL VALUE
# ============================================================================
def _principal_value(
    terms: List[Tuple[float, float, float]],
    cutoff: float,
    width: float,
    nodes: int,
    tail: TailMode,
) -> float:
    def q(omega: np.ndarray) -> np.ndarray:
        return _spectrum(omega, terms) * omega / (omega + 1.0)

    # P Int_0^2 q/(w-1) = Int_0^1 [q(1+u) - q(1-u)]/u du
    u, wu = gauss_rule(0.0, 1.0, width, nodes)
    near = float(np.sum(wu * (q(1.0 + u) - q(1.0 - u)) / u))

    edges = panel_edges(2.0, cutoff, width)
    omega, weights = panel_rule(edges, nodes)
    integrand = q(omega) / (omega - 1.0)

    if tail == "taper":
        far = float(np.sum(weights * integrand * smooth_taper(omega / cutoff)))
        return near + far

    # windowed mean of the partial integrals over the last half of the range
    partial = near + np.concatenate([[0.0], np.cumsum(np.sum(weights * integrand, axis=1))])
    mask = edges >= 0.5 * cutoff
    window = np.sin(np.pi * (edges[mask] - 0.5 * cutoff) / (0.5 * cutoff)) ** 2
    return float(np.sum(window * partial[mask]) / np.sum(window))


def pv_shift(
    pol: Union[PolarizationAxis, str],
    geometry: GeometryConfig,
    params: Optional[QuadratureParams] = None,
    tail: TailMode = "taper",
) -> OracleResult:
    """
    Principal-value oracle for the dipole-dipole potential V.

    Args:
        pol: Dipole axis
        geometry: Dimensionless geometry
        params: Quadrature controls (environment defaults when omitted)
        tail: "taper" or "cesaro" treatment of the oscillating tail

    Returns:
        OracleResult: V in units of gamma0, cutoff and doubling change

    Raises:
        OutOfDomainError: R so small that 1/R^3 exceeds 1e6
        ConvergenceError: V still changing after max_refinements cutoff doublings
    """
    params = params or QuadratureParams.from_settings()
    axis = as_axis(pol)
    if geometry.R**-3 > NEAR_ZONE_LIMIT:
        raise OutOfDomainError(f"near-zone magnitude 1/R^3 = {geometry.R**-3:.3g} exceeds {NEAR_ZONE_LIMIT:g}", key="R")

    terms = _displacements(axis, geometry)
    distances = [d for d, _, _ in terms]
    cutoff = max(MIN_CUTOFF, params.pv_periods * 2.0 * math.pi / min(distances))
    width = min(params.panel_width, 1.0 / max(distances))

    value = -_principal_value(terms, cutoff, width, params.panel_nodes, tail) / math.pi
    for _ in range(params.max_refinements + 1):
        cutoff *= 2.0
        refined = -_principal_value(terms, cutoff, width, params.panel_nodes, tail) / math.pi
        change = abs(refined - value)
        value = refined
        if change <= max(params.abs_tol, params.rel_tol * abs(refined)):
            break
    else:
        context = dict(pol=axis.value, R=geometry.R, Z=boundary_label(geometry.Z), tail=tail, cutoff=cutoff)
        logger.debug("pv_shift_not_converged", change=change, **context)
        raise ConvergenceError(f"doubling the frequency cutoff to {cutoff:.4g} still changed V by {change:.3g} ({context})")

    logger.debug(
        "pv_shift_converged",
        pol=axis.value,
        R=geometry.R,
        Z=boundary_label(geometry.Z),
        tail=tail,
        cutoff=cutoff,
        value=value,
        change=change,
    )
    return OracleResult(value=value, error_estimate=change, cutoff=cutoff)
