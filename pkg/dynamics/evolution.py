"""
Single-Excitation Dynamics

Wigner-Weisskopf evolution of c_eg|eg> + c_ge|ge> through the symmetric
mode b+ = (c_eg + c_ge)/sqrt(2), decaying at Gamma+ with shift +V, and the
antisymmetric mode b- = (c_ge - c_eg)/sqrt(2), decaying at Gamma- with
shift -V. Times are in units of 1/gamma0.
"""

import math
from typing import List, Sequence, Tuple

import numpy as np
import structlog

from core.exceptions import ConfigurationError
from dynamics.entanglement import concurrence_xstate, l1_coherence
from schemas.geometry import InitialState
from schemas.results import DynamicsRow, RateSet, SingleExcitationState, TwoAtomDensityMatrix

logger = structlog.get_logger(__name__)

ROOT2 = math.sqrt(2.0)
BELL_TOLERANCE = 1e-12


def _check_time(t: float) -> float:
    if not (math.isfinite(t) and t >= 0):
        raise ConfigurationError(f"time must be finite and non-negative, got {t!r}", key="t")
    return float(t)


def _check_grid(t_grid: Sequence[float]) -> np.ndarray:
    grid = np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ConfigurationError("time grid must be a non-empty 1-D sequence", key="t_grid")
    if np.any(~np.isfinite(grid)) or np.any(grid < 0):
        raise ConfigurationError("time grid entries must be finite and non-negative", key="t_grid")
    if np.any(np.diff(grid) < 0):
        raise ConfigurationError("time grid must be sorted ascending", key="t_grid")
    return grid


# ============================================================================
# AMPLITUDES
# ============================================================================
def evolve(initial: InitialState, rates: RateSet, t: float) -> SingleExcitationState:
    """
    Evolve the atomic amplitudes to time t.

    Args:
        initial: Initial single-excitation state
        rates: Collective rates (v_shift of None means V = 0)
        t: Elapsed time in units of 1/gamma0

    Returns:
        SingleExcitationState: amplitudes b1 (|eg>) and b2 (|ge>) at t
    """
    t = _check_time(t)
    shift = rates.v_shift or 0.0
    f_plus = complex(np.exp(-(0.5 * rates.gamma_plus + 1j * shift) * t))
    f_minus = complex(np.exp(-(0.5 * rates.gamma_minus - 1j * shift) * t))
    # b+ / sqrt(2) and b- / sqrt(2); exact for psi+ and psi- at t = 0
    half_plus = 0.5 * (initial.c_eg + initial.c_ge)
    half_minus = 0.5 * (initial.c_ge - initial.c_eg)
    escaped = -2.0 * (
        abs(half_plus) ** 2 * math.expm1(-rates.gamma_plus * t)
        + abs(half_minus) ** 2 * math.expm1(-rates.gamma_minus * t)
    )
    return SingleExcitationState(
        b1=half_plus * f_plus - half_minus * f_minus,
        b2=half_plus * f_plus + half_minus * f_minus,
        t=t,
        escaped=min(max(0.0, escaped), 1.0),
    )


def collective_populations(state: SingleExcitationState) -> Tuple[float, float]:
    """Populations |b+|^2 and |b-|^2 of the superradiant and subradiant states"""
    b_plus = (state.b1 + state.b2) / ROOT2
    b_minus = (state.b2 - state.b1) / ROOT2
    return abs(b_plus) ** 2, abs(b_minus) ** 2


def density_matrix(state: SingleExcitationState) -> TwoAtomDensityMatrix:
    """Reduced two-atom density matrix after tracing out the field"""
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = abs(state.b1) ** 2
    rho[2, 2] = abs(state.b2) ** 2
    rho[1, 2] = state.b1 * state.b2.conjugate()
    rho[2, 1] = rho[1, 2].conjugate()
    rho[3, 3] = state.p_photon
    return TwoAtomDensityMatrix(matrix=rho)


# ============================================================================
# TIME SERIES
# ============================================================================
def concurrence_series(initial: InitialState, rates: RateSet, t_grid: Sequence[float]) -> List[Tuple[float, float]]:
    """(t, C(t)) on an ascending time grid"""
    grid = _check_grid(t_grid)
    return [(float(t), concurrence_xstate(evolve(initial, rates, t))) for t in grid]


def dynamics_table(initial: InitialState, rates: RateSet, t_grid: Sequence[float]) -> List[DynamicsRow]:
    """Amplitudes, escape probability, concurrence and l1 coherence per time"""
    grid = _check_grid(t_grid)
    rows = []
    for t in grid:
        state = evolve(initial, rates, t)
        rows.append(
            DynamicsRow(
                t=state.t,
                b1=state.b1,
                b2=state.b2,
                p_photon=state.p_photon,
                concurrence=concurrence_xstate(state),
                l1_coherence=l1_coherence(density_matrix(state)),
            )
        )
    logger.debug("dynamics_table_built", points=len(rows), t_max=float(grid[-1]))
    return rows


def entanglement_lifetime(initial: InitialState, rates: RateSet, threshold: float = math.exp(-1.0)) -> float:
    """
    Time for the concurrence of an evolved Bell-type state to reach `threshold`.

    Only states occupying a single collective mode decay as one exponential;
    any other input is rejected.

    Args:
        initial: Initial state populating only b+ or only b-
        rates: Collective rates
        threshold: Target concurrence, 0 < threshold <= initial concurrence

    Returns:
        float: Lifetime in units of 1/gamma0, or inf when the mode does not decay
    """
    b_plus, b_minus = initial.mode_amplitudes
    if abs(b_minus) <= BELL_TOLERANCE:
        rate = rates.gamma_plus
    elif abs(b_plus) <= BELL_TOLERANCE:
        rate = rates.gamma_minus
    else:
        raise ConfigurationError("state populates both collective modes", key="initial")

    initial_concurrence = 2.0 * abs(initial.c_eg * initial.c_ge.conjugate())
    if not 0.0 < threshold <= initial_concurrence:
        raise ConfigurationError(f"must lie in (0, {initial_concurrence:.6g}]", key="threshold")
    if rate <= 0.0:
        return math.inf
    return -math.log(threshold / initial_concurrence) / rate
