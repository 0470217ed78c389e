"""
Tests for single-excitation evolution, concurrence and coherence
"""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from core.exceptions import ConfigurationError, InvalidStateError
from dynamics import (
    collective_populations,
    concurrence_series,
    concurrence_wootters,
    concurrence_xstate,
    density_matrix,
    dynamics_table,
    entanglement_lifetime,
    evolve,
    l1_coherence,
)
from rates.closed_form import collective_rates
from schemas.geometry import UNBOUNDED, InitialState
from schemas.results import RateSet, SingleExcitationState, TwoAtomDensityMatrix

PSI_MINUS = np.array([0, -1, 1, 0], dtype=complex) / math.sqrt(2)


def pure(vector: np.ndarray) -> TwoAtomDensityMatrix:
    return TwoAtomDensityMatrix(matrix=np.outer(vector, vector.conj()))


# ============================================================================
# EVOLUTION
# ============================================================================
@pytest.mark.parametrize("initial", [InitialState.psi_plus(), InitialState.psi_minus()], ids=["psi+", "psi-"])
def test_initial_time_reproduces_input_exactly(initial):
    state = evolve(initial, RateSet.from_components(1.0, 0.4, v_shift=2.0), 0.0)
    assert state.b1 == initial.c_eg
    assert state.b2 == initial.c_ge
    assert state.p_photon == 0.0
    assert density_matrix(state).matrix[3, 3] == 0.0
    assert concurrence_xstate(state) == 2.0 * abs(initial.c_eg) * abs(initial.c_ge)


def test_escape_probability_resolves_short_times(psi_plus):
    rates = RateSet.from_components(1.0, 0.5)
    state = evolve(psi_plus, rates, 1e-12)
    assert state.p_photon == pytest.approx(1.5e-12, rel=1e-9)
    assert state.p_photon + abs(state.b1) ** 2 + abs(state.b2) ** 2 == pytest.approx(1.0, abs=1e-15)


def test_symmetric_state_decays_at_superradiant_rate(psi_plus):
    rates = RateSet.from_components(1.0, 0.6, v_shift=0.3)
    for t in (0.5, 2.0, 7.0):
        state = evolve(psi_plus, rates, t)
        assert abs(state.b1) ** 2 == pytest.approx(0.5 * math.exp(-rates.gamma_plus * t), rel=1e-13)
        assert concurrence_xstate(state) == pytest.approx(math.exp(-rates.gamma_plus * t), rel=1e-13)


def test_antisymmetric_state_decays_at_subradiant_rate(psi_minus):
    rates = RateSet.from_components(1.0, 0.6)
    for t in (0.5, 2.0, 7.0):
        assert concurrence_xstate(evolve(psi_minus, rates, t)) == pytest.approx(
            math.exp(-rates.gamma_minus * t), rel=1e-13
        )


def test_shift_leaves_bell_concurrence_unchanged(psi_minus):
    rates = collective_rates("x", 0.1, UNBOUNDED)
    base = concurrence_xstate(evolve(psi_minus, rates.model_copy(update={"v_shift": 0.0}), 50.0))
    shifted = concurrence_xstate(evolve(psi_minus, rates.model_copy(update={"v_shift": 10.0}), 50.0))
    assert shifted == pytest.approx(base, rel=1e-12)


def test_shift_transfers_excitation():
    initial = InitialState(c_eg=1.0, c_ge=0.0)
    rates = RateSet.from_components(1.0, 0.0, v_shift=math.pi / 2)
    state = evolve(initial, rates, 1.0)
    # equal decay, phase difference pi: excitation fully transferred to atom 2
    assert abs(state.b1) == pytest.approx(0.0, abs=1e-15)
    assert abs(state.b2) ** 2 == pytest.approx(math.exp(-1.0), rel=1e-13)


def test_pure_mode_populations(random_state):
    initial = random_state()
    rates = RateSet.from_components(0.8, -0.3, v_shift=1.2)
    t = 3.0
    p_plus, p_minus = collective_populations(evolve(initial, rates, t))
    b_plus, b_minus = initial.mode_amplitudes
    assert p_plus == pytest.approx(abs(b_plus) ** 2 * math.exp(-rates.gamma_plus * t), rel=1e-12)
    assert p_minus == pytest.approx(abs(b_minus) ** 2 * math.exp(-rates.gamma_minus * t), rel=1e-12)


def test_subradiant_state_survives_at_small_separation(psi_minus):
    rates = collective_rates("x", 0.1, UNBOUNDED)
    assert concurrence_xstate(evolve(psi_minus, rates, 1000.0)) == pytest.approx(0.368, abs=0.01)


def test_mirror_protected_superradiant_state(psi_plus):
    rates = collective_rates("x", 10.0, 0.05)
    assert rates.gamma_plus == pytest.approx(5.058e-4, rel=1e-3)
    assert concurrence_xstate(evolve(psi_plus, rates, 100.0)) == pytest.approx(0.9507, abs=1e-3)


def test_far_separated_atoms_decay_independently(psi_plus):
    rates = collective_rates("x", 1e3, UNBOUNDED)
    assert concurrence_xstate(evolve(psi_plus, rates, 2.0)) == pytest.approx(math.exp(-2.0), rel=5e-3)


def test_long_time_limit_is_ground_state(psi_plus):
    rho = density_matrix(evolve(psi_plus, RateSet.from_components(1.0, 0.5), 200.0))
    assert rho[4, 4].real == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("t", [-1.0, float("nan"), float("inf")])
def test_invalid_time_rejected(t, psi_plus):
    with pytest.raises(ConfigurationError) as info:
        evolve(psi_plus, RateSet.from_components(1.0, 0.0), t)
    assert info.value.key == "t"


# ============================================================================
# DENSITY MATRIX
# ============================================================================
def test_density_matrix_entries():
    state = SingleExcitationState(b1=0.6, b2=0.5j, t=1.0)
    rho = density_matrix(state)
    assert rho[2, 2] == pytest.approx(0.36)
    assert rho[3, 3] == pytest.approx(0.25)
    assert rho[2, 3] == pytest.approx(-0.3j)
    assert rho[3, 2] == pytest.approx(0.3j)
    assert rho[4, 4] == pytest.approx(0.39)
    assert rho[1, 1] == 0.0


def test_evolved_density_matrices_are_states(random_state, random_rates, rng):
    for _ in range(1000):
        rho = density_matrix(evolve(random_state(), random_rates(), rng.uniform(0.0, 10.0))).matrix
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(rho).min() >= -1e-12
        assert np.max(np.abs(rho - rho.conj().T)) <= 1e-12


def test_density_matrix_is_read_only(psi_plus):
    rho = density_matrix(evolve(psi_plus, RateSet.from_components(1.0, 0.0), 1.0))
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0


@pytest.mark.parametrize(
    "matrix",
    [np.eye(3) / 3, np.diag([0.5, 0.5, 0.5, 0.5]), np.diag([1.5, 0.0, 0.0, -0.5])],
)
def test_invalid_density_matrix_rejected(matrix):
    with pytest.raises(ValidationError):
        TwoAtomDensityMatrix(matrix=matrix)


# ============================================================================
# CONCURRENCE AND COHERENCE
# ============================================================================
def test_wootters_bell_and_product_states():
    assert concurrence_wootters(pure(PSI_MINUS)) == pytest.approx(1.0, abs=1e-12)
    assert concurrence_wootters(pure(np.array([0, 0, 0, 1], dtype=complex))) == pytest.approx(0.0, abs=1e-12)
    product = np.kron([0.6, 0.8], [1 / math.sqrt(2), 1j / math.sqrt(2)]).astype(complex)
    assert concurrence_wootters(pure(product)) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("p, expected", [(0.5, 0.25), (1.0, 1.0), (0.2, 0.0)])
def test_wootters_werner_states(p, expected):
    rho = p * np.outer(PSI_MINUS, PSI_MINUS.conj()) + (1 - p) * np.eye(4) / 4
    assert concurrence_wootters(TwoAtomDensityMatrix(matrix=rho)) == pytest.approx(expected, abs=1e-12)


def test_bell_concurrence_follows_collective_rate(psi_plus, psi_minus, random_rates, rng):
    for _ in range(100):
        rates = random_rates()
        t = rng.uniform(0.0, 10.0)
        for initial, rate in ((psi_plus, rates.gamma_plus), (psi_minus, rates.gamma_minus)):
            rho = density_matrix(evolve(initial, rates, t))
            assert concurrence_wootters(rho) == pytest.approx(math.exp(-rate * t), abs=1e-10)


def test_xstate_shortcut_matches_wootters(random_state, random_rates, rng):
    for _ in range(1000):
        state = evolve(random_state(), random_rates(), rng.uniform(0.0, 20.0))
        rho = density_matrix(state)
        assert concurrence_wootters(rho) == pytest.approx(concurrence_xstate(state), abs=1e-10)


def test_l1_coherence_equals_concurrence_for_single_excitation(random_state, random_rates, rng):
    for _ in range(100):
        state = evolve(random_state(), random_rates(), rng.uniform(0.0, 5.0))
        assert l1_coherence(density_matrix(state)) == pytest.approx(concurrence_xstate(state), abs=1e-14)


def test_unphysical_product_spectrum_rejected():
    rho = TwoAtomDensityMatrix.model_construct(matrix=np.diag([0.5, 0.5, -0.5, 0.5]).astype(complex))
    with pytest.raises(InvalidStateError):
        concurrence_wootters(rho)


# ============================================================================
# TIME SERIES
# ============================================================================
def test_concurrence_series_half_life(psi_plus):
    rates = RateSet.from_components(0.5, 0.5)
    series = concurrence_series(psi_plus, rates, [0.0, math.log(2.0)])
    assert series[0] == (0.0, pytest.approx(1.0))
    assert series[1][1] == pytest.approx(0.5, rel=1e-13)


def test_concurrence_series_is_monotone_for_bell_states(psi_minus):
    rates = collective_rates("z", 0.7, 0.4, include_shift=True)
    values = [c for _, c in concurrence_series(psi_minus, rates, np.linspace(0.0, 30.0, 61))]
    assert all(later <= earlier for earlier, later in zip(values, values[1:]))


@pytest.mark.parametrize(
    "grid",
    [[], [1.0, 0.5], [0.0, -1.0], [0.0, float("nan")], [[0.0, 1.0]]],
)
def test_invalid_time_grid_rejected(grid, psi_plus):
    with pytest.raises(ConfigurationError) as info:
        concurrence_series(psi_plus, RateSet.from_components(1.0, 0.0), grid)
    assert info.value.key == "t_grid"


def test_dynamics_table_rows(psi_plus):
    rates = RateSet.from_components(1.0, 0.2, v_shift=0.1)
    rows = dynamics_table(psi_plus, rates, [0.0, 1.0, 2.0])
    assert [row.t for row in rows] == [0.0, 1.0, 2.0]
    for row in rows:
        assert row.concurrence == pytest.approx(math.exp(-1.2 * row.t), rel=1e-13)
        assert row.p_photon == pytest.approx(1.0 - math.exp(-1.2 * row.t), abs=1e-14)
        assert row.l1_coherence == pytest.approx(row.concurrence, abs=1e-14)
        assert len(row.as_csv_fields()) == 8


# ============================================================================
# LIFETIME
# ============================================================================
def test_lifetime_of_symmetric_state(psi_plus):
    rates = RateSet.from_components(1.0, 0.25)
    assert entanglement_lifetime(psi_plus, rates) == pytest.approx(1.0 / 1.25, rel=1e-13)


def test_lifetime_custom_threshold(psi_minus):
    rates = RateSet.from_components(1.0, 0.25)
    assert entanglement_lifetime(psi_minus, rates, threshold=0.5) == pytest.approx(
        math.log(2.0) / 0.75, rel=1e-13
    )


def test_lifetime_infinite_for_dark_mode(psi_plus, psi_minus):
    rates = RateSet.from_components(0.5, -0.5)
    assert rates.gamma_plus == 0.0
    assert entanglement_lifetime(psi_plus, rates) == math.inf
    assert entanglement_lifetime(psi_minus, rates) == pytest.approx(1.0, rel=1e-13)


def test_lifetime_requires_single_mode_state():
    with pytest.raises(ConfigurationError) as info:
        entanglement_lifetime(InitialState(c_eg=1.0, c_ge=0.0), RateSet.from_components(1.0, 0.0))
    assert info.value.key == "initial"


@pytest.mark.parametrize("threshold", [0.0, -0.1, 1.5])
def test_lifetime_threshold_range(threshold, psi_plus):
    with pytest.raises(ConfigurationError) as info:
        entanglement_lifetime(psi_plus, RateSet.from_components(1.0, 0.0), threshold=threshold)
    assert info.value.key == "threshold"
