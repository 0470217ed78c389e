"""
Shared fixtures for the test suite
"""
import json

import numpy as np
import pytest

from schemas.geometry import InitialState
from schemas.results import QuadratureParams, RateSet


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def quad_params():
    return QuadratureParams()


@pytest.fixture
def psi_plus():
    return InitialState.psi_plus()


@pytest.fixture
def psi_minus():
    return InitialState.psi_minus()


@pytest.fixture
def random_rates(rng):
    """Factory of physically valid rate sets (|gamma12| <= gamma11)"""

    def make(shift: bool = True) -> RateSet:
        g11 = rng.uniform(0.0, 2.0)
        g12 = rng.uniform(-g11, g11)
        v = rng.uniform(-5.0, 5.0) if shift else None
        return RateSet.from_components(g11, g12, v_shift=v)

    return make


@pytest.fixture
def random_state(rng):
    """Factory of normalized single-excitation initial states"""

    def make() -> InitialState:
        amplitudes = rng.normal(size=2) + 1j * rng.normal(size=2)
        amplitudes /= np.linalg.norm(amplitudes)
        return InitialState(c_eg=complex(amplitudes[0]), c_ge=complex(amplitudes[1]))

    return make


@pytest.fixture
def run_config_file(tmp_path):
    """Writes a JSON run configuration and returns its path"""

    def write(**fields) -> str:
        path = tmp_path / "run.json"
        path.write_text(json.dumps(fields), encoding="utf-8")
        return str(path)

    return write
