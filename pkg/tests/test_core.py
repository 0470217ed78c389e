"""
Tests for units, configuration types, settings and exceptions
"""
import math

import pytest
from pydantic import ValidationError
from scipy import constants

import schemas.results
from config.settings import Settings
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
from rates.closed_form import collective_rates, rate_set_physical
from schemas.geometry import UNBOUNDED, AtomParams, GeometryConfig, InitialState, RunConfig, boundary_label
from schemas.results import QuadratureParams

HYDROGEN_OMEGA0 = 2.455e15
HYDROGEN_DIPOLE_SQ = (constants.e * constants.physical_constants["Bohr radius"][0]) ** 2


def physical_params(dipole_sq: float = HYDROGEN_DIPOLE_SQ) -> AtomParams:
    return AtomParams(mode="physical", omega0=HYDROGEN_OMEGA0, dipole_sq=dipole_sq)


# ============================================================================
# gamma0
# ============================================================================
def test_gamma0_normalized_is_exactly_one():
    assert gamma0(AtomParams()) == 1.0


def test_gamma0_physical_hydrogen_scale():
    assert gamma0(physical_params()) == pytest.approx(4.4856e6, rel=1e-3)


def test_gamma0_linear_in_dipole_strength():
    single = gamma0(physical_params())
    assert gamma0(physical_params(2.0 * HYDROGEN_DIPOLE_SQ)) == pytest.approx(2.0 * single, rel=1e-15)


def test_physical_mode_requires_dipole():
    with pytest.raises(ValidationError):
        AtomParams(mode="physical", omega0=1e15)


@pytest.mark.parametrize("omega0", [0.0, -1.0])
def test_non_positive_frequency_rejected(omega0):
    with pytest.raises(ValidationError):
        AtomParams(omega0=omega0)


def test_physical_rates_divided_by_gamma0_match_normalized():
    params = physical_params()
    normalized = collective_rates("x", 2.0, 0.7, include_shift=True)
    physical = rate_set_physical(normalized, params)
    scale = gamma0(params)
    assert physical.units == "per_second"
    for name in ("gamma11", "gamma12", "gamma_plus", "gamma_minus", "v_shift"):
        assert getattr(physical, name) / scale == pytest.approx(getattr(normalized, name), rel=1e-12)
    assert physical.provenance == normalized.provenance


# ============================================================================
# make_geometry
# ============================================================================
def test_make_geometry_physical_unit_lengths():
    params = physical_params()
    length = constants.c / HYDROGEN_OMEGA0
    geometry = make_geometry(length, length, params)
    assert geometry.R == pytest.approx(1.0, rel=1e-14)
    assert geometry.Z == pytest.approx(2.0, rel=1e-14)


def test_make_geometry_normalized_pi():
    geometry = make_geometry(math.pi, 0.25, AtomParams())
    assert geometry.R == math.pi
    assert geometry.Z == 0.5


@pytest.mark.parametrize("z0", [None, "unbounded", UNBOUNDED])
def test_make_geometry_unbounded_variant(z0):
    geometry = make_geometry(1.0, z0, AtomParams())
    assert geometry.unbounded
    assert geometry.Z is UNBOUNDED


@pytest.mark.parametrize("r, z0, key", [(0.0, 1.0, "r"), (-1.0, 1.0, "r"), (1.0, 0.0, "z0"), (1.0, -2.0, "z0")])
def test_make_geometry_rejects_non_positive_lengths(r, z0, key):
    with pytest.raises(ConfigurationError) as info:
        make_geometry(r, z0, AtomParams())
    assert info.value.key == key


def test_geometry_round_trip_is_idempotent():
    geometry = GeometryConfig(R=3.0, Z=0.4)
    assert GeometryConfig(R=geometry.R, Z=geometry.Z) == geometry
    free = GeometryConfig(R=3.0, Z="unbounded")
    assert GeometryConfig(**free.model_dump()) == free


@pytest.mark.parametrize("Z", [0.0, -1.0, float("inf"), float("nan"), True, "far"])
def test_geometry_rejects_invalid_boundary(Z):
    with pytest.raises(ValidationError):
        GeometryConfig(R=1.0, Z=Z)


@pytest.mark.parametrize("R", [0.0, -0.5, float("inf")])
def test_geometry_rejects_invalid_separation(R):
    with pytest.raises(ValidationError):
        GeometryConfig(R=R, Z=1.0)


def test_boundary_label():
    assert boundary_label(UNBOUNDED) == "unbounded"
    assert boundary_label(0.5) == 0.5


# ============================================================================
# InitialState
# ============================================================================
def test_bell_constructors():
    plus = InitialState.psi_plus()
    minus = InitialState.psi_minus()
    assert plus.c_eg == plus.c_ge == pytest.approx(1 / math.sqrt(2))
    assert minus.c_eg == pytest.approx(-1 / math.sqrt(2))
    assert minus.c_ge == pytest.approx(1 / math.sqrt(2))
    assert plus.mode_amplitudes == pytest.approx((1.0, 0.0))
    assert minus.mode_amplitudes == pytest.approx((0.0, 1.0))


def test_initial_state_requires_normalization():
    with pytest.raises(ValidationError):
        InitialState(c_eg=1.0, c_ge=0.1)
    InitialState(c_eg=0.6, c_ge=0.8j)


# ============================================================================
# RUN CONFIGURATION
# ============================================================================
def test_load_run_config(run_config_file):
    path = run_config_file(mode="normalized", omega0=1.0, r=2.0, z0="unbounded", polarization="z")
    config = load_run_config(path)
    assert config.polarization.value == "z"
    assert config.z0 is UNBOUNDED
    assert config.atom_params == AtomParams()


def test_load_run_config_names_offending_key(run_config_file):
    path = run_config_file(r=-1.0, z0=1.0)
    with pytest.raises(ConfigurationError) as info:
        load_run_config(path)
    assert info.value.key == "r"
    assert str(info.value).startswith("r:")


def test_load_run_config_rejects_unknown_keys(run_config_file):
    path = run_config_file(r=1.0, z0=1.0, temperature=4.0)
    with pytest.raises(ConfigurationError) as info:
        load_run_config(path)
    assert info.value.key == "temperature"


def test_load_run_config_missing_file(tmp_path):
    with pytest.raises(ConfigurationError) as info:
        load_run_config(tmp_path / "absent.json")
    assert info.value.key == "config"


def test_load_run_config_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_run_config(path)


def test_config_error_from_uses_first_location():
    with pytest.raises(ValidationError) as info:
        RunConfig(r=1.0, z0=1.0, polarization="w")
    error = config_error_from(info.value)
    assert error.key == "polarization"


# ============================================================================
# SETTINGS
# ============================================================================
def test_settings_parsing():
    custom = Settings(validation_grid="1, 2.5,4", quad_angular_nodes="32X64", log_level="debug")
    assert custom.validation_grid_values == [1.0, 2.5, 4.0]
    assert custom.angular_nodes == (32, 64)
    assert custom.log_level == "DEBUG"


def test_quadrature_params_follow_settings(monkeypatch):
    monkeypatch.setattr(schemas.results, "settings", Settings(quad_angular_nodes="16x32", quad_max_refinements=5))
    params = QuadratureParams.from_settings()
    assert params.angular_order == (16, 32)
    assert params.max_refinements == 5


@pytest.mark.parametrize(
    "field, value",
    [
        ("environment", "qa"),
        ("log_level", "LOUD"),
        ("log_format", "xml"),
        ("quad_angular_nodes", "64"),
        ("quad_max_refinements", -1),
    ],
)
def test_settings_reject_invalid_values(field, value):
    with pytest.raises(ValidationError):
        Settings(**{field: value})


# ============================================================================
# EXCEPTIONS
# ============================================================================
@pytest.mark.parametrize(
    "error, code",
    [
        (ConfigurationError("bad"), 1),
        (InvalidStateError("bad"), 1),
        (OutOfDomainError("bad"), 1),
        (ValidationFailure("bad"), 2),
        (ConvergenceError("bad"), 3),
        (TailBoundError("bad"), 3),
        (QuadratureOrderError("bad"), 3),
    ],
)
def test_exit_codes(error, code):
    assert isinstance(error, MirrorEntError)
    assert error.exit_code == code


def test_configuration_error_is_value_error():
    assert isinstance(ConfigurationError("x", key="R"), ValueError)
    assert str(ConfigurationError("must be positive", key="R")) == "R: must be positive"
