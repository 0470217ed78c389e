"""
Result Schemas

Output contracts of the rates, oracle, dynamics and sweep layers.
"""

import math
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import settings
from schemas.geometry import AtomPair, BoundaryDistance, PolarizationAxis, coerce_boundary

Provenance = Literal["closed-form", "series"]
RateQuantity = Literal["gamma11", "gamma12", "gamma_plus", "gamma_minus", "v_shift"]

STATE_TOLERANCE = 1e-12


# ============================================================================
# RATES
# ============================================================================
class RateSet(BaseModel):
    """Single-atom, cross and collective rates for one geometry"""

    model_config = ConfigDict(frozen=True)

    gamma11: float = Field(..., description="Boundary-modified spontaneous emission rate")
    gamma12: float = Field(..., description="Cross-atom modulation of the emission rate")
    gamma_plus: float = Field(..., description="Superradiant rate gamma11 + gamma12")
    gamma_minus: float = Field(..., description="Subradiant rate gamma11 - gamma12")
    v_shift: Optional[float] = Field(default=None, description="Dipole-dipole potential V")
    provenance: Dict[str, Provenance] = Field(
        default_factory=dict,
        description="Evaluation path per quantity",
    )
    units: Literal["gamma0", "per_second"] = Field(default="gamma0", description="Unit of every rate field")

    @classmethod
    def from_components(
        cls,
        gamma11: float,
        gamma12: float,
        v_shift: Optional[float] = None,
        provenance: Optional[Dict[str, Provenance]] = None,
        units: Literal["gamma0", "per_second"] = "gamma0",
    ) -> "RateSet":
        """
        Build a RateSet from gamma11 and gamma12.

        The larger collective rate is formed first and the smaller one as
        2*gamma11 minus it; that difference is exact, so
        gamma_plus + gamma_minus == 2*gamma11 holds bit for bit.
        """
        total = 2.0 * gamma11
        if gamma12 >= 0:
            gamma_plus = gamma11 + gamma12
            gamma_minus = total - gamma_plus
        else:
            gamma_minus = gamma11 - gamma12
            gamma_plus = total - gamma_minus
        return cls(
            gamma11=gamma11,
            gamma12=gamma12,
            gamma_plus=gamma_plus,
            gamma_minus=gamma_minus,
            v_shift=v_shift,
            provenance=provenance or {},
            units=units,
        )

    def quantity(self, name: RateQuantity) -> float:
        value = getattr(self, name)
        if value is None:
            raise ValueError(f"{name} was not computed for this rate set")
        return value


# ============================================================================
# DYNAMICS
# ============================================================================
class SingleExcitationState(BaseModel):
    """Atomic amplitudes b1 |eg>|0> + b2 |ge>|0> at time t"""

    model_config = ConfigDict(frozen=True)

    b1: complex = Field(..., description="Amplitude of |e1 g2>|0>")
    b2: complex = Field(..., description="Amplitude of |g1 e2>|0>")
    t: float = Field(default=0.0, ge=0, description="Elapsed time in units of 1/gamma0")
    escaped: Optional[float] = Field(default=None, ge=0, le=1, description="Photon escape probability tracked by the evolution")

    @model_validator(mode="after")
    def check_norm(self) -> "SingleExcitationState":
        if abs(self.b1) ** 2 + abs(self.b2) ** 2 > 1.0 + STATE_TOLERANCE:
            raise ValueError("|b1|^2 + |b2|^2 exceeds 1")
        return self

    @property
    def p_photon(self) -> float:
        """Probability that the excitation has escaped into the field"""
        if self.escaped is not None:
            return self.escaped
        return 1.0 - abs(self.b1) ** 2 - abs(self.b2) ** 2


class TwoAtomDensityMatrix(BaseModel):
    """
    Reduced two-atom density matrix.

    Basis order: |e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>. The stored array is
    read-only.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray = Field(..., description="4x4 complex Hermitian, trace-one matrix")

    @field_validator("matrix", mode="before")
    @classmethod
    def validate_matrix(cls, v) -> np.ndarray:
        rho = np.array(v, dtype=complex)
        if rho.shape != (4, 4):
            raise ValueError(f"density matrix must be 4x4, got shape {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > STATE_TOLERANCE:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(rho) - 1.0) > STATE_TOLERANCE:
            raise ValueError("density matrix trace differs from 1")
        if np.min(np.linalg.eigvalsh(rho)) < -STATE_TOLERANCE:
            raise ValueError("density matrix has a negative eigenvalue")
        rho.setflags(write=False)
        return rho

    def __getitem__(self, index: Tuple[int, int]) -> complex:
        """1-based element access rho[i, j] matching the basis labels"""
        i, j = index
        return complex(self.matrix[i - 1, j - 1])


class DynamicsRow(BaseModel):
    """One row of the concurrence time series"""

    model_config = ConfigDict(frozen=True)

    t: float
    b1: complex
    b2: complex
    p_photon: float
    concurrence: float
    l1_coherence: float

    def as_csv_fields(self) -> List[float]:
        return [
            self.t,
            self.b1.real,
            self.b1.imag,
            self.b2.real,
            self.b2.imag,
            self.p_photon,
            self.concurrence,
            self.l1_coherence,
        ]


# ============================================================================
# ORACLES
# ============================================================================
class QuadratureParams(BaseModel):
    """
    Controls of the numerical oracles.

    The mode-sum and principal-value oracles refine adaptively: the angular
    order or the frequency cutoff is doubled until successive results agree
    within max(abs_tol, rel_tol * |value|), at most max_refinements extra
    times. The Fourier oracle has nothing to refine; there abs_tol bounds the
    truncated tail and 10 x rel_tol the epsilon-extrapolation residual.
    """

    model_config = ConfigDict(frozen=True)

    epsilon_sequence: Tuple[float, ...] = Field(
        default=(1e-3, 5e-4, 2.5e-4),
        description="Decreasing regulators for the epsilon -> 0 extrapolation (1/omega0)",
    )
    t_max: float = Field(default=200.0, gt=0, description="Time horizon of the Fourier transform (1/omega0)")
    abs_tol: float = Field(default=1e-6, gt=0, description="Absolute tolerance (gamma0 units)")
    rel_tol: float = Field(default=1e-6, gt=0, description="Relative tolerance")
    angular_order: Tuple[int, int] = Field(default=(64, 128), description="Polar x azimuthal nodes of the sphere rule")
    contour_shift: float = Field(default=0.5, gt=0, description="Depth of the shifted time contour (1/omega0)")
    panel_width: float = Field(default=0.25, gt=0, description="Width of each Gauss-Legendre panel")
    panel_nodes: int = Field(default=16, ge=2, description="Gauss-Legendre nodes per panel")
    pv_periods: int = Field(default=64, ge=4, description="Oscillation periods kept below the frequency cutoff")
    max_refinements: int = Field(default=2, ge=0, description="Extra doublings before an oracle reports non-convergence")

    @field_validator("epsilon_sequence")
    @classmethod
    def validate_epsilons(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        if len(v) < 3:
            raise ValueError("epsilon_sequence needs at least three regulators")
        if any(e <= 0 for e in v):
            raise ValueError("epsilon_sequence entries must be positive")
        if any(b >= a for a, b in zip(v, v[1:])):
            raise ValueError("epsilon_sequence must be strictly decreasing")
        return v

    @field_validator("angular_order")
    @classmethod
    def validate_angular_order(cls, v: Tuple[int, int]) -> Tuple[int, int]:
        if min(v) < 2:
            raise ValueError("angular_order needs at least 2 nodes per direction")
        return v

    @classmethod
    def from_settings(cls) -> "QuadratureParams":
        """Defaults overridden by the environment-backed settings"""
        return cls(
            t_max=settings.quad_t_max,
            abs_tol=settings.quad_abs_tol,
            rel_tol=settings.quad_rel_tol,
            angular_order=settings.angular_nodes,
            max_refinements=settings.quad_max_refinements,
        )


class OracleResult(BaseModel):
    """Value of a numerical oracle with its convergence diagnostics"""

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., description="Oracle estimate (gamma0 units)")
    error_estimate: float = Field(..., ge=0, description="Extrapolation residual or order-doubling change")
    tail_bound: float = Field(default=0.0, ge=0, description="Bound on the truncated remainder")
    order_estimate: Optional[float] = Field(default=None, description="Empirical convergence order in epsilon")
    cutoff: Optional[float] = Field(default=None, description="Frequency cutoff used by the principal value")
    angular_order: Optional[Tuple[int, int]] = Field(default=None, description="Sphere rule behind a mode-sum value")


class ValidationRecord(BaseModel):
    """One closed form against both rate oracles"""

    check: Literal["rate"] = "rate"
    pol: PolarizationAxis
    pair: AtomPair
    R: float
    Z: BoundaryDistance
    closed_form: float
    ft_oracle: Optional[float] = None
    modesum_oracle: Optional[float] = None
    abs_diff: Optional[float] = None
    order_estimate: Optional[float] = None
    converged: bool = True
    passed: bool = False

    @field_validator("Z", mode="before")
    @classmethod
    def validate_z(cls, v):
        return coerce_boundary(v)


class ShiftRecord(BaseModel):
    """Dipole-shift closed form against the principal-value oracle"""

    check: Literal["shift"] = "shift"
    pol: PolarizationAxis
    R: float
    Z: BoundaryDistance
    closed_form: float
    pv_oracle: Optional[float] = None
    rel_diff: Optional[float] = None
    converged: bool = True
    passed: bool = False

    @field_validator("Z", mode="before")
    @classmethod
    def validate_z(cls, v):
        return coerce_boundary(v)


# ============================================================================
# SWEEPS
# ============================================================================
class AxisRange(BaseModel):
    """Sampling of one sweep axis"""

    model_config = ConfigDict(frozen=True)

    min: float = Field(..., gt=0)
    max: float = Field(..., gt=0)
    count: int = Field(..., ge=2)
    scale: Literal["linear", "log"] = "linear"

    @model_validator(mode="after")
    def check_order(self) -> "AxisRange":
        if not self.min < self.max:
            raise ValueError("min must be smaller than max")
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise ValueError("bounds must be finite")
        return self

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.count)
        return np.linspace(self.min, self.max, self.count)


class SweepSpec(BaseModel):
    """(R, Z) grid sweep of one rate quantity"""

    model_config = ConfigDict(frozen=True)

    polarization: PolarizationAxis
    r_range: AxisRange
    z_range: AxisRange
    include_unbounded: bool = Field(default=False, description="Append an Unbounded row after each R's finite Z rows")
    quantity: RateQuantity = "gamma_plus"
    output: Optional[Path] = Field(default=None, description="CSV destination; stdout when omitted")


class ValidationReport(BaseModel):
    """Outcome of the triangular validation run"""

    records: List[ValidationRecord] = Field(default_factory=list)
    shift_records: List[ShiftRecord] = Field(default_factory=list)

    @property
    def converged(self) -> bool:
        return all(r.converged for r in self.records) and all(r.converged for r in self.shift_records)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records) and all(r.passed for r in self.shift_records)

    @property
    def failures(self) -> List[BaseModel]:
        return [r for r in [*self.records, *self.shift_records] if not (r.passed and r.converged)]
