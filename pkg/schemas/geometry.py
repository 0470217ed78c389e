"""
Geometry and Input Schemas

Immutable input types shared by every module: atomic parameters, the
(R, Z) geometry with its Unbounded variant, the common dipole axis,
the initial single-excitation state and the JSON run configuration.
"""

import math
from enum import Enum
from typing import Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


NORM_TOLERANCE = 1e-12


class PolarizationAxis(str, Enum):
    """Common dipole orientation of both atoms"""

    X = "x"  # along the interatomic axis
    Y = "y"  # tangential to the mirror, normal to the interatomic axis
    Z = "z"  # normal to the mirror


# Sign picked up by each dipole component on reflection in a perfect mirror
REFLECTION_SIGN = {PolarizationAxis.X: 1.0, PolarizationAxis.Y: 1.0, PolarizationAxis.Z: -1.0}


class Unbounded(str, Enum):
    """Marker for the mirror-free geometry"""

    UNBOUNDED = "unbounded"


UNBOUNDED = Unbounded.UNBOUNDED

AtomPair = Literal["same", "cross"]
BoundaryDistance = Union[float, Unbounded]


def is_unbounded(z: BoundaryDistance) -> bool:
    """True when the boundary distance is the Unbounded variant"""
    return isinstance(z, Unbounded)


def boundary_label(z: BoundaryDistance) -> Union[float, str]:
    """Z as written to logs and files: the number or 'unbounded'"""
    return z.value if is_unbounded(z) else z


def coerce_boundary(v):
    """Map "unbounded" to the marker and check finite values are positive"""
    if isinstance(v, Unbounded):
        return v
    if isinstance(v, str):
        if v.strip().lower() == Unbounded.UNBOUNDED.value:
            return UNBOUNDED
        try:
            v = float(v)
        except ValueError:
            raise ValueError("must be a positive number or 'unbounded'") from None
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError("must be a positive number or 'unbounded'")
    if not math.isfinite(v) or v <= 0:
        raise ValueError("must be a positive finite number or 'unbounded'")
    return float(v)


class AtomParams(BaseModel):
    """Transition frequency and dipole strength of the (identical) atoms"""

    model_config = ConfigDict(frozen=True)

    mode: Literal["normalized", "physical"] = Field(
        default="normalized",
        description="normalized: gamma0 = 1 and c = omega0 = 1; physical: SI inputs",
    )
    omega0: float = Field(default=1.0, gt=0, description="Transition angular frequency (rad/s in physical mode)")
    dipole_sq: Optional[float] = Field(
        default=None,
        gt=0,
        description="Squared dipole matrix element along the polarization axis (C^2 m^2)",
    )

    @model_validator(mode="after")
    def check_physical_inputs(self) -> "AtomParams":
        if self.mode == "physical" and self.dipole_sq is None:
            raise ValueError("dipole_sq is required in physical mode")
        if not math.isfinite(self.omega0):
            raise ValueError("omega0 must be finite")
        return self


class GeometryConfig(BaseModel):
    """Dimensionless separation R = r w0/c and boundary distance Z = 2 z0 w0/c"""

    model_config = ConfigDict(frozen=True)

    R: float = Field(..., gt=0, description="Interatomic separation r*omega0/c")
    Z: BoundaryDistance = Field(..., description="Doubled mirror distance 2*z0*omega0/c, or unbounded")

    @field_validator("R")
    @classmethod
    def validate_separation(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("R must be finite")
        return v

    @field_validator("Z", mode="before")
    @classmethod
    def validate_boundary(cls, v):
        """Accept a positive finite number or the string 'unbounded'"""
        return coerce_boundary(v)

    @property
    def unbounded(self) -> bool:
        return is_unbounded(self.Z)


class CorrelatorSpec(BaseModel):
    """Selects one regularized diagonal field correlator"""

    model_config = ConfigDict(frozen=True)

    component: PolarizationAxis = Field(..., description="Diagonal tensor component xx, yy or zz")
    pair: AtomPair = Field(..., description="same-point (11/22) or cross (12/21)")
    geometry: GeometryConfig
    epsilon: float = Field(..., gt=0, description="i*epsilon regulator, in units of 1/omega0")


class InitialState(BaseModel):
    """Single-excitation initial state c_eg|eg> + c_ge|ge>"""

    model_config = ConfigDict(frozen=True)

    c_eg: complex = Field(..., description="Amplitude of |e1 g2>")
    c_ge: complex = Field(..., description="Amplitude of |g1 e2>")

    @model_validator(mode="after")
    def check_normalization(self) -> "InitialState":
        norm = abs(self.c_eg) ** 2 + abs(self.c_ge) ** 2
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"|c_eg|^2 + |c_ge|^2 must equal 1, got {norm!r}")
        return self

    @classmethod
    def psi_plus(cls) -> "InitialState":
        """(|eg> + |ge>)/sqrt(2)"""
        amp = 1.0 / math.sqrt(2.0)
        return cls(c_eg=amp, c_ge=amp)

    @classmethod
    def psi_minus(cls) -> "InitialState":
        """(|ge> - |eg>)/sqrt(2)"""
        amp = 1.0 / math.sqrt(2.0)
        return cls(c_eg=-amp, c_ge=amp)

    @property
    def mode_amplitudes(self) -> Tuple[complex, complex]:
        """Symmetric and antisymmetric mode amplitudes (b+, b-)"""
        root = math.sqrt(2.0)
        return (self.c_eg + self.c_ge) / root, (self.c_ge - self.c_eg) / root


class RunConfig(BaseModel):
    """JSON run configuration document"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: Literal["normalized", "physical"] = "normalized"
    omega0: float = Field(default=1.0, gt=0)
    dipole_sq: Optional[float] = Field(default=None, gt=0)
    r: float = Field(..., gt=0, description="Interatomic distance (m in physical mode)")
    z0: BoundaryDistance = Field(..., description="Mirror distance (m in physical mode) or 'unbounded'")
    polarization: PolarizationAxis = PolarizationAxis.X

    @field_validator("z0", mode="before")
    @classmethod
    def validate_z0(cls, v):
        return coerce_boundary(v)

    @property
    def atom_params(self) -> AtomParams:
        return AtomParams(mode=self.mode, omega0=self.omega0, dipole_sq=self.dipole_sq)
