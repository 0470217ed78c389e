"""
Shared Pydantic Schemas for MirrorEnt

This module provides type-safe contracts between:
- core / rates / correlators (inputs)
- oracle / dynamics (results)
- commands (CLI layer)
"""

from schemas.geometry import (
    UNBOUNDED,
    AtomPair,
    AtomParams,
    BoundaryDistance,
    CorrelatorSpec,
    GeometryConfig,
    InitialState,
    PolarizationAxis,
    RunConfig,
    Unbounded,
    boundary_label,
    is_unbounded,
)

from schemas.results import (
    AxisRange,
    DynamicsRow,
    OracleResult,
    QuadratureParams,
    RateQuantity,
    RateSet,
    ShiftRecord,
    SingleExcitationState,
    SweepSpec,
    TwoAtomDensityMatrix,
    ValidationRecord,
    ValidationReport,
)

__all__ = [
    # Inputs
    "UNBOUNDED",
    "AtomPair",
    "AtomParams",
    "BoundaryDistance",
    "CorrelatorSpec",
    "GeometryConfig",
    "InitialState",
    "PolarizationAxis",
    "RunConfig",
    "Unbounded",
    "boundary_label",
    "is_unbounded",
    # Results
    "AxisRange",
    "DynamicsRow",
    "OracleResult",
    "QuadratureParams",
    "RateQuantity",
    "RateSet",
    "ShiftRecord",
    "SingleExcitationState",
    "SweepSpec",
    "TwoAtomDensityMatrix",
    "ValidationRecord",
    "ValidationReport",
]
