"""
Dynamics package
Amplitude evolution, density matrices and entanglement measures
"""
from dynamics.entanglement import concurrence_wootters, concurrence_xstate, l1_coherence
from dynamics.evolution import (
    collective_populations,
    concurrence_series,
    density_matrix,
    dynamics_table,
    entanglement_lifetime,
    evolve,
)

__all__ = [
    "collective_populations",
    "concurrence_series",
    "concurrence_wootters",
    "concurrence_xstate",
    "density_matrix",
    "dynamics_table",
    "entanglement_lifetime",
    "evolve",
    "l1_coherence",
]
