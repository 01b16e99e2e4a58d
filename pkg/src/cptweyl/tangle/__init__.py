"""Entanglement measures for three-qubit states taken from matrix rows."""

from .exact import GaussQ, char_poly, squarefree_factors
from .invariants import (
    CLASS_EPS,
    CLASS_LABELS,
    ConcurrenceSpectrum,
    EntanglementProfile,
    SpectrumInconsistent,
    ThreeTangleBreakdown,
    apply_local,
    classify,
    concurrence,
    concurrence_pure2q,
    concurrence_spectrum,
    entropy_of_formation,
    one_tangle,
    one_tangle_exact,
    profile,
    profile_to_json,
    spin_flip,
    tangle,
    three_tangle,
)
from .states import (
    DensityMatrix,
    PureState3Q,
    ghz_state,
    pure_density,
    reduce,
    reduce1,
    state_from_row,
    w_state,
)

__all__ = [
    "CLASS_EPS", "CLASS_LABELS", "ConcurrenceSpectrum", "DensityMatrix", "EntanglementProfile",
    "GaussQ", "PureState3Q", "SpectrumInconsistent", "ThreeTangleBreakdown", "apply_local",
    "char_poly", "classify", "concurrence", "concurrence_pure2q", "concurrence_spectrum",
    "entropy_of_formation", "ghz_state", "one_tangle", "one_tangle_exact", "profile",
    "profile_to_json", "pure_density", "reduce", "reduce1", "spin_flip", "squarefree_factors",
    "state_from_row", "tangle", "three_tangle", "w_state",
]
