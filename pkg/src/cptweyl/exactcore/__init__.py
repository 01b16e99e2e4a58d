"""Exact dyadic-Gaussian arithmetic and the named matrix catalogue."""

from .catalogue import (
    ERRATA,
    Erratum,
    TranscriptionNotUnitary,
    UnknownMatrix,
    build,
    catalogue_names,
    generator_names,
    raw,
    unitarity_defects,
)
from .matrix import (
    DimensionMismatch,
    ExactMatrix,
    ExactVector,
    apply,
    dagger,
    dump_matrices,
    load_matrices,
    mat_mul,
    tensor,
    tensor_all,
)
from .scalar import DyadicGaussian

__all__ = [
    "DimensionMismatch", "DyadicGaussian", "ERRATA", "Erratum", "ExactMatrix",
    "ExactVector", "TranscriptionNotUnitary", "UnknownMatrix", "apply", "build",
    "catalogue_names", "dagger", "dump_matrices", "generator_names", "load_matrices",
    "mat_mul", "raw", "tensor", "tensor_all", "unitarity_defects",
]
