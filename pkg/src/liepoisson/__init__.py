"""Exact Lie-Poisson toolkit for finite-dimensional Lie algebras over Q."""

from .liealg import (
    IdealFlag,
    JacobiError,
    LieAlgebra,
    LieAlgebraError,
    Subspace,
    build_standard_filiform,
    build_triangular_nilradical,
    ideal_flag,
    invariant_symmetric_form,
    lie_load,
    parse_dual_point,
)
from .polycore import Poly, PolyMatrix, Ring, poly_parse, poly_print

__version__ = "0.1.0"

__all__ = [
    "IdealFlag",
    "JacobiError",
    "LieAlgebra",
    "LieAlgebraError",
    "Poly",
    "PolyMatrix",
    "Ring",
    "Subspace",
    "__version__",
    "build_standard_filiform",
    "build_triangular_nilradical",
    "ideal_flag",
    "invariant_symmetric_form",
    "lie_load",
    "parse_dual_point",
    "poly_parse",
    "poly_print",
]
