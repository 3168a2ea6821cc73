"""Exact arithmetic kernel: polynomials, polynomial matrices, gcd, Groebner bases."""

from .poly import (
    DEGREVLEX,
    LEX,
    AmbientMismatch,
    MonomialOrder,
    Poly,
    PolyError,
    Ring,
    as_scalar,
    block_order,
    poly_print,
)
from .parse import ParseError, UnknownVariable, poly_parse
from .matrix import (
    PolyMatrix,
    bareiss_rank,
    determinant,
    jacobian,
    pfaffian,
    principal_pfaffians,
    rank_over_fraction_field,
)
from .gcd import gcd_list, gcd_multi
from .groebner import (
    DEFAULT_BUDGET,
    EMPTY_VARIETY,
    Budget,
    GroebnerBudgetExceeded,
    Ideal,
    codimension,
    groebner_basis,
    ideal_dimension,
    subalgebra_membership,
)
from .linalg import Echelon, det_dense, kernel, kernel_dense, rank, rref, rref_dense


def groebner(ideal):
    """Return a copy of ``ideal`` whose generators are its reduced Groebner basis."""
    gb = ideal.groebner()
    out = Ideal(gb, order=ideal.order, budget=ideal.budget, ring=ideal.ring)
    out._gb = gb
    return out


def linear_kernel(m):
    """Canonical RREF basis of the kernel of a dense rational matrix."""
    return kernel_dense(m)

__all__ = [
    "AmbientMismatch",
    "Budget",
    "DEFAULT_BUDGET",
    "DEGREVLEX",
    "EMPTY_VARIETY",
    "Echelon",
    "GroebnerBudgetExceeded",
    "Ideal",
    "LEX",
    "MonomialOrder",
    "ParseError",
    "Poly",
    "PolyError",
    "PolyMatrix",
    "Ring",
    "UnknownVariable",
    "as_scalar",
    "bareiss_rank",
    "block_order",
    "codimension",
    "det_dense",
    "determinant",
    "gcd_list",
    "gcd_multi",
    "groebner",
    "groebner_basis",
    "ideal_dimension",
    "jacobian",
    "kernel",
    "kernel_dense",
    "linear_kernel",
    "pfaffian",
    "poly_parse",
    "poly_print",
    "principal_pfaffians",
    "rank",
    "rank_over_fraction_field",
    "rref",
    "rref_dense",
    "subalgebra_membership",
]
