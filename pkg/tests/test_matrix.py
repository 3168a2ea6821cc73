import random

import pytest
import sympy

from liepoisson import PolyMatrix, Ring, poly_parse
from liepoisson.liealg import heisenberg, lie_load
from liepoisson.polycore import (
    PolyError,
    bareiss_rank,
    determinant,
    jacobian,
    pfaffian,
    principal_pfaffians,
    rank_over_fraction_field,
)
from liepoisson.polycore.matrix import evaluated_rank

from _sym import sympy_matrix, to_sympy

A = Ring(["a12", "a13", "a14", "a23", "a24", "a34"])


def skew4():
    a = {n: poly_parse(n, A) for n in A.names}
    z = poly_parse("0", A)
    rows = [[z, a["a12"], a["a13"], a["a14"]],
            [-a["a12"], z, a["a23"], a["a24"]],
            [-a["a13"], -a["a23"], z, a["a34"]],
            [-a["a14"], -a["a24"], -a["a34"], z]]
    return PolyMatrix(rows, A, skew=True)


def test_pfaffian_2x2():
    R = Ring(["a"])
    a = poly_parse("a", R)
    assert pfaffian(PolyMatrix([[0, a], [-a, 0]], R, skew=True)) == a


def test_pfaffian_4x4_textbook():
    assert pfaffian(skew4()) == poly_parse("a12*a34 - a13*a24 + a14*a23", A)


def test_pfaffian_squared_is_determinant_4x4():
    m = skew4()
    assert pfaffian(m) ** 2 == determinant(m)
    assert to_sympy(determinant(m)) == sympy.expand(sympy_matrix(m).det())


def test_pfaffian_of_heisenberg_block():
    B = heisenberg().structure_matrix()
    pf = principal_pfaffians(B, 2)
    assert pf[(0, 1)] == poly_parse("z", B.ring)
    assert not pf[(0, 2)] and not pf[(1, 2)]


def test_pfaffian_errors():
    R = Ring(["a"])
    a = poly_parse("a", R)
    with pytest.raises(PolyError):
        PolyMatrix([[0, a], [a, 0]], R, skew=True)
    with pytest.raises(PolyError):
        pfaffian(PolyMatrix([[0, a, 0], [-a, 0, 0], [0, 0, 0]], R))
    with pytest.raises(PolyError):
        PolyMatrix([[a], [a, a]], R)


def test_determinant_matches_sympy():
    R = Ring(["x", "y"])
    rng = random.Random(3)
    for _ in range(5):
        x, y = R.gens()
        rows = [[x * rng.randint(-3, 3) + y * rng.randint(-3, 3) + rng.randint(-2, 2)
                 for _ in range(3)] for _ in range(3)]
        m = PolyMatrix(rows, R)
        assert to_sympy(determinant(m)) == sympy.expand(sympy_matrix(m).det())


def test_rank_examples():
    R = Ring(["x", "y", "z"])
    zero = PolyMatrix([[0] * 3] * 3, R)
    assert rank_over_fraction_field(zero) == 0
    assert bareiss_rank(zero) == 0
    diamond = lie_load({"basis": ["t", "x", "y", "z"], "brackets": [[1, 2, "-x"], [1, 3, "y"], [2, 3, "z"]]})
    assert rank_over_fraction_field(diamond.structure_matrix()) == 2
    e101 = lie_load({"dim": 7, "brackets": [[1, 2, "x3"], [1, 3, "x4"], [1, 4, "x5"], [1, 5, "x6"],
                                             [2, 5, "-x7"], [3, 4, "x7"]]})
    B = e101.structure_matrix()
    assert rank_over_fraction_field(B) == 4
    assert bareiss_rank(B) == 4
    assert sympy_matrix(B).rank() == 4


def test_rank_bound_never_below_evaluations():
    R = Ring(["x", "y"])
    x, y = poly_parse("x", R), poly_parse("y", R)
    # rank 2 generically, rank 1 on the line x = y
    m = PolyMatrix([[x, y], [y, x]], R)
    assert bareiss_rank(m) == 2
    assert evaluated_rank(m, (1, 1)) == 1
    assert rank_over_fraction_field(m) >= evaluated_rank(m, (3, 5))


def test_jacobian():
    R = Ring(["x", "y"])
    J = jacobian([poly_parse("x^2*y", R), poly_parse("y - x", R)], R)
    assert J.shape() == (2, 2)
    assert J[0, 0] == poly_parse("2*x*y", R)
    assert J[1, 0] == poly_parse("-1", R)
