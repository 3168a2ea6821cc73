from fractions import Fraction

import sympy

from liepoisson.polycore import Echelon, kernel, rank, rref, rref_dense
from liepoisson.polycore import linear_kernel
from liepoisson.polycore.linalg import det_dense


def test_identity_has_trivial_kernel():
    assert linear_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


def test_one_by_two():
    assert linear_kernel([[1, -1]]) == [[1, 1]]


def test_rref_matches_sympy():
    m = [[2, 4, -2, 1], [1, 2, 0, 3], [3, 6, -2, 4]]
    ours = rref_dense(m)
    theirs, _ = sympy.Matrix(m).rref()
    rows = [list(theirs.row(i)) for i in range(theirs.rows) if any(theirs.row(i))]
    assert [[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in r] for r in ours] == rows


def test_kernel_matches_sympy_nullspace_dimension():
    m = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    K = linear_kernel(m)
    assert len(K) == len(sympy.Matrix(m).nullspace())
    for v in K:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)


def test_echelon_incremental():
    e = Echelon()
    assert e.add({0: 1, 1: 1})
    assert not e.add({0: 2, 1: 2})
    assert e.contains({0: -3, 1: -3})
    assert not e.contains({1: 1})
    assert len(e) == 1


def test_sparse_helpers():
    basis, piv = rref([{0: 2, 2: 4}, {1: 1}], 3)
    assert piv == [0, 1]
    assert basis[0] == {0: 1, 2: 2}
    assert rank([{0: 1}, {0: 2}]) == 1
    assert kernel([{0: 1, 1: 1}], 2) == [{0: -1, 1: 1}] or kernel([{0: 1, 1: 1}], 2) == [{0: 1, 1: -1}]


def test_det_dense():
    assert det_dense([[1, 2], [3, 4]]) == -2
    assert det_dense([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert det_dense([[1, 1], [1, 1]]) == 0
