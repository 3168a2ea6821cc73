import pytest

from liepoisson import (
    JacobiError,
    LieAlgebraError,
    Subspace,
    build_standard_filiform,
    build_triangular_nilradical,
    ideal_flag,
    invariant_symmetric_form,
    lie_load,
    parse_dual_point,
    poly_parse,
)
from liepoisson.catalog import catalog_bundled, find_entries
from liepoisson.liealg import abelian, heisenberg, is_invariant_form
from liepoisson.polycore.linalg import det_dense

DIAMOND = {"basis": ["t", "x", "y", "z"], "brackets": [[1, 2, "-x"], [1, 3, "y"], [2, 3, "z"]]}
BRACKETS_101 = [[1, 2, "x3"], [1, 3, "x4"], [1, 4, "x5"], [1, 5, "x6"], [2, 5, "-x7"], [3, 4, "x7"]]


def entry(key):
    return find_entries(catalog_bundled(), [key])[0].build()


def P(L, s):
    return poly_parse(s, L.ring)


def test_load_entry_101():
    L = lie_load({"dim": 7, "brackets": BRACKETS_101})
    assert L.n == 7
    assert L.bracket_basis(1, 4) == {6: -1}
    assert L.bracket_basis(4, 1) == {6: 1}


def test_empty_table_is_abelian():
    L = lie_load({"dim": 4, "brackets": []})
    assert L.is_abelian()
    assert L.structure_matrix().is_zero()


def test_jacobi_violation_is_named():
    spec = {"dim": 4, "brackets": [[1, 2, "x3"], [1, 3, "x4"], [2, 3, "x2"]]}
    with pytest.raises(JacobiError) as info:
        lie_load(spec)
    assert info.value.names == ("x1", "x2", "x3")
    assert lie_load(spec, check=False).jacobi_violation() == (0, 1, 2)


@pytest.mark.parametrize("brackets", [
    [[1, 5, "x2"]], [[2, 1, "x3"]], [[1, 1, "x2"]], [[1, 2, "x3^2"]], [[1, 2, "x3 + 1"]],
    [[1, 2, "x3"], [1, 2, "x3"]], [[1, 2]],
])
def test_bad_tables_rejected(brackets):
    with pytest.raises(LieAlgebraError):
        lie_load({"dim": 3, "brackets": brackets})


def test_poisson_bracket_examples():
    L = lie_load(DIAMOND)
    assert L.poisson_bracket(P(L, "x"), P(L, "y")) == P(L, "z")
    assert L.poisson_bracket(P(L, "x"), P(L, "x*y")) == P(L, "x*z")
    assert L.poisson_bracket(P(L, "x*y - t*z"), P(L, "1")).is_zero()
    assert L.ad(1, P(L, "x*y")) == L.poisson_bracket(P(L, "x"), P(L, "x*y"))


def test_poisson_bracket_reproduces_table():
    L = entry("101")
    for i in range(L.n):
        for j in range(L.n):
            expect = L.linear_form(L.bracket_basis(i, j))
            assert L.poisson_bracket(L.ring.gens()[i], L.ring.gens()[j]) == expect


def test_ambient_mismatch():
    L = lie_load(DIAMOND)
    with pytest.raises(LieAlgebraError):
        L.poisson_bracket(poly_parse("x", ["x", "y"]), P(L, "x"))


def test_structure_matrix_examples():
    H = heisenberg()
    B = H.structure_matrix()
    z = P(H, "z")
    assert B.tolist() == [[0 * z, z, 0 * z], [-z, 0 * z, 0 * z], [0 * z, 0 * z, 0 * z]]
    L = entry("156")
    assert [str(B) for B in L.structure_matrix().tolist()[0][1:4]] == ["x5", "x6", "x7"]


def test_center_examples():
    H = heisenberg()
    assert H.center() == Subspace.coordinate(H, [2])
    L = entry("150")
    assert L.center() == Subspace.coordinate(L, [6])
    A = abelian(3)
    assert A.center().dim == 3


def test_unimodular_examples():
    assert entry("101").is_unimodular()
    assert not lie_load({"basis": ["x", "y", "z"], "brackets": [[1, 2, "y"], [1, 3, "z"]]}).is_unimodular()
    assert find_entries(catalog_bundled(), ["solvable8"])[0].build().is_unimodular()


def test_nilpotent_examples():
    assert entry("159").is_nilpotent()
    D = lie_load(DIAMOND)
    assert not D.is_nilpotent()
    assert D.is_solvable()
    assert abelian(3).is_nilpotent()


def test_ideal_flag_of_101():
    L = entry("101")
    flag = ideal_flag(L)
    assert flag.is_valid()
    assert flag[1] == Subspace.coordinate(L, [6])
    assert flag[2] == Subspace.coordinate(L, [5, 6])
    assert flag[6] == Subspace.coordinate(L, range(1, 7))


def test_ideal_flag_small_cases():
    A = abelian(2)
    assert ideal_flag(A)[1] == Subspace.coordinate(A, [1])
    H = heisenberg()
    f = ideal_flag(H)
    assert f[1] == Subspace.coordinate(H, [2])
    assert f[2] == Subspace.coordinate(H, [1, 2])
    with pytest.raises(LieAlgebraError):
        ideal_flag(lie_load(DIAMOND))


def test_ideal_flags_of_catalog_are_valid():
    for e in catalog_bundled():
        for _, env in e.variants():
            L = e.build(env)
            if L.is_nilpotent():
                assert ideal_flag(L).is_valid(), e.key


def test_invariant_form_of_101():
    L = entry("101")
    B = invariant_symmetric_form(L)
    assert B is not None
    assert is_invariant_form(L, B)
    assert det_dense(B) != 0
    # so is the form with b(x4,x4) = b(x2,x6) = b(x1,x7) = 1, b(x3,x5) = -1
    W = [[0] * 7 for _ in range(7)]
    for a, b, v in [(3, 3, 1), (1, 5, 1), (0, 6, 1), (2, 4, -1)]:
        W[a][b] = W[b][a] = v
    assert is_invariant_form(L, W)


def test_invariant_form_abelian_and_89():
    assert invariant_symmetric_form(abelian(3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert invariant_symmetric_form(entry("89")) is None


def test_builders():
    F7 = build_standard_filiform(7)
    assert F7.consts == entry("159").consts
    N2 = build_triangular_nilradical(2)
    assert N2.n == 3
    assert sum(1 for _ in N2.consts) == 1
    with pytest.raises(LieAlgebraError):
        build_standard_filiform(2)
    with pytest.raises(LieAlgebraError):
        build_triangular_nilradical(1)


def test_dual_points():
    L = entry("101")
    assert parse_dual_point("x7*", L) == (0, 0, 0, 0, 0, 0, 1)
    assert parse_dual_point("1, 0, 0, 0, 0, 0, -1/2", L)[-1] * 2 == -1
    for bad in ["x9*", "1,2", "a,b,c,d,e,f,g"]:
        with pytest.raises(LieAlgebraError):
            parse_dual_point(bad, L)


def test_subspace_canonical():
    L = entry("101")
    a = Subspace.span_of(L, [P(L, "x1 + x2"), P(L, "x2")])
    b = Subspace.span_of(L, [P(L, "x1"), P(L, "2*x2 - x1")])
    assert a == b and hash(a) == hash(b)
    assert a.basis == [{0: 1}, {1: 1}]
    with pytest.raises(LieAlgebraError):
        Subspace.span_of(L, [P(L, "x1*x2")])


def test_restrict_and_embed():
    L = entry("101")
    sub = Subspace.coordinate(L, range(1, 7))
    H, embed = L.restrict(sub)
    assert H.n == 6
    assert embed(poly_parse("x7", H.ring)) == P(L, "x7")
    with pytest.raises(LieAlgebraError):
        L.restrict(Subspace.coordinate(L, [0, 1]))
