import pytest

from liepoisson import LieAlgebraError, build_standard_filiform, build_triangular_nilradical
from liepoisson.invariants import (
    check_sum_rule,
    fundamental_semiinvariant,
    homogeneous_invariants,
    index_of,
    invariant_basis_up_to_degree,
    is_invariant,
    is_singular,
    principal_pfaffian_list,
    semi_invariant_weight,
    singular_locus_codim,
    theorem13_tests,
    theorem14_certificate,
    trdeg,
)
from liepoisson.liealg import abelian, heisenberg

from _alg import P, alg, diamond, expected_polys, same_span


def test_index_examples():
    r = index_of(diamond())
    assert (r.index, r.c, r.t) == (2, 3, 2)
    r = index_of(abelian(4))
    assert (r.index, r.c) == (4, 4)
    r = index_of(alg("157"))
    assert (r.index, r.c) == (5, 6)
    assert index_of(alg("101")).t == 4


def test_fundamental_semiinvariant_examples():
    L = alg("101")
    assert fundamental_semiinvariant(L) == P(L, "x7")
    L = alg("83")
    assert fundamental_semiinvariant(L) == P(L, "x7^3")
    A = abelian(3)
    assert fundamental_semiinvariant(A) == P(A, "1")


def test_singular_examples():
    assert is_singular(alg("101"))
    assert not is_singular(alg("136"))
    assert not is_singular(abelian(2))


def test_codim_examples():
    assert singular_locus_codim(diamond()) == 3
    assert singular_locus_codim(alg("150")) == 2
    assert singular_locus_codim(alg("159")) == 5
    with pytest.raises(LieAlgebraError):
        singular_locus_codim(abelian(2))


def test_deg_p_bound_over_catalog():
    from liepoisson.catalog import catalog_bundled
    for e in catalog_bundled():
        for _, env in e.variants():
            L = e.build(env)
            r = index_of(L)
            p = fundamental_semiinvariant(L)
            assert 2 * p.degree() <= L.n - r.index, e.key
            assert semi_invariant_weight(L, p) is not None, e.key


def test_square_integrable_pfaffian_is_p():
    # 83 is square integrable; p is the Pfaffian of the non-central 6x6 block
    L = alg("83")
    p = fundamental_semiinvariant(L)
    pf = principal_pfaffian_list(L)
    assert any(f.normalized() == p.normalized() for f in pf)


def test_invariants_heisenberg():
    H = heisenberg()
    got = invariant_basis_up_to_degree(H, 2)
    assert got == [P(H, "z"), P(H, "z^2")]


def test_invariants_solvable8_empty():
    assert invariant_basis_up_to_degree(alg("solvable8"), 4) == []


def test_invariants_150_degree_two():
    L = alg("150")
    got = invariant_basis_up_to_degree(L, 2)
    assert len(got) == 3
    assert same_span(got, [P(L, "x7"), P(L, "x7^2"), P(L, "x6^2 - 2*x3*x7")])


def test_invariants_are_invariant():
    for key in ("101", "136", "154", "diamond"):
        L = alg(key) if key != "diamond" else diamond()
        for f in invariant_basis_up_to_degree(L, 3):
            assert is_invariant(L, f)


def test_invariant_search_needs_positive_degree():
    with pytest.raises(ValueError):
        invariant_basis_up_to_degree(heisenberg(), 0)


def test_homogeneous_invariants_echelon():
    L = alg("101")
    basis = homogeneous_invariants(L, 2)
    lms = [f.leading_monomial() for f in basis]
    assert len(set(lms)) == len(lms)


def test_weights():
    L = alg("101")
    assert semi_invariant_weight(L, P(L, "x7")) == (0,) * 7
    R = alg("solvable3")
    assert semi_invariant_weight(R, P(R, "y")) == (1, 0, 0)
    assert semi_invariant_weight(R, P(R, "x")) is None
    D = diamond()
    assert semi_invariant_weight(D, P(D, "x*y")) is None
    assert semi_invariant_weight(D, P(D, "x*y - t*z")) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        semi_invariant_weight(D, P(D, "0"))


def test_trdeg_examples():
    L = alg("101")
    f3 = P(L, "x4^2 - 2*x3*x5 + 2*x2*x6 + 2*x1*x7")
    assert trdeg(L, [P(L, "x7"), f3, P(L, "x6")]).value == 3
    assert trdeg(L, [f3, f3 * f3]).value == 1
    assert trdeg(L, expected_polys("101", "M")).value == 5
    assert trdeg(L, []).value == 0


def test_trdeg_symbolic_fallback():
    L = alg("101")
    f3 = P(L, "x4^2 - 2*x3*x5 + 2*x2*x6 + 2*x1*x7")
    rep = trdeg(L, [f3, f3 * f3], points=2)
    assert rep.value == 1 and rep.method == "bareiss" and rep.exact
    rep = trdeg(L, [f3, f3 * f3], symbolic=False, points=2)
    assert not rep.exact


def test_sum_rule_examples():
    L = alg("101")
    rep = check_sum_rule(L, expected_polys("101", "Y"))
    assert (rep.lhs, rep.rhs, rep.equal) == (4, 4, True)
    assert all(rep.hypotheses.values())
    L = alg("136")
    rep = check_sum_rule(L, expected_polys("136", "Y"))
    assert (rep.lhs, rep.rhs, rep.equal) == (5, 5, True)
    H = build_triangular_nilradical(2)
    rep = check_sum_rule(H, [P(H, "e3_1")])
    assert (rep.lhs, rep.rhs) == (1, 1)


def test_sum_rule_rejects_non_invariant():
    L = alg("101")
    with pytest.raises(ValueError):
        check_sum_rule(L, [P(L, "x1")])
    with pytest.raises(ValueError):
        check_sum_rule(L, [P(L, "x7 + x7^2")])


def test_theorem14_examples():
    L = alg("101")
    cert = theorem14_certificate(L, expected_polys("101", "Y"))
    assert cert.granted and cert.verdict == "coregular, freely generated"
    L = alg("150")
    cert = theorem14_certificate(L, [P(L, "x7"), P(L, "x6^2 - 2*x3*x7")])
    assert not cert.granted
    assert cert.checks["count_equals_index"] is False
    A = abelian(2)
    assert theorem14_certificate(A, A.ring.gens()).granted


def test_theorem14_non_nilpotent_needs_witness():
    D = diamond()
    cert = theorem14_certificate(D, [P(D, "z"), P(D, "x*y - t*z")])
    assert cert.granted
    cert = theorem14_certificate(D, [P(D, "z")])
    assert not cert.granted and cert.checks["standing_hypothesis"] is False
    assert theorem14_certificate(D, [P(D, "z")], assume_trdeg=True).checks["standing_hypothesis"]


def test_theorem13_examples():
    rep = theorem13_tests(alg("150"))
    assert (rep.lhs1, rep.rhs1, rep.equality1) == (9, 9, True)
    assert rep.low_degree_trdeg == 2
    assert rep.not_coregular
    rep = theorem13_tests(alg("154"))
    assert rep.has_cp and rep.codim == 3 and rep.test3 is False
    assert rep.not_coregular
    rep = theorem13_tests(build_standard_filiform(5))
    assert rep.codim == 3 and rep.not_coregular


def test_theorem13_coregular_case_passes():
    rep = theorem13_tests(alg("101"))
    assert not rep.not_coregular and rep.reasons == []
