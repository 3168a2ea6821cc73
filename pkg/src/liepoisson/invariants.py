"""Index, fundamental semi-invariant, singular locus and Poisson-center search."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .liealg import LieAlgebraError
from .polycore import (
    DEFAULT_BUDGET,
    Ideal,
    Poly,
    codimension,
    gcd_list,
    jacobian,
    principal_pfaffians,
)
from .polycore.linalg import kernel
from .polycore.matrix import bareiss_rank, evaluated_rank
from .polycore.poly import DEGREVLEX


@dataclass(frozen=True)
class IndexReport:
    n: int
    t: int
    index: int
    c: int


def index_of(L):
    if "index" not in L._cache:
        B = L.structure_matrix()
        # evaluation gives a lower bound; Bareiss settles it unless the bound is sharp
        cap = L.n - (L.n % 2)
        rng = random.Random(0)
        best = 0
        for _ in range(3):
            best = max(best, evaluated_rank(B, [rng.randint(-20, 20) for _ in range(L.n)]))
            if best == cap:
                break
        t = best if best == cap or best == 0 and B.is_zero() else bareiss_rank(B)
        idx = L.n - t
        L._cache["index"] = IndexReport(L.n, t, idx, (L.n + idx) // 2)
    return L._cache["index"]


def fundamental_semiinvariant(L):
    """gcd of the principal t x t Pfaffians of the structure matrix (1 if abelian)."""
    if "p" not in L._cache:
        t = index_of(L).t
        if t == 0:
            p = Poly.const(L.ring, 1)
        else:
            pf = principal_pfaffians(L.structure_matrix(), t)
            p = gcd_list([f for f in pf.values() if f])
        L._cache["p"] = p
    return L._cache["p"]


def principal_pfaffian_list(L):
    t = index_of(L).t
    if t == 0:
        return []
    pf = principal_pfaffians(L.structure_matrix(), t)
    return [f for f in pf.values() if f]


def is_singular(L):
    return fundamental_semiinvariant(L).degree() > 0


def singular_locus_codim(L, budget=DEFAULT_BUDGET):
    """Codimension of the locus where the structure matrix drops rank."""
    if L.is_abelian():
        raise LieAlgebraError("singular locus of an abelian algebra is empty")
    if "cod" not in L._cache:
        gens = sorted({f.normalized() for f in principal_pfaffian_list(L)},
                      key=lambda f: (f.degree(), len(f)))
        L._cache["cod"] = codimension(Ideal(gens, budget=budget, ring=L.ring))
    return L._cache["cod"]


# -------------------------------------------------------- invariant search


def monomials_of_degree(n, d):
    """Exponent tuples of total degree d, in descending degrevlex order."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=DEGREVLEX.key, reverse=True)
    return out


def homogeneous_invariants(L, d):
    """Basis of the degree-d invariants, echelonized by leading monomial."""
    R = L.ring
    mons = monomials_of_degree(L.n, d)
    # equations: for every i the coefficient vector of ad x_i(f) vanishes
    rows: dict = {}
    for k, e in enumerate(mons):
        m = Poly(R, {e: 1})
        for i in range(L.n):
            img = L.ad(i, m)
            for e2, c in img.terms.items():
                rows.setdefault((i, e2), {})[k] = c
    sols = kernel(list(rows.values()), len(mons))
    return [Poly(R, {mons[k]: v for k, v in s.items()}) for s in sols]


def invariant_basis_up_to_degree(L, d, restrict_to=None):
    """Invariants of degree 1..d (constants excluded).

    With ``restrict_to`` a subalgebra h, returns the invariants of S(h) under
    the restricted bracket, written in the variables of g.
    """
    if d < 1:
        raise ValueError("degree bound must be at least 1")
    if restrict_to is not None:
        H, embed = L.restrict(restrict_to)
        return [embed(f) for f in invariant_basis_up_to_degree(H, d)]
    out = []
    for k in range(1, d + 1):
        out.extend(homogeneous_invariants(L, k))
    return out


def is_invariant(L, f):
    return all(not L.ad(i, f) for i in range(L.n))


def semi_invariant_weight(L, f):
    """The weight lambda with ad x_i(f) = lambda_i f, or None."""
    if not f:
        raise ValueError("zero polynomial has no weight")
    lm, lc = f.leading()
    weight = []
    for i in range(L.n):
        img = L.ad(i, f)
        lam = Fraction(img.terms.get(lm, 0)) / Fraction(lc)
        if img != f.scale(lam):
            return None
        weight.append(lam.numerator if lam.denominator == 1 else lam)
    return tuple(weight)


# -------------------------------------------------------------- trdeg


@dataclass
class TrdegReport:
    value: int
    point: tuple
    exact: bool
    method: str

    def __int__(self):
        return self.value


def trdeg(L, polys, symbolic=True, upper_bound=None, seed=0, points=7):
    """Transcendence degree of k[polys] = generic rank of their Jacobian.

    Random integer points (entries in [-20, 20]) give a lower bound.  It is
    exact when it meets min(#polys, n) or the caller's ``upper_bound``;
    otherwise, if ``symbolic``, fraction-free elimination decides.
    """
    polys = [f for f in polys if f and not f.is_constant()]
    if not polys:
        return TrdegReport(0, (), True, "trivial")
    J = jacobian(polys, L.ring)
    cap = min(len(polys), L.n)
    if upper_bound is not None:
        cap = min(cap, upper_bound)
    rng = random.Random(seed)
    best, best_pt = -1, ()
    for _ in range(points):
        pt = tuple(rng.randint(-20, 20) for _ in range(L.n))
        r = evaluated_rank(J, pt)
        if r > best:
            best, best_pt = r, pt
        if best >= cap:
            return TrdegReport(best, best_pt, True, "evaluation")
    if symbolic:
        return TrdegReport(bareiss_rank(J), best_pt, True, "bareiss")
    return TrdegReport(best, best_pt, False, "evaluation")


# --------------------------------------------------- sum rule and friends


def _check_homogeneous_invariants(L, gens):
    for f in gens:
        if not f or f.is_constant() or not f.is_homogeneous():
            raise ValueError(f"generator is not homogeneous of positive degree: {f}")
        if not is_invariant(L, f):
            raise ValueError(f"generator is not an invariant: {f}")


@dataclass
class SumRuleReport:
    lhs: int
    rhs: int
    equal: bool
    hypotheses: dict = field(default_factory=dict)


def check_sum_rule(L, gens):
    """Compare the sum of degrees with c(g) - deg p_g."""
    _check_homogeneous_invariants(L, gens)
    rep = index_of(L)
    p = fundamental_semiinvariant(L)
    lhs = sum(f.degree() for f in gens)
    rhs = rep.c - p.degree()
    w = semi_invariant_weight(L, p)
    hyp = {
        "unimodular": L.is_unimodular(),
        "p_invariant": w is not None and not any(w),
        "count_equals_index": len(gens) == rep.index,
        "independent": trdeg(L, gens, upper_bound=rep.index).value == len(gens),
    }
    return SumRuleReport(lhs, rhs, lhs == rhs, hyp)


@dataclass
class Theorem14Certificate:
    granted: bool
    checks: dict
    assumptions: list
    verdict: str


def theorem14_certificate(L, gens, assume_trdeg=False):
    """Freeness certificate: r = i(g) homogeneous independent invariants with
    degree sum at most c(g) - deg p_g generate the Poisson center."""
    checks = {}
    try:
        _check_homogeneous_invariants(L, gens)
        checks["homogeneous_invariants"] = True
    except ValueError:
        checks["homogeneous_invariants"] = False
    rep = index_of(L)
    p = fundamental_semiinvariant(L)
    checks["count_equals_index"] = len(gens) == rep.index
    if checks["homogeneous_invariants"]:
        checks["independent"] = trdeg(L, gens, upper_bound=rep.index).value == len(gens)
    else:
        checks["independent"] = False
    checks["degree_sum_bound"] = sum(f.degree() for f in gens) <= rep.c - p.degree()
    assumptions = []
    if checks["independent"] and checks["count_equals_index"]:
        # i(g) independent invariants already force trdeg Y(g) = i(g)
        assumptions.append("trdeg Y(g) = i(g): witnessed by the generators")
        checks["standing_hypothesis"] = True
    elif L.is_nilpotent():
        assumptions.append("trdeg Y(g) = i(g): holds for nilpotent algebras")
        checks["standing_hypothesis"] = True
    elif assume_trdeg:
        assumptions.append("trdeg Y(g) = i(g): assumed by the caller")
        checks["standing_hypothesis"] = True
    else:
        checks["standing_hypothesis"] = False
    granted = all(checks.values())
    verdict = "coregular, freely generated" if granted else "not certified"
    return Theorem14Certificate(granted, checks, assumptions, verdict)


@dataclass
class Theorem13Report:
    lhs1: int
    rhs1: int
    inequality1: bool
    equality1: bool
    low_degree_trdeg: int | None
    codim: int | None
    inequality2: bool | None
    has_cp: bool | None
    test3: bool | None
    not_coregular: bool
    reasons: list


def theorem13_tests(L, gens=None, has_cp=None, codim=None, budget=DEFAULT_BUDGET, seed=0):
    """Necessary conditions for coregularity; any failure proves non-coregularity.

    The index inequality 3 i + 2 deg p <= n + 2 dim Z, with equality iff every
    generator has degree <= 2; the codimension of the singular locus is at most
    3; if g has a CP, that codimension is at most 2.
    """
    rep = index_of(L)
    p = fundamental_semiinvariant(L)
    zdim = L.center().dim
    lhs = 3 * rep.index + 2 * p.degree()
    rhs = L.n + 2 * zdim
    reasons = []
    ineq1 = lhs <= rhs
    if not ineq1:
        reasons.append("index inequality fails")
    low = None
    if lhs == rhs:
        # a coregular g would be generated in degree <= 2
        low_polys = invariant_basis_up_to_degree(L, 2)
        low = trdeg(L, low_polys, upper_bound=rep.index).value
        if low < rep.index:
            reasons.append("equality in the index inequality but degree <= 2 invariants have trdeg "
                           f"{low} < {rep.index}")
        if gens is not None and any(f.degree() > 2 for f in gens):
            reasons.append("equality in the index inequality but a generator has degree > 2")
    if codim is None and not L.is_abelian():
        codim = singular_locus_codim(L, budget)
    ineq2 = None if codim is None else codim <= 3
    if ineq2 is False:
        reasons.append(f"codim {codim} > 3")
    if has_cp is None:
        from .regularity import find_coordinate_cp
        has_cp = find_coordinate_cp(L) is not None or None
    test3 = None
    if has_cp and codim is not None:
        test3 = codim <= 2
        if not test3 and L.is_nilpotent():
            reasons.append(f"admits a CP but codim {codim} > 2")
    return Theorem13Report(lhs, rhs, ineq1, lhs == rhs, low, codim, ineq2, has_cp,
                           test3, bool(reasons), reasons)
