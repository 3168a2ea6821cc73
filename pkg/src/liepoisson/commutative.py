"""Poisson-commutative subalgebras: argument shifts, Vergne chains, stability and
completeness checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .invariants import (
    fundamental_semiinvariant,
    index_of,
    invariant_basis_up_to_degree,
    is_invariant,
    trdeg,
)
from .polycore import (
    DEFAULT_BUDGET,
    GroebnerBudgetExceeded,
    Ideal,
    Poly,
    codimension,
    determinant,
    jacobian,
    poly_parse,
    subalgebra_membership,
)
from .polycore.linalg import Echelon, kernel


@dataclass
class GeneratedSubalgebra:
    gens: list
    provenance: str = "manual"
    flags: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def _dedupe(polys):
    seen = set()
    out = []
    for f in polys:
        if not f:
            continue
        key = f.normalized()
        if key in seen:
            continue
        seen.add(key)
        out.append(f)
    return out


# ------------------------------------------------------------- shifts


def xi_shifts(f, xi, keep_zeros=False):
    """Coefficients f^0, ..., f^{d-1} of f(x + xi t) in powers of t.

    The top coefficient (a constant) is left out; zero coefficients are
    dropped unless ``keep_zeros``.
    """
    if f.is_constant():
        raise ValueError("shifts of a constant polynomial")
    coeffs = f.translate(xi)[:f.degree()]
    if keep_zeros:
        return coeffs
    return [c for c in coeffs if c]


def mf_algebra(L, y_gens, xi):
    """Subalgebra generated by the xi-shifts of the given invariants."""
    for f in y_gens:
        if not is_invariant(L, f):
            raise ValueError(f"not an invariant: {f}")
    gens = []
    for f in y_gens:
        if f.is_constant():
            continue
        gens.extend(xi_shifts(f, xi))
    A = GeneratedSubalgebra(_dedupe(gens), f"mf_shift({','.join(map(str, xi))})")
    A.flags["commutative"] = is_poisson_commutative(L, A)
    return A


# --------------------------------------------------------- membership


def _homogeneous_products(gens, d):
    """All products of gens (with repetition) of total degree exactly d."""
    degs = [g.degree() for g in gens]
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(acc)
            return
        for j in range(start, len(gens)):
            if degs[j] <= remaining:
                rec(j, remaining - degs[j], acc * gens[j])

    rec(0, d, Poly.const(gens[0].ring, 1))
    return out


def graded_membership(f, gens):
    """Membership of f in k[gens] for homogeneous gens, by linear algebra in
    each degree."""
    if not f:
        return True
    gens = [g for g in gens if g and not g.is_constant()]
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("graded membership needs homogeneous generators")
    for d, comp in f.homogeneous_components().items():
        if d == 0:
            continue
        if not gens:
            return False
        prods = _homogeneous_products(gens, d)
        if not prods:
            return False
        mons = {}
        ech = Echelon()
        for p in prods:
            ech.add({mons.setdefault(e, len(mons)): c for e, c in p.terms.items()})
        target = {}
        for e, c in comp.terms.items():
            if e not in mons:
                return False
            target[mons[e]] = c
        if not ech.contains(target):
            return False
    return True


def in_subalgebra(f, gens, method="auto", budget=DEFAULT_BUDGET):
    """Is f in the algebra generated by gens?  ``method`` is "graded",
    "groebner" or "auto" (graded when every generator is homogeneous)."""
    gens = [g for g in gens if g and not g.is_constant()]
    if method == "auto":
        method = "graded" if all(g.is_homogeneous() for g in gens) else "groebner"
    if method == "graded":
        return graded_membership(f, gens)
    if not gens:
        return f.is_constant()
    return subalgebra_membership(f, gens, budget)[0]


# ---------------------------------------------------------- Vergne chain


def _prune(polys, method="auto", budget=DEFAULT_BUDGET):
    """Drop generators lying in the algebra generated by the others."""
    polys = sorted(_dedupe(polys), key=lambda f: (f.degree(), f.leading_monomial()))
    kept = []
    for f in polys:
        if kept and in_subalgebra(f, kept, method, budget):
            continue
        kept.append(f)
    # a later generator can make an earlier one redundant only if degrees tie
    out = []
    for j, f in enumerate(kept):
        others = out + kept[j + 1:]
        if others and in_subalgebra(f, others, method, budget):
            continue
        out.append(f)
    return out


def vergne_generators(L, flag, degree_cap=5, budget=DEFAULT_BUDGET):
    """Generators of the algebra spanned by the Poisson centers Y(g_j) of a flag."""
    raw = []
    incomplete = []
    for j in range(1, len(flag.chain)):
        step = flag[j]
        inv = invariant_basis_up_to_degree(L, degree_cap, restrict_to=step)
        H, _ = L.restrict(step)
        need = index_of(H).index
        got = trdeg(L, inv, upper_bound=need).value if inv else 0
        if got < need:
            incomplete.append(j)
        raw.extend(inv)
    flags = {"incomplete_steps": incomplete, "pruned": True}
    try:
        gens = _prune(raw, budget=budget)
    except GroebnerBudgetExceeded:
        gens = _dedupe(raw)
        flags["pruned"] = False
    return GeneratedSubalgebra(gens, "vergne(flag)", flags)


# ------------------------------------------------------------- checks


def is_poisson_commutative(L, A):
    gens = list(A)
    for a, b in combinations(gens, 2):
        if L.poisson_bracket(a, b):
            return False
    return True


def g_stability(L, A, method="auto", budget=DEFAULT_BUDGET, detail=False):
    """Does {x_i, a} lie in k[A] for every basis element x_i and generator a?"""
    gens = list(A)
    failures = []
    for a in gens:
        for i in range(L.n):
            b = L.ad(i, a)
            if b and not in_subalgebra(b, gens, method, budget):
                failures.append((L.names[i], a))
                if not detail:
                    return False
    return (not failures, failures) if detail else True


def jacobian_locus_ideal(L, gens, budget=DEFAULT_BUDGET):
    """Ideal of maximal minors of the Jacobian of gens (None if r > n)."""
    r = len(gens)
    if r > L.n:
        return None
    J = jacobian(gens, L.ring)
    minors = []
    for cols in combinations(range(L.n), r):
        d = determinant(J.submatrix(range(r), cols))
        if d:
            minors.append(d.normalized())
    minors = sorted(set(minors), key=lambda f: (f.degree(), len(f), str(f)))
    return Ideal(minors, budget=budget, ring=L.ring)


def jacobian_locus_codim(L, gens, budget=DEFAULT_BUDGET):
    """Codimension of {xi : d f_1, ..., d f_r dependent at xi}.

    Dependent generators (or more generators than variables) give codim 0;
    an empty locus reports n + 1.
    """
    gens = [g for g in gens if g and not g.is_constant()]
    I = jacobian_locus_ideal(L, gens, budget)
    if I is None or not I.generators:
        return 0
    return codimension(I)


@dataclass
class CompletenessCertificate:
    trdeg: int
    c_g: int
    is_complete: bool
    jacobian_locus_codim: int | None
    is_algebraically_closed: bool | None
    is_strongly_complete: bool | None
    notes: list = field(default_factory=list)


def completeness_certificate(L, A, budget=DEFAULT_BUDGET):
    """Complete = trdeg equals c(g); strongly complete additionally needs the
    algebra to be algebraically closed, certified through a Jacobian locus of
    codimension at least two (homogeneous generators only)."""
    gens = [g for g in A if g and not g.is_constant()]
    c = index_of(L).c
    notes = []
    commuting = is_poisson_commutative(L, GeneratedSubalgebra(gens))
    if not commuting:
        notes.append("generators do not Poisson-commute")
    td = trdeg(L, gens, upper_bound=c).value
    complete = td == c
    if td < len(gens):
        notes.append("generators are algebraically dependent: the Jacobian test does not apply")
    if not all(g.is_homogeneous() for g in gens):
        notes.append("non-homogeneous generators: closure undecided")
        return CompletenessCertificate(td, c, complete, None, None, None, notes)
    codim = jacobian_locus_codim(L, gens, budget)
    closed = codim >= 2
    if not L.is_nilpotent():
        notes.append("algebraicity of g assumed for the closure criterion")
    strongly = complete and closed and commuting
    return CompletenessCertificate(td, c, complete, codim, closed, strongly, notes)


@dataclass
class Theorem21Report:
    trdeg: int
    bound: int
    holds: bool
    equality: bool


def theorem21_bound_check(L, y_gens, xi):
    """trdeg Y_xi(g) against c(g) - deg p_g."""
    A = mf_algebra(L, y_gens, xi)
    c = index_of(L).c
    bound = c - fundamental_semiinvariant(L).degree()
    td = trdeg(L, list(A), upper_bound=c).value
    return Theorem21Report(td, bound, td <= bound, td == bound)


# ---------------------------------------------------------- relations


def verify_relation(named, relation, ring):
    """Substitute named polynomials into a relation expression; True iff it
    vanishes identically.  Raises UnknownVariable for undeclared names."""
    if isinstance(relation, str):
        value = poly_parse(relation, ring, named)
    else:
        value = relation
    return not value


def commuting_monomials_check(L, f):
    """Every monomial of f only involves pairwise-commuting basis elements."""
    for e in f.terms:
        used = [i for i, k in enumerate(e) if k]
        for a, b in combinations(used, 2):
            if L.bracket_basis(a, b):
                return False
    return True


# ------------------------------------------------------ algebra comparison


def same_algebra(a_gens, b_gens, method="auto", budget=DEFAULT_BUDGET):
    """k[a_gens] == k[b_gens], by membership both ways."""
    a = [g for g in a_gens if g and not g.is_constant()]
    b = [g for g in b_gens if g and not g.is_constant()]
    return (all(in_subalgebra(f, b, method, budget) for f in a)
            and all(in_subalgebra(f, a, method, budget) for f in b))


def in_symmetric_algebra(f, sub):
    """Is f a polynomial in the elements of the subspace ``sub``?

    Viewing f as a function on g*, this means f is invariant under translation
    by the annihilator of ``sub``; in characteristic zero that is the vanishing
    of the derivatives along the annihilator.
    """
    L = sub.algebra
    ann = kernel([dict(r) for r in sub.basis], L.n) if sub.dim else [{i: 1} for i in range(L.n)]
    for v in ann:
        d = Poly.zero(f.ring)
        for i, c in v.items():
            d = d + f.diff(i).scale(c)
        if d:
            return False
    return True
