"""Buchberger's algorithm with the Gebauer-Moeller criteria, and what it buys:
normal forms, ideal membership, Krull dimension and subalgebra membership.

Polynomials are handled internally as plain ``{exponent: coefficient}``
dicts; basis elements are kept monic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .poly import DEGREVLEX, Poly, Ring, block_order

EMPTY_VARIETY = -1


class GroebnerBudgetExceeded(RuntimeError):
    """Raised when a Groebner computation hits its pair or degree cap."""

    def __init__(self, message, pairs=0, degree=0):
        super().__init__(message)
        self.pairs = pairs
        self.degree = degree


@dataclass(frozen=True)
class Budget:
    max_pairs: int = 50000
    max_degree: int = 60

    def __post_init__(self):
        if self.max_pairs <= 0 or self.max_degree <= 0:
            raise ValueError("Groebner budget bounds must be positive")


DEFAULT_BUDGET = Budget()


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _disjoint(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _GB:
    """Working state for one Buchberger run."""

    def __init__(self, order, budget):
        self.key = order.key
        self.budget = budget
        self.polys: list = []  # monic dicts
        self.lms: list = []
        self.sugar: list = []
        self.pairs_done = 0

    # -- helpers
    def lead(self, f):
        key = self.key
        return max(f, key=key)

    def monic(self, f, lm):
        c = f[lm]
        if c == 1:
            return f
        inv = Fraction(1) / Fraction(c)
        return {e: _norm(v * inv) for e, v in f.items()}

    def reduce(self, f, basis_idx, full=True):
        """Reduce dict f modulo the basis elements listed in ``basis_idx``."""
        key = self.key
        polys, lms = self.polys, self.lms
        work = dict(f)
        heap = [tuple(-x for x in key(e)) + (e,) for e in work]
        heapq.heapify(heap)
        rem = {}
        while heap:
            item = heapq.heappop(heap)
            e = item[-1]
            c = work.pop(e, None)
            if c is None:
                continue
            div = None
            for i in basis_idx:
                if _divides(lms[i], e):
                    div = i
                    break
            if div is None:
                if not full:
                    rem[e] = c
                    rem.update(work)
                    return rem
                rem[e] = c
                continue
            g = polys[div]
            lg = lms[div]
            m = tuple([x - y for x, y in zip(e, lg)])
            for eg, cg in g.items():
                if eg == lg:
                    continue
                t = tuple([x + y for x, y in zip(m, eg)])
                v = work.get(t)
                if v is None:
                    work[t] = _norm(-c * cg)
                    heapq.heappush(heap, tuple(-x for x in key(t)) + (t,))
                else:
                    v = _norm(v - c * cg)
                    if v:
                        work[t] = v
                    else:
                        del work[t]
        return rem

    def spoly(self, i, j):
        f, g = self.polys[i], self.polys[j]
        lf, lg = self.lms[i], self.lms[j]
        lcm = _lcm(lf, lg)
        mf = tuple([x - y for x, y in zip(lcm, lf)])
        mg = tuple([x - y for x, y in zip(lcm, lg)])
        out = {}
        for e, c in f.items():
            if e == lf:
                continue
            out[tuple([x + y for x, y in zip(e, mf)])] = c
        for e, c in g.items():
            if e == lg:
                continue
            t = tuple([x + y for x, y in zip(e, mg)])
            v = _norm(out.get(t, 0) - c)
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out

    def run(self, gens):
        key = self.key
        # G: active indices; B: pair heap
        G: list = []
        B: list = []
        seq = 0
        pending = []
        for f in gens:
            if f:
                lm = self.lead(f)
                pending.append((sum(lm), key(lm), f))
        pending.sort(key=lambda t: (t[0], t[1]))
        for _, _, f in pending:
            r = self.reduce(f, G)
            if not r:
                continue
            G, B, seq = self._insert(r, G, B, seq)
        while B:
            sug, _, _, i, j = heapq.heappop(B)
            lcm = _lcm(self.lms[i], self.lms[j])
            if sum(lcm) > self.budget.max_degree:
                raise GroebnerBudgetExceeded(
                    f"Groebner degree cap {self.budget.max_degree} exceeded",
                    self.pairs_done, sum(lcm))
            self.pairs_done += 1
            if self.pairs_done > self.budget.max_pairs:
                raise GroebnerBudgetExceeded(
                    f"Groebner pair cap {self.budget.max_pairs} exceeded",
                    self.pairs_done, sum(lcm))
            s = self.spoly(i, j)
            if not s:
                continue
            r = self.reduce(s, range(len(self.polys)))
            if not r:
                continue
            G, B, seq = self._insert(r, G, B, seq, sugar=sug)
        return G

    def _insert(self, f, G, B, seq, sugar=None):
        lm = self.lead(f)
        f = self.monic(f, lm)
        h = len(self.polys)
        self.polys.append(f)
        self.lms.append(lm)
        deg = max(sum(e) for e in f)
        self.sugar.append(max(deg, sugar or 0))
        if lm == (0,) * len(lm):
            # the unit ideal
            return [h], [], seq
        lms = self.lms
        # Gebauer-Moeller update
        C = list(G)
        D = []
        while C:
            g1 = C.pop()
            l1 = _lcm(lm, lms[g1])
            if _disjoint(lm, lms[g1]):
                D.append(g1)
                continue
            dominated = False
            for g2 in C:
                if _divides(_lcm(lm, lms[g2]), l1):
                    dominated = True
                    break
            if not dominated:
                for g2 in D:
                    if _divides(_lcm(lm, lms[g2]), l1):
                        dominated = True
                        break
            if not dominated:
                D.append(g1)
        E = [g for g in D if not _disjoint(lm, lms[g])]
        newB = []
        for item in B:
            _, _, _, a, b = item
            lab = _lcm(lms[a], lms[b])
            if (not _divides(lm, lab)
                    or _lcm(lms[a], lm) == lab
                    or _lcm(lm, lms[b]) == lab):
                newB.append(item)
        for g in E:
            lab = _lcm(lms[g], lm)
            sg = self.sugar[g] + sum(lab) - sum(lms[g])
            sh = self.sugar[h] + sum(lab) - sum(lm)
            seq += 1
            newB.append((max(sg, sh), self.key(lab), seq, g, h))
        heapq.heapify(newB)
        G = [g for g in G if not _divides(lm, lms[g])] + [h]
        return G, newB, seq

    def reduced_basis(self, G):
        G = sorted(G, key=lambda i: self.key(self.lms[i]))
        out = []
        for i in G:
            others = [j for j in G if j != i]
            f = self.polys[i]
            lm = self.lms[i]
            tail = {e: c for e, c in f.items() if e != lm}
            r = self.reduce(tail, others) if tail else {}
            r[lm] = 1
            out.append(r)
        return out


def groebner_basis(gens, order=DEGREVLEX, budget=DEFAULT_BUDGET):
    """Reduced Groebner basis (list of monic Polys, ascending leading monomials)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    st = _GB(order, budget)
    G = st.run([dict(g.terms) for g in gens])
    basis = st.reduced_basis(G)
    polys = [Poly(ring, b) for b in basis]
    polys.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return polys


class Ideal:
    """An ideal of a polynomial ring given by generators and a monomial order.

    The reduced Groebner basis is computed on first use and cached.
    """

    def __init__(self, generators, order=DEGREVLEX, budget=DEFAULT_BUDGET, ring=None):
        self.generators = [g for g in generators]
        self.order = order
        self.budget = budget
        if ring is None:
            if not self.generators:
                raise ValueError("ring required for an ideal without generators")
            ring = self.generators[0].ring
        self.ring = ring
        self._gb = None

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def groebner(self):
        if self._gb is None:
            self._gb = groebner_basis(self.generators, self.order, self.budget)
        return self._gb

    def is_unit(self):
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def normal_form(self, f):
        gb = self.groebner()
        if not gb:
            return f
        st = _GB(self.order, self.budget)
        for g in gb:
            st.polys.append(g.terms)
            st.lms.append(g.leading_monomial(self.order))
        return Poly(f.ring, st.reduce(dict(f.terms), range(len(gb))))

    def contains(self, f):
        return not self.normal_form(f)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.groebner()]

    def dimension(self):
        return ideal_dimension(self)


def _min_hitting_set(supports, n):
    # smallest set of variables meeting every support
    supports = [s for s in {frozenset(s) for s in supports}]
    # drop supersets: hitting the smaller support suffices
    supports = [s for s in supports if not any(t < s for t in supports)]
    if not supports:
        return 0
    for k in range(1, n + 1):
        for T in combinations(range(n), k):
            Ts = set(T)
            if all(Ts & s for s in supports):
                return k
    return n


def ideal_dimension(ideal):
    """Krull dimension of R/I; ``EMPTY_VARIETY`` (-1) when I is the unit ideal."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    gb = ideal.groebner()
    n = ideal.ring.n
    if not gb:
        return n
    if ideal.is_unit():
        return EMPTY_VARIETY
    supports = [[i for i, x in enumerate(m) if x] for m in ideal.leading_monomials()]
    return n - _min_hitting_set(supports, n)


def codimension(ideal):
    """n - dim; the unit ideal (empty variety) reports n + 1."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    d = ideal_dimension(ideal)
    n = ideal.ring.n
    return n + 1 if d == EMPTY_VARIETY else n - d


# ----------------------------------------------------- subalgebra membership


def subalgebra_membership(f, gens, budget=DEFAULT_BUDGET, tag="_t"):
    """Decide whether ``f`` lies in the k-algebra generated by ``gens``.

    Works in k[x, t] with the ideal (t_j - g_j) and an elimination order in
    which the x-block dominates; f is in k[g] iff its normal form involves only
    the tags.  Returns ``(member, expression)`` where the expression is the
    normal form as a polynomial in the tag ring.
    """
    ring = f.ring
    k = len(gens)
    tags = [f"{tag}{j}" for j in range(k)]
    big = Ring(ring.names + tuple(tags))
    order = block_order(ring.n)
    idx = list(range(ring.n))
    ideal_gens = [Poly.var(big, ring.n + j) - g.embed(big, idx) for j, g in enumerate(gens)]
    I = Ideal(ideal_gens, order=order, budget=budget, ring=big)
    nf = I.normal_form(f.embed(big, idx))
    member = all(not any(e[:ring.n]) for e in nf.terms)
    tag_ring = Ring(tags) if tags else None
    expr = None
    if member and tag_ring is not None:
        expr = Poly(tag_ring, {e[ring.n:]: c for e, c in nf.terms.items()})
    return member, expr
