"""Matrices with polynomial entries: Pfaffians, fraction-free rank and determinant."""

from __future__ import annotations

import random
from itertools import combinations

from .linalg import rank as scalar_rank
from .poly import Poly, PolyError


class PolyMatrix:
    """Dense matrix of :class:`Poly` over a common ring.

    With ``skew=True`` the constructor checks that the matrix is square,
    alternating (zero diagonal) and satisfies ``m[i][j] == -m[j][i]``.
    """

    __slots__ = ("ring", "rows", "cols", "entries", "skew")

    def __init__(self, entries, ring=None, skew=False):
        entries = [list(r) for r in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(r) != self.cols for r in entries):
            raise PolyError("ragged matrix")
        if ring is None:
            for r in entries:
                for e in r:
                    if isinstance(e, Poly):
                        ring = e.ring
                        break
                if ring is not None:
                    break
        if ring is None:
            raise PolyError("cannot infer the ring of a matrix without Poly entries")
        self.ring = ring
        self.entries = tuple(
            tuple(e if isinstance(e, Poly) else Poly.const(ring, e) for e in r)
            for r in entries
        )
        self.skew = False
        if skew:
            self._check_skew()
            self.skew = True

    def _check_skew(self):
        if self.rows != self.cols:
            raise PolyError("skew matrix must be square")
        for i in range(self.rows):
            if self.entries[i][i]:
                raise PolyError(f"skew matrix has nonzero diagonal entry ({i}, {i})")
            for j in range(i + 1, self.rows):
                if self.entries[i][j] != -self.entries[j][i]:
                    raise PolyError(f"skew-symmetry violated at ({i}, {j})")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.entries)
        return f"PolyMatrix([{body}])"

    def shape(self):
        return self.rows, self.cols

    def tolist(self):
        return [list(r) for r in self.entries]

    def submatrix(self, rows, cols):
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows], self.ring)

    def principal(self, idx):
        return PolyMatrix([[self.entries[i][j] for j in idx] for i in idx], self.ring,
                          skew=self.skew)

    def transpose(self):
        return PolyMatrix([list(c) for c in zip(*self.entries)], self.ring)

    def evaluate(self, point):
        return [[e.evaluate(point) for e in r] for r in self.entries]

    def is_zero(self):
        return all(not e for r in self.entries for e in r)


# ------------------------------------------------------------- Pfaffians


def _pf_memo(m, idx, memo):
    if not idx:
        return Poly.const(m.ring, 1)
    hit = memo.get(idx)
    if hit is not None:
        return hit
    a = m.entries
    i0 = idx[0]
    total = Poly.zero(m.ring)
    for pos in range(1, len(idx)):
        entry = a[i0][idx[pos]]
        if not entry:
            continue
        rest = idx[1:pos] + idx[pos + 1:]
        sub = _pf_memo(m, rest, memo)
        if not sub:
            continue
        term = entry * sub
        total = total + term if pos % 2 == 1 else total - term
    memo[idx] = total
    return total


def _require_skew(m):
    if not m.skew:
        # validate now; callers may pass plain matrices
        m._check_skew()


def pfaffian(m):
    """Pfaffian of a skew-symmetric matrix (Laplace expansion on the first row)."""
    _require_skew(m)
    if m.rows % 2:
        raise PolyError("Pfaffian of an odd-size matrix")
    return _pf_memo(m, tuple(range(m.rows)), {})


def principal_pfaffians(m, t, index_sets=None):
    """Pfaffians of all principal ``t x t`` submatrices, keyed by index tuple.

    All expansions share one memo table, so overlapping sub-Pfaffians are
    computed once.
    """
    _require_skew(m)
    if t % 2:
        raise PolyError("principal Pfaffians need even size")
    memo: dict = {}
    sets = index_sets if index_sets is not None else combinations(range(m.rows), t)
    return {tuple(s): _pf_memo(m, tuple(s), memo) for s in sets}


# ------------------------------------------------------------ Bareiss


def _bareiss(entries, ring, want_det=False):
    """Fraction-free elimination with full pivoting.

    Returns ``(rank, det)``; ``det`` is only meaningful for square input with
    ``want_det`` set.  Pivots are chosen with the fewest terms to limit
    intermediate growth.
    """
    a = [list(r) for r in entries]
    nr = len(a)
    nc = len(a[0]) if a else 0
    prev = Poly.const(ring, 1)
    sign = 1
    k = 0
    while k < min(nr, nc):
        best = None
        for i in range(k, nr):
            row = a[i]
            for j in range(k, nc):
                e = row[j]
                if e and (best is None or len(e) < best[0]):
                    best = (len(e), i, j)
                    if best[0] == 1 and e.is_constant():
                        break
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            sign = -sign
        piv = a[k][k]
        rowk = a[k]
        for i in range(k + 1, nr):
            ri = a[i]
            lik = ri[k]
            for j in range(k + 1, nc):
                v = piv * ri[j]
                if lik and rowk[j]:
                    v = v - lik * rowk[j]
                if k and v:
                    v = v.divexact(prev)
                ri[j] = v
            ri[k] = Poly.zero(ring)
        prev = piv
        k += 1
    det = None
    if want_det:
        if k < nr:
            det = Poly.zero(ring)
        else:
            det = a[nr - 1][nr - 1] * sign if nr else Poly.const(ring, 1)
    return k, det


def determinant(m):
    if m.rows != m.cols:
        raise PolyError("determinant of a non-square matrix")
    if m.rows == 0:
        return Poly.const(m.ring, 1)
    _, det = _bareiss(m.entries, m.ring, want_det=True)
    return det


def bareiss_rank(m):
    return _bareiss(m.entries, m.ring)[0]


def random_point(ring_size, rng, lo=-20, hi=20):
    return [rng.randint(lo, hi) for _ in range(ring_size)]


def evaluated_rank(m, point):
    return scalar_rank(m.evaluate(point))


def rank_over_fraction_field(m, upper_bound=None, trials=3, seed=0):
    """Rank of ``m`` over the field of rational functions.

    A few random integer evaluations give a lower bound; when it meets the
    trivial bound ``min(rows, cols)`` (or the caller's ``upper_bound``) the
    answer is settled.  Otherwise the fraction-free elimination decides.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    cap = min(m.rows, m.cols)
    if upper_bound is not None:
        cap = min(cap, upper_bound)
    if m.is_zero():
        return 0
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        r = evaluated_rank(m, random_point(m.ring.n, rng))
        best = max(best, r)
        if best >= cap:
            return best
    return bareiss_rank(m)


def jacobian(polys, ring=None):
    if ring is None:
        ring = polys[0].ring
    return PolyMatrix([[f.diff(i) for i in range(ring.n)] for f in polys], ring)
