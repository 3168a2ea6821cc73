"""Exact rational linear algebra on sparse rows.

A sparse row is a dict ``{column: nonzero value}``.  Dense inputs (lists of
lists) are accepted everywhere and converted on entry.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import as_scalar


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def to_sparse(row):
    if isinstance(row, dict):
        return {j: as_scalar(v) for j, v in row.items() if v}
    return {j: as_scalar(v) for j, v in enumerate(row) if v}


def to_dense(row, ncols):
    out = [0] * ncols
    for j, v in row.items():
        out[j] = v
    return out


class Echelon:
    """Incremental reduced echelon form.

    Rows are kept fully reduced against each other, so ``basis()`` is the
    canonical RREF of the span at every moment.
    """

    def __init__(self, ncols=None):
        self.ncols = ncols
        self.pivots: dict = {}  # pivot column -> row with 1 at that column

    def __len__(self):
        return len(self.pivots)

    def reduce_full(self, row):
        # pivot rows vanish on every other pivot column, so one sweep suffices
        row = dict(row)
        piv = self.pivots
        while True:
            hits = [c for c in row if c in piv]
            if not hits:
                return row
            col = min(hits)
            v = row[col]
            for j, w in piv[col].items():
                x = _norm(row.get(j, 0) - v * w)
                if x:
                    row[j] = x
                else:
                    row.pop(j, None)

    def add(self, row):
        """Insert a row; returns True if it enlarged the span."""
        row = self.reduce_full(to_sparse(row))
        if not row:
            return False
        col = min(row)
        lead = row[col]
        if lead != 1:
            inv = Fraction(1) / Fraction(lead)
            row = {j: _norm(v * inv) for j, v in row.items()}
        for c, prow in self.pivots.items():
            v = prow.get(col)
            if v:
                for j, w in row.items():
                    x = _norm(prow.get(j, 0) - v * w)
                    if x:
                        prow[j] = x
                    else:
                        prow.pop(j, None)
        self.pivots[col] = row
        return True

    def contains(self, row):
        return not self.reduce_full(to_sparse(row))

    def basis(self):
        return [dict(self.pivots[c]) for c in sorted(self.pivots)]

    def pivot_columns(self):
        return sorted(self.pivots)


def rref(rows, ncols=None):
    """Canonical RREF of the row span: (list of sparse rows, pivot columns)."""
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.basis(), ech.pivot_columns()


def rank(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return len(ech)


def kernel(rows, ncols):
    """Canonical (RREF) basis of {v : A v = 0}, as sparse rows."""
    basis, pivots = rref(rows, ncols)
    pivset = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: 1}
        for prow, pc in zip(basis, pivots):
            w = prow.get(f)
            if w:
                v[pc] = -w
        vecs.append(v)
    out, _ = rref(vecs, ncols)
    return out


def kernel_dense(matrix):
    """Kernel of a dense matrix, as dense row vectors in RREF."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    return [to_dense(v, ncols) for v in kernel(matrix, ncols)]


def rref_dense(matrix, ncols=None):
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    basis, _ = rref(matrix, ncols)
    return [to_dense(v, ncols) for v in basis]


def det_dense(matrix):
    """Determinant of a square rational matrix by Gaussian elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return _norm(det)


def rank_dense(matrix):
    return rank(matrix)


def matmul(a, b):
    return [[_norm(sum(Fraction(x) * y for x, y in zip(row, col)))
             for col in zip(*b)] for row in a]
