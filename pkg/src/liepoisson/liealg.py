"""Lie algebras given by structure constants, and the Lie-Poisson bracket on S(g)."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .polycore import Poly, PolyMatrix, Ring, as_scalar, poly_parse
from .polycore.linalg import Echelon, det_dense, kernel, rref, to_dense
from .polycore.matrix import rank_over_fraction_field


class LieAlgebraError(ValueError):
    pass


class JacobiError(LieAlgebraError):
    def __init__(self, triple, names):
        self.triple = triple
        self.names = tuple(names[t] for t in triple)
        super().__init__("Jacobi identity fails on (" + ", ".join(self.names) + ")")


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q.

    ``consts`` maps ``(i, j)`` with ``i < j`` (0-based) to a sparse vector
    ``{k: c_ij^k}``.  Antisymmetry is implied; Jacobi is checked on
    construction unless ``check=False``.
    """

    def __init__(self, names, consts=None, name=None, aliases=(), check=True):
        self.names = tuple(names)
        self.n = len(self.names)
        self.ring = Ring(self.names)
        self.name = name
        self.aliases = tuple(aliases)
        cleaned = {}
        for (i, j), vec in (consts or {}).items():
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise LieAlgebraError(f"bracket index out of range: ({i + 1}, {j + 1})")
            if i == j:
                raise LieAlgebraError(f"bracket of x{i + 1} with itself")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            v = {k: as_scalar(c) * sign for k, c in vec.items() if c}
            if v:
                if (i, j) in cleaned:
                    raise LieAlgebraError(f"bracket ({i + 1}, {j + 1}) given twice")
                cleaned[(i, j)] = v
        self.consts = cleaned
        self._cache: dict = {}
        if check:
            bad = self.jacobi_violation()
            if bad is not None:
                raise JacobiError(bad, self.names)

    def __reduce__(self):
        return (LieAlgebra, (self.names, self.consts, self.name, self.aliases, False))

    def __repr__(self):
        label = self.name or "g"
        return f"LieAlgebra({label}, dim={self.n})"

    # -- brackets of basis elements and vectors
    def bracket_basis(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.consts.get((i, j), {})
        return {k: -c for k, c in self.consts.get((j, i), {}).items()}

    def bracket(self, u, v):
        """Bracket of two coordinate vectors (dense lists or sparse dicts)."""
        if not isinstance(u, dict):
            u = {i: c for i, c in enumerate(u) if c}
        if not isinstance(v, dict):
            v = {i: c for i, c in enumerate(v) if c}
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: _norm(c) for k, c in out.items() if c}

    def bracket_dense(self, u, v):
        return to_dense(self.bracket(u, v), self.n)

    def jacobi_violation(self):
        """First triple (i, j, k) with a nonzero Jacobi sum, or None."""
        n = self.n
        e = [{i: 1} for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s: dict = {}
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for t, v in self.bracket(self.bracket(e[a], e[b]), e[c]).items():
                            s[t] = s.get(t, 0) + v
                    if any(s.values()):
                        return (i, j, k)
        return None

    def is_abelian(self):
        return not self.consts

    def ad_matrix(self, i):
        """Matrix of ad x_i: column j holds the coordinates of [x_i, x_j]."""
        m = [[0] * self.n for _ in range(self.n)]
        for j in range(self.n):
            for k, c in self.bracket_basis(i, j).items():
                m[k][j] = c
        return m

    # -- Poisson structure
    def structure_matrix(self):
        if "B" not in self._cache:
            R = self.ring
            rows = [[Poly.zero(R)] * self.n for _ in range(self.n)]
            for (i, j), vec in self.consts.items():
                p = Poly.linear(R, [vec.get(k, 0) for k in range(self.n)])
                rows[i][j] = p
                rows[j][i] = -p
            self._cache["B"] = PolyMatrix(rows, R, skew=True)
        return self._cache["B"]

    def structure_matrix_at(self, xi):
        """Scalar matrix B(xi) with entries xi([x_i, x_j])."""
        m = [[0] * self.n for _ in range(self.n)]
        for (i, j), vec in self.consts.items():
            v = _norm(sum(Fraction(c) * xi[k] for k, c in vec.items()))
            m[i][j] = v
            m[j][i] = -v
        return m

    def _check(self, f):
        if f.ring is not self.ring:
            raise LieAlgebraError(f"polynomial over {f.ring}, expected {self.ring}")

    def poisson_bracket(self, f, g):
        self._check(f)
        self._check(g)
        if f.is_constant() or g.is_constant():
            return Poly.zero(self.ring)
        B = self.structure_matrix()
        df = [f.diff(i) for i in range(self.n)]
        dg = [g.diff(i) for i in range(self.n)]
        total = Poly.zero(self.ring)
        for (i, j) in self.consts:
            a = df[i] * dg[j] if df[i] and dg[j] else None
            b = df[j] * dg[i] if df[j] and dg[i] else None
            if a is None and b is None:
                continue
            w = (a if a is not None else Poly.zero(self.ring)) - (b if b is not None else 0)
            if w:
                total = total + B[i, j] * w
        return total

    def ad(self, i, f):
        """ad x_i (f) = {x_i, f}."""
        self._check(f)
        B = self.structure_matrix()
        total = Poly.zero(self.ring)
        for j in range(self.n):
            if B[i, j]:
                d = f.diff(j)
                if d:
                    total = total + B[i, j] * d
        return total

    def linear_form(self, vec):
        return Poly.linear(self.ring, to_dense(vec, self.n) if isinstance(vec, dict) else vec)

    # -- structure
    def center(self):
        rows = []
        for i in range(self.n):
            ad = self.ad_matrix(i)
            rows.extend(ad)
        return Subspace(self, kernel(rows, self.n))

    def whole(self):
        return Subspace(self, [{i: 1} for i in range(self.n)])

    def zero_subspace(self):
        return Subspace(self, [])

    def bracket_subspaces(self, a, b):
        vecs = [self.bracket(u, v) for u in a.basis for v in b.basis]
        return Subspace(self, vecs)

    def lower_central_series(self):
        series = [self.whole()]
        while True:
            nxt = self.bracket_subspaces(self.whole(), series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def derived_series(self):
        series = [self.whole()]
        while True:
            nxt = self.bracket_subspaces(series[-1], series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def is_nilpotent(self):
        return self.lower_central_series()[-1].dim == 0

    def is_solvable(self):
        return self.derived_series()[-1].dim == 0

    def is_unimodular(self):
        return all(sum(self.ad_matrix(i)[j][j] for j in range(self.n)) == 0
                   for i in range(self.n))

    def restrict(self, sub):
        """The subalgebra ``sub`` as a Lie algebra on its RREF basis.

        Returns ``(algebra, embedding)`` where ``embedding`` maps a Poly over
        the restricted algebra back into S(g).
        """
        if not sub.is_subalgebra():
            raise LieAlgebraError("restriction to a subspace that is not a subalgebra")
        vecs = sub.basis
        piv = sub.pivots
        names = []
        taken = set(self.names)
        for j, v in enumerate(vecs):
            if len(v) == 1 and v.get(piv[j]) == 1:
                names.append(self.names[piv[j]])
            else:
                k = j + 1
                nm = f"u{k}"
                while nm in taken:
                    k += len(vecs)
                    nm = f"u{k}"
                names.append(nm)
                taken.add(nm)
        consts = {}
        for a in range(len(vecs)):
            for b in range(a + 1, len(vecs)):
                w = self.bracket(vecs[a], vecs[b])
                coords = {j: w[p] for j, p in enumerate(piv) if w.get(p)}
                if coords:
                    consts[(a, b)] = coords
        sub_alg = LieAlgebra(names, consts, name=f"{self.name or 'g'}|sub", check=False)
        images = [self.linear_form(v) for v in vecs]

        def embed(f):
            return f.compose(images, self.ring)

        return sub_alg, embed


# ------------------------------------------------------------- subspaces


class Subspace:
    """Linear subspace of g, stored as its canonical RREF basis (sparse rows)."""

    __slots__ = ("algebra", "n", "basis", "pivots")

    def __init__(self, algebra, vectors):
        self.algebra = algebra
        self.n = algebra.n
        rows, piv = rref(vectors, self.n)
        self.basis = [dict(r) for r in rows]
        self.pivots = piv

    @classmethod
    def span_of(cls, algebra, polys_or_vectors):
        vecs = []
        for v in polys_or_vectors:
            if isinstance(v, Poly):
                if v.degree() > 1 or v.constant_value():
                    raise LieAlgebraError(f"not a linear form: {v}")
                vec = {}
                for e, c in v.terms.items():
                    vec[e.index(1)] = c
                vecs.append(vec)
            else:
                vecs.append(v)
        return cls(algebra, vecs)

    @classmethod
    def coordinate(cls, algebra, indices):
        return cls(algebra, [{i: 1} for i in indices])

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.n == other.n
                and self.basis == other.basis)

    def __hash__(self):
        return hash(tuple(tuple(sorted(r.items())) for r in self.basis))

    def __repr__(self):
        return "Subspace<" + ", ".join(str(f) for f in self.linear_forms()) + ">"

    def dense(self):
        return [to_dense(r, self.n) for r in self.basis]

    def linear_forms(self):
        return [self.algebra.linear_form(r) for r in self.basis]

    def _echelon(self):
        ech = Echelon(self.n)
        for r in self.basis:
            ech.add(r)
        return ech

    def contains(self, v):
        if isinstance(v, Poly):
            v = {e.index(1): c for e, c in v.terms.items()}
        return self._echelon().contains(v)

    def __le__(self, other):
        ech = other._echelon()
        return all(ech.contains(r) for r in self.basis)

    def __add__(self, other):
        return Subspace(self.algebra, self.basis + other.basis)

    def is_coordinate(self):
        return all(len(r) == 1 for r in self.basis)

    def support(self):
        """Indices of coordinates on which some basis vector is nonzero."""
        s = set()
        for r in self.basis:
            s.update(r)
        return sorted(s)

    def is_subalgebra(self):
        L = self.algebra
        ech = self._echelon()
        for a in range(len(self.basis)):
            for b in range(a + 1, len(self.basis)):
                if not ech.contains(L.bracket(self.basis[a], self.basis[b])):
                    return False
        return True

    def is_commutative(self):
        L = self.algebra
        for a in range(len(self.basis)):
            for b in range(a + 1, len(self.basis)):
                if L.bracket(self.basis[a], self.basis[b]):
                    return False
        return True

    def is_ideal(self):
        L = self.algebra
        ech = self._echelon()
        for i in range(self.n):
            for v in self.basis:
                if not ech.contains(L.bracket({i: 1}, v)):
                    return False
        return True

    def centralizer_modulo(self, lower):
        """{v in g : [g, v] in lower}"""
        L = self.algebra
        n = self.n
        ech = lower._echelon()
        # v -> ([x_i, v] mod lower)_i is linear; build its matrix column by column
        cols = []
        for j in range(n):
            images = []
            for i in range(n):
                r = ech.reduce_full(L.bracket_basis(i, j))
                images.append(r)
            cols.append(images)
        rows = []
        for i in range(n):
            for k in range(n):
                row = {j: cols[j][i].get(k, 0) for j in range(n) if cols[j][i].get(k)}
                if row:
                    rows.append(row)
        return Subspace(L, kernel(rows, n))


class IdealFlag:
    """A complete flag of ideals 0 = g_0 < g_1 < ... < g_n = g with [g, g_j] in g_{j-1}."""

    def __init__(self, algebra, chain):
        self.algebra = algebra
        self.chain = list(chain)

    def __len__(self):
        return len(self.chain)

    def __getitem__(self, j):
        return self.chain[j]

    def __repr__(self):
        return "IdealFlag(" + " < ".join(repr(s) for s in self.chain[1:]) + ")"

    def problems(self):
        L = self.algebra
        out = []
        if len(self.chain) != L.n + 1:
            out.append(f"flag has {len(self.chain)} steps, expected {L.n + 1}")
        for j, s in enumerate(self.chain):
            if s.dim != j:
                out.append(f"step {j} has dimension {s.dim}")
            if not s.is_ideal():
                out.append(f"step {j} is not an ideal")
            if j and not (L.bracket_subspaces(L.whole(), s) <= self.chain[j - 1]):
                out.append(f"[g, g_{j}] is not inside g_{j - 1}")
            if j and not (self.chain[j - 1] <= s):
                out.append(f"step {j - 1} is not contained in step {j}")
        return out

    def is_valid(self):
        return not self.problems()


def ideal_flag(L):
    """Deterministic flag of ideals with [g, g_j] in g_{j-1}.

    Each step adds the highest-index basis vector that is central modulo the
    previous step; if no basis vector qualifies, the first RREF basis vector
    of the admissible space that is new is used.
    """
    if not L.is_nilpotent():
        raise LieAlgebraError("ideal flag requested for a non-nilpotent algebra")
    chain = [L.zero_subspace()]
    for _ in range(L.n):
        cur = chain[-1]
        C = L.whole().centralizer_modulo(cur)
        choice = None
        for k in reversed(range(L.n)):
            e = {k: 1}
            if C.contains(e) and not cur.contains(e):
                choice = e
                break
        if choice is None:
            for v in C.basis:
                if not cur.contains(v):
                    choice = v
                    break
        chain.append(Subspace(L, cur.basis + [choice]))
    flag = IdealFlag(L, chain)
    assert flag.is_valid(), flag.problems()
    return flag


# ----------------------------------------------------------- symmetric forms


def invariant_form_space(L):
    """Basis of the space of symmetric invariant bilinear forms, as dense matrices."""
    n = L.n
    pairs = [(k, l) for k in range(n) for l in range(k, n)]
    col = {p: c for c, p in enumerate(pairs)}

    def var(a, b):
        return col[(a, b) if a <= b else (b, a)]

    rows = []
    for i in range(n):
        for j in range(n):
            bij = L.bracket_basis(i, j)
            for l in range(n):
                bil = L.bracket_basis(i, l)
                row: dict = {}
                # b([x_i, x_j], x_l) + b(x_j, [x_i, x_l]) = 0
                for k, c in bij.items():
                    v = var(k, l)
                    row[v] = row.get(v, 0) + c
                for k, c in bil.items():
                    v = var(j, k)
                    row[v] = row.get(v, 0) + c
                row = {a: b for a, b in row.items() if b}
                if row:
                    rows.append(row)
    sols = kernel(rows, len(pairs))
    mats = []
    for s in sols:
        m = [[0] * n for _ in range(n)]
        for c, v in s.items():
            k, l = pairs[c]
            m[k][l] = v
            m[l][k] = v
        mats.append(m)
    return mats


def is_invariant_form(L, b):
    n = L.n
    for i in range(n):
        for j in range(n):
            for l in range(n):
                s = 0
                for k, c in L.bracket_basis(i, j).items():
                    s += c * b[k][l]
                for k, c in L.bracket_basis(i, l).items():
                    s += c * b[j][k]
                if s:
                    return False
    return True


def _combine(mats, coeffs, n):
    return [[_norm(sum(Fraction(c) * m[a][b] for c, m in zip(coeffs, mats)))
             for b in range(n)] for a in range(n)]


def invariant_symmetric_form(L, seed=0):
    """A nondegenerate invariant symmetric form, or None if none exists."""
    n = L.n
    ident = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    if is_invariant_form(L, ident):
        return ident
    mats = invariant_form_space(L)
    if not mats:
        return None
    # small coefficients first, for a readable witness
    simple = [[int(j == k) for j in range(len(mats))] for k in range(len(mats))]
    simple.append([1] * len(mats))
    rng = random.Random(seed)
    simple.append([rng.randint(-30, 30) for _ in mats])
    for coeffs in simple:
        cand = _combine(mats, coeffs, n)
        if det_dense(cand):
            return cand
    # exact decision: the generic element sum t_j B_j is nondegenerate iff a
    # nondegenerate solution exists
    tags = Ring([f"_s{j}" for j in range(len(mats))])
    ts = tags.gens()
    generic = PolyMatrix([[sum((ts[j] * mats[j][a][b] for j in range(len(mats))
                                if mats[j][a][b]), Poly.zero(tags))
                           for b in range(n)] for a in range(n)], tags)
    if rank_over_fraction_field(generic) < n:
        return None
    # det of the generic element has degree <= n: a grid of side n+1 has a non-root
    for pt in product(range(n + 1), repeat=len(mats)):
        cand = _combine(mats, pt, n)
        if det_dense(cand):
            return cand
    return None  # unreachable


# -------------------------------------------------------------- builders


def lie_load(spec, check=True):
    """Build a LieAlgebra from a dict with "dim", "basis", "brackets"."""
    dim = spec.get("dim")
    basis = spec.get("basis")
    if basis is None:
        basis = [f"x{i + 1}" for i in range(dim)]
    if dim is None:
        dim = len(basis)
    if len(basis) != dim:
        raise LieAlgebraError(f"basis has {len(basis)} names but dim is {dim}")
    ring = Ring(basis)
    env = spec.get("params") or {}
    consts = {}
    for item in spec.get("brackets", []):
        if len(item) != 3:
            raise LieAlgebraError(f"bracket entry must be [i, j, rhs], got {item!r}")
        i, j, rhs = item
        if not (isinstance(i, int) and isinstance(j, int)):
            raise LieAlgebraError(f"bracket indices must be integers, got {item!r}")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise LieAlgebraError(f"bracket index out of range in {item!r}")
        if i >= j:
            raise LieAlgebraError(f"bracket indices must satisfy i < j, got {item!r}")
        p = rhs if isinstance(rhs, Poly) else poly_parse(str(rhs), ring, env)
        if p and (p.degree() != 1 or not p.is_homogeneous()):
            raise LieAlgebraError(f"bracket [{i}, {j}] is not linear homogeneous: {p}")
        vec = {e.index(1): c for e, c in p.terms.items()}
        if (i - 1, j - 1) in consts:
            raise LieAlgebraError(f"bracket [{i}, {j}] given twice")
        consts[(i - 1, j - 1)] = vec
    return LieAlgebra(basis, consts, name=spec.get("name"), aliases=spec.get("aliases", ()),
                      check=check)


def abelian(n, names=None):
    return LieAlgebra(names or [f"x{i + 1}" for i in range(n)], {}, name=f"abelian{n}")


def heisenberg():
    return LieAlgebra(["x", "y", "z"], {(0, 1): {2: 1}}, name="heisenberg")


def build_standard_filiform(n):
    if n < 3:
        raise LieAlgebraError("standard filiform algebra needs n >= 3")
    names = [f"x{i + 1}" for i in range(n)]
    consts = {(0, k): {k + 1: 1} for k in range(1, n - 1)}
    return LieAlgebra(names, consts, name=f"filiform{n}")


def build_triangular_nilradical(n):
    """Strictly lower triangular (n+1)x(n+1) matrices, basis E_ij (i > j) in lex order."""
    if n < 2:
        raise LieAlgebraError("triangular nilradical needs n >= 2")
    idx = [(i, j) for i in range(1, n + 2) for j in range(1, i)]
    pos = {p: k for k, p in enumerate(idx)}
    names = [f"e{i}_{j}" for i, j in idx]
    consts = {}
    for a, (i, j) in enumerate(idx):
        for b, (k, l) in enumerate(idx):
            if a >= b:
                continue
            # [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
            vec = {}
            if j == k:
                vec[pos[(i, l)]] = vec.get(pos[(i, l)], 0) + 1
            if l == i:
                vec[pos[(k, j)]] = vec.get(pos[(k, j)], 0) - 1
            vec = {t: c for t, c in vec.items() if c}
            if vec:
                consts[(a, b)] = vec
    return LieAlgebra(names, consts, name=f"borel_nilradical{n}")


def parse_dual_point(text, L):
    """Parse "x7*" (dual basis vector of x7) or comma-separated rationals."""
    text = text.strip()
    if text.endswith("*"):
        nm = text[:-1].strip()
        if nm not in L.ring.index:
            raise LieAlgebraError(f"unknown basis element {nm!r} in dual point")
        v = [0] * L.n
        v[L.ring.index[nm]] = 1
        return tuple(v)
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != L.n:
        raise LieAlgebraError(f"dual point needs {L.n} coordinates, got {len(parts)}")
    try:
        return tuple(as_scalar(Fraction(p)) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise LieAlgebraError(f"bad dual point coordinate: {exc}") from None


def dual_basis_vector(L, name):
    return parse_dual_point(f"{name}*", L)
