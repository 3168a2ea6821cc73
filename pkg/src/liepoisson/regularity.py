"""Regular dual points, stabilizers, the Frobenius semi-radical and polarizations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .invariants import fundamental_semiinvariant, index_of
from .liealg import LieAlgebraError, Subspace
from .polycore.linalg import kernel


class SamplingBudgetExceeded(RuntimeError):
    pass


@dataclass
class RegularSample:
    xi: tuple
    rank_at_xi: int
    stabilizer: Subspace
    regular: bool


def stabilizer_at(L, xi):
    """g(xi) = kernel of the scalar matrix B(xi)."""
    m = L.structure_matrix_at(xi)
    stab = Subspace(L, kernel(m, L.n))
    rank = L.n - stab.dim
    return RegularSample(tuple(xi), rank, stab, rank == index_of(L).t)


def _draws(n, rng, lo=-50, hi=50):
    return tuple(rng.randint(lo, hi) for _ in range(n))


def sample_regular(L, seed=0, max_draws=1000, rng=None):
    """First regular point among seeded random integer points in [-50, 50]^n."""
    rng = rng or random.Random(seed)
    for _ in range(max_draws):
        s = stabilizer_at(L, _draws(L.n, rng))
        if s.regular:
            return s
    raise SamplingBudgetExceeded(f"no regular point in {max_draws} draws")


def regular_samples(L, count, seed=0):
    rng = random.Random(seed)
    return [sample_regular(L, rng=rng) for _ in range(count)]


@dataclass
class FrobeniusReport:
    F: Subspace
    is_commutative: bool
    is_ideal: bool
    samples_used: int
    saturated_for: int


def frobenius_semiradical(L, seed=0, window=25, max_samples=2000):
    """Span of stabilizers of random regular points, grown until it has not
    changed for ``window`` consecutive samples."""
    key = ("F", seed, window)
    if key in L._cache:
        return L._cache[key]
    rng = random.Random(seed)
    span = L.zero_subspace()
    quiet = 0
    used = 0
    while quiet < window:
        if used >= max_samples:
            raise SamplingBudgetExceeded("Frobenius semi-radical did not saturate")
        s = sample_regular(L, rng=rng)
        used += 1
        grown = span + s.stabilizer
        if grown.dim > span.dim:
            span = grown
            quiet = 0
            if span.dim == L.n:
                break
        else:
            quiet += 1
    rep = FrobeniusReport(span, span.is_commutative(), span.is_ideal(), used, quiet)
    L._cache[key] = rep
    return rep


def is_square_integrable(L):
    if L.is_abelian():
        raise LieAlgebraError("square integrability is defined for nonabelian algebras")
    return index_of(L).index == L.center().dim


def is_quasi_quadratic(L, seed=0):
    return frobenius_semiradical(L, seed).F.dim == L.n


def is_frobenius(L):
    return index_of(L).index == 0


@dataclass
class CPReport:
    dim: int
    c: int
    is_subalgebra: bool
    is_commutative: bool
    is_ideal: bool
    is_cp: bool
    is_cpi: bool
    bound_ok: bool


def verify_cp(L, h):
    """Check whether the subspace h is a commutative polarization (CP / CPI)."""
    c = index_of(L).c
    sub = h.is_subalgebra()
    comm = h.is_commutative()
    ideal = h.is_ideal()
    is_cp = sub and comm and h.dim == c
    # commutative subalgebras never exceed c(g)
    bound_ok = not (sub and comm) or h.dim <= c
    return CPReport(h.dim, c, sub, comm, ideal, is_cp, is_cp and ideal, bound_ok)


def coordinate_cps(L):
    """All coordinate subspaces of dimension c(g) spanned by commuting basis vectors."""
    c = index_of(L).c
    out = []
    for idx in combinations(range(L.n), c):
        if all(not L.bracket_basis(a, b) for a, b in combinations(idx, 2)):
            out.append(Subspace.coordinate(L, idx))
    return out


def find_coordinate_cp(L):
    cps = coordinate_cps(L)
    return cps[0] if cps else None


@dataclass
class Theorem22Report:
    c_g: int
    c_F: int
    deg_p: int
    difference: int
    inequality_holds: bool
    strict: bool
    F_dim: int
    cp_uniqueness_note: str | None


def theorem22_report(L, seed=0):
    """Compare c(g) - c(F(g)) with deg p_g."""
    fro = frobenius_semiradical(L, seed)
    F = fro.F
    c_g = index_of(L).c
    if F.dim == 0:
        c_F = 0
    else:
        H, _ = L.restrict(F)
        c_F = index_of(H).c
    deg_p = fundamental_semiinvariant(L).degree()
    diff = c_g - c_F
    note = None
    if deg_p == 0 and fro.is_commutative:
        note = "nonsingular with commutative F(g): F(g) is the unique CP"
    return Theorem22Report(c_g, c_F, deg_p, diff, diff <= deg_p, diff < deg_p, F.dim, note)
