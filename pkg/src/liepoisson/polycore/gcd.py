"""Multivariate polynomial gcd by recursive primitive remainder sequences.

The main variable is always the largest-index variable occurring in either
argument; coefficients with respect to it are handled recursively.  Results
are normalized: integer-primitive with positive degrevlex leading coefficient.
"""

from __future__ import annotations

from .poly import Poly


def _mono_content(f):
    # largest monomial dividing every term of f
    exps = iter(f.terms)
    m = list(next(exps))
    for e in exps:
        for i, x in enumerate(e):
            if x < m[i]:
                m[i] = x
    return tuple(m)


def _monomial_gcd(mono, f):
    e0 = next(iter(mono.terms))
    m = _mono_content(f)
    return Poly(f.ring, {tuple(min(a, b) for a, b in zip(e0, m)): 1})


def coefficients_in(f, v):
    """Map degree -> coefficient polynomial, regarding f as univariate in x_v."""
    out: dict = {}
    for e, c in f.terms.items():
        k = e[v]
        f2 = list(e)
        f2[v] = 0
        out.setdefault(k, {})[tuple(f2)] = c
    return {k: Poly(f.ring, t) for k, t in out.items()}


def content_in(f, v):
    coeffs = coefficients_in(f, v)
    g = None
    for k in sorted(coeffs, key=lambda k: len(coeffs[k])):
        c = coeffs[k]
        g = c.normalized() if g is None else gcd_multi(g, c)
        if g.is_constant():
            return Poly.const(f.ring, 1)
    return g


def _lead_in(f, v):
    d = f.degree_in(v)
    return d, f.coefficient_in(v, d)


def _prem(a, b, v):
    db, lb = _lead_in(b, v)
    r = a
    while r:
        dr, lr = _lead_in(r, v)
        if dr < db:
            break
        shift = [0] * a.ring.n
        shift[v] = dr - db
        r = r * lb - (lr * b).mul_monomial(tuple(shift))
    return r


def _primitive_in(f, v):
    c = content_in(f, v)
    if c.is_constant():
        return f.normalized()
    return f.divexact(c).normalized()


def gcd_multi(a, b):
    """Greatest common divisor of two polynomials over the same ring."""
    if a.ring is not b.ring:
        raise ValueError("gcd of polynomials over different rings")
    if not a:
        return b.normalized()
    if not b:
        return a.normalized()
    ring = a.ring
    if a.is_constant() or b.is_constant():
        return Poly.const(ring, 1)
    if a.is_monomial():
        return _monomial_gcd(a, b)
    if b.is_monomial():
        return _monomial_gcd(b, a)
    if a == b:
        return a.normalized()
    va, vb = a.variables(), b.variables()
    v = max(va | vb)
    if v not in va:
        return gcd_multi(a, content_in(b, v))
    if v not in vb:
        return gcd_multi(content_in(a, v), b)
    ca, cb = content_in(a, v), content_in(b, v)
    g_cont = gcd_multi(ca, cb)
    pa = a if ca.is_constant() else a.divexact(ca)
    pb = b if cb.is_constant() else b.divexact(cb)
    pa, pb = pa.normalized(), pb.normalized()
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, v)
        if not r:
            g = pb
            break
        if r.degree_in(v) == 0:
            g = Poly.const(ring, 1)
            break
        pa, pb = pb, _primitive_in(r, v)
    return (g_cont * g).normalized()


def gcd_list(polys):
    g = None
    for f in sorted(polys, key=len):
        if g is None:
            g = f.normalized()
        else:
            g = gcd_multi(g, f)
        if g and g.is_constant():
            break
    return g if g is not None else None
