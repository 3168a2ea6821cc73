"""sympy oracles and hypothesis strategies shared by the tests."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from liepoisson import Poly, Ring


def syms(ring):
    return sympy.symbols(list(ring.names))


def to_sympy(f):
    xs = syms(f.ring)
    out = sympy.Integer(0)
    for e, c in f.terms.items():
        term = sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
        for x, k in zip(xs, e):
            term *= x ** k
        out += term
    return sympy.expand(out)


def from_sympy(expr, ring):
    xs = syms(ring)
    p = sympy.Poly(sympy.expand(expr), *xs)
    terms = {}
    for mon, c in p.terms():
        c = sympy.Rational(c)
        terms[tuple(mon)] = Fraction(int(c.p), int(c.q))
    return Poly.from_terms(ring, terms)


def sympy_matrix(m):
    return sympy.Matrix([[to_sympy(m[i, j]) for j in range(m.cols)] for i in range(m.rows)])


coeffs = st.one_of(st.integers(-6, 6), st.fractions(min_value=-4, max_value=4, max_denominator=5))


@st.composite
def polys(draw, ring, max_terms=5, max_deg=3):
    n = ring.n
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        # total degree first, so that wide rings still get nonconstant terms
        d = draw(st.integers(0, max_deg))
        e = [0] * n
        for i in draw(st.lists(st.integers(0, n - 1), min_size=d, max_size=d)):
            e[i] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + draw(coeffs)
    return Poly.from_terms(ring, terms)


RING3 = Ring(["x", "y", "z"])
