from fractions import Fraction

import pytest
import sympy

from liepoisson import Poly, Ring, poly_parse, poly_print
from liepoisson.polycore import DEGREVLEX, LEX, AmbientMismatch, ParseError, UnknownVariable, block_order

from _sym import to_sympy, from_sympy, syms

R7 = Ring([f"x{i}" for i in range(1, 8)])
R = Ring(["x", "y", "z"])


def test_parse_casimir_of_101():
    f = poly_parse("x4^2 - 2*x3*x5 + 2*x2*x6 + 2*x1*x7", R7)
    x = sympy.symbols("x1:8")
    assert to_sympy(f) == x[3] ** 2 - 2 * x[2] * x[4] + 2 * x[1] * x[5] + 2 * x[0] * x[6]
    assert len(f) == 4


def test_parse_zero_has_no_terms():
    f = poly_parse("0", R)
    assert f.terms == {}
    assert not f


def test_parse_cancels_to_canonical_form():
    assert poly_parse("(x6 - x6) + 3/3*x7", R7) == poly_parse("x7", R7)


def test_parse_accepts_list_of_names():
    f = poly_parse("a*b - 1/2", ["a", "b"])
    assert f.ring.names == ("a", "b")
    assert f.evaluate((1, 1)) == Fraction(1, 2)


def test_unary_minus_positions():
    assert poly_parse("-x + y", R) == poly_parse("y - x", R)
    assert poly_parse("(-x)*y", R) == poly_parse("-x*y", R)


@pytest.mark.parametrize("text", ["x +", "x ** 2", "2x)", "(x", "x^y", "x $ y", "x/y", "1/0", "x^-1"])
def test_syntax_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        poly_parse(text, R)
    assert info.value.position >= 0
    assert "position" in str(info.value)


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as info:
        poly_parse("x + w", R)
    assert info.value.position == 4


def test_power_only_after_identifier():
    with pytest.raises(ParseError):
        poly_parse("(x + y)^2", R)
    assert poly_parse("x^3", R) == Poly.var(R, "x", 3)


def test_env_substitution():
    f = poly_parse("x*y", R)
    g = poly_parse("f^2 - x^2*y^2 + f", R, {"f": f})
    assert g == f


def test_print_round_trip_examples():
    for s in ["0", "x", "-x", "x^2*y - 1/3*z + 7", "-2*x*y*z^4 + y"]:
        f = poly_parse(s, R)
        assert poly_parse(poly_print(f), R) == f


def test_print_is_degrevlex_sorted():
    f = poly_parse("z + x^2 + y^3 + x*y*z", R)
    assert str(f) == "y^3 + x*y*z + x^2 + z"


def test_arithmetic_matches_sympy():
    f = poly_parse("x^2 - 3*y*z + 1/2", R)
    g = poly_parse("x*y + z - 2", R)
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))
    assert to_sympy(f ** 3) == sympy.expand(to_sympy(f) ** 3)
    assert to_sympy(f - g) == sympy.expand(to_sympy(f) - to_sympy(g))
    assert f * 0 == Poly.zero(R)
    assert 2 - f == poly_parse("3/2 - x^2 + 3*y*z", R)


def test_ambient_mismatch():
    S = Ring(["x", "y"])
    with pytest.raises(AmbientMismatch):
        poly_parse("x", R) + poly_parse("x", S)


def test_rings_are_interned():
    assert Ring(["x", "y", "z"]) is R


def test_degrevlex_and_lex_leading_terms_match_sympy():
    f = poly_parse("x*z^2 + y^3 + x^2*y + z^3", R)
    x, y, z = syms(R)
    sp = sympy.Poly(to_sympy(f), x, y, z)
    lm_grevlex = sp.monoms(order="grevlex")[0]
    lm_lex = sp.monoms(order="lex")[0]
    assert f.leading_monomial(DEGREVLEX) == lm_grevlex
    assert f.leading_monomial(LEX) == lm_lex


def test_block_order_eliminates_first_block():
    f = poly_parse("y^5 + x", R)
    assert f.leading_monomial(block_order(1)) == (1, 0, 0)
    assert f.leading_monomial(DEGREVLEX) == (0, 5, 0)


def test_divmod_and_divexact():
    a = poly_parse("x^3 - y^3", R)
    b = poly_parse("x - y", R)
    assert a.divexact(b) == poly_parse("x^2 + x*y + y^2", R)
    q, r = poly_parse("x^2 + y", R).divmod(poly_parse("x", R))
    assert q == poly_parse("x", R) and r == poly_parse("y", R)
    with pytest.raises(ArithmeticError):
        poly_parse("x^2 + y", R).divexact(poly_parse("x", R))
    with pytest.raises(ZeroDivisionError):
        a.divmod(Poly.zero(R))


def test_translate_matches_substitution():
    f = poly_parse("x^2*y - 2*x*z + y^3", R)
    xi = (1, -2, Fraction(1, 3))
    t = sympy.Symbol("t")
    x, y, z = syms(R)
    shifted = sympy.expand(to_sympy(f).subs({x: x + xi[0] * t, y: y + xi[1] * t, z: z + sympy.Rational(1, 3) * t},
                                            simultaneous=True))
    coeffs = f.translate(xi)
    assert len(coeffs) == f.degree() + 1
    for j, c in enumerate(coeffs):
        assert to_sympy(c) == sympy.expand(shifted.coeff(t, j))


def test_diff_and_evaluate():
    f = poly_parse("x^2*y - z", R)
    assert f.diff(0) == poly_parse("2*x*y", R)
    assert f.evaluate((2, 3, 5)) == 7
    assert f.evaluate((Fraction(1, 2), 4, 0)) == 1


def test_normalized_is_primitive_with_positive_lead():
    f = poly_parse("-3/2*x^2 + 6*y", R)
    assert f.normalized() == poly_parse("x^2 - 4*y", R)
    assert Poly.zero(R).normalized() == Poly.zero(R)


def test_from_sympy_round_trip():
    f = poly_parse("x^2 - 3/4*y*z + 2", R)
    assert from_sympy(to_sympy(f), R) == f


def test_homogeneity_and_components():
    f = poly_parse("x^2 + y*z + x + 1", R)
    assert not f.is_homogeneous()
    comps = f.homogeneous_components()
    assert sorted(comps) == [0, 1, 2]
    assert comps[2].is_homogeneous()
    assert sum(comps.values(), Poly.zero(R)) == f
