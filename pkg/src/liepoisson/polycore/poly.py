"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` is a map from exponent tuples to coefficients over a fixed
:class:`Ring` (an ordered list of variable names).  Coefficients are Python
``int`` when integral and :class:`fractions.Fraction` otherwise; both hash and
compare identically, so the term map is canonical either way.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from numbers import Rational
import heapq

Scalar = Fraction


def as_scalar(c):
    """Coerce ``c`` to the canonical coefficient type (int or reduced Fraction)."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, Rational):
        return as_scalar(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return as_scalar(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class Ring:
    """An ordered tuple of variable names.  Rings are interned by name tuple."""

    _cache: dict = {}
    __slots__ = ("names", "index", "n", "_zero_exp")

    def __new__(cls, names):
        names = tuple(names)
        ring = cls._cache.get(names)
        if ring is None:
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate variable names in {names}")
            ring = object.__new__(cls)
            ring.names = names
            ring.index = {s: i for i, s in enumerate(names)}
            ring.n = len(names)
            ring._zero_exp = (0,) * len(names)
            cls._cache[names] = ring
        return ring

    def __getnewargs__(self):
        return (self.names,)

    def __reduce__(self):
        return (Ring, (self.names,))

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def __len__(self):
        return self.n

    def gens(self):
        return [Poly.var(self, i) for i in range(self.n)]

    def var(self, name_or_index):
        return Poly.var(self, name_or_index)

    def extend(self, extra):
        return Ring(self.names + tuple(extra))


# ---------------------------------------------------------------- orders
#
# An order is represented by a key function mapping an exponent tuple to a
# flat tuple of ints; larger keys are larger monomials.  Flat int tuples can
# be negated componentwise, which the heap-based division below relies on.


class MonomialOrder:
    __slots__ = ("name", "key")

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return f"MonomialOrder({self.name})"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __reduce__(self):
        if self.name == "degrevlex":
            return (_get_degrevlex, ())
        if self.name == "lex":
            return (_get_lex, ())
        return (block_order, (int(self.name.split(":")[1]),))


def _drl_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


def _lex_key(e):
    return e


DEGREVLEX = MonomialOrder("degrevlex", _drl_key)
LEX = MonomialOrder("lex", _lex_key)


def _get_degrevlex():
    return DEGREVLEX


def _get_lex():
    return LEX


_block_cache: dict = {}


def block_order(k):
    """Elimination order: the first ``k`` variables form a block that dominates
    the remaining ones; degrevlex inside each block."""
    order = _block_cache.get(k)
    if order is None:
        def key(e, k=k):
            a, b = e[:k], e[k:]
            return ((sum(a),) + tuple(-x for x in reversed(a))
                    + (sum(b),) + tuple(-x for x in reversed(b)))
        order = MonomialOrder(f"block:{k}", key)
        _block_cache[k] = order
    return order


# ------------------------------------------------------------------ Poly


class PolyError(ValueError):
    pass


class AmbientMismatch(PolyError):
    pass


class Poly:
    """Immutable sparse polynomial over a :class:`Ring`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None):
        # terms must already be canonical: no zero coefficients
        self.ring = ring
        self.terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors
    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def const(cls, ring, c):
        c = as_scalar(c)
        return cls(ring, {ring._zero_exp: c} if c else {})

    @classmethod
    def var(cls, ring, v, power=1):
        i = ring.index[v] if isinstance(v, str) else v
        if not 0 <= i < ring.n:
            raise PolyError(f"variable index {v} out of range for {ring}")
        e = [0] * ring.n
        e[i] = power
        return cls(ring, {tuple(e): 1})

    @classmethod
    def from_terms(cls, ring, terms):
        out = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != ring.n:
                raise PolyError(f"exponent {e} has wrong length for {ring}")
            c = as_scalar(c)
            if c:
                out[e] = _norm(out.get(e, 0) + c)
                if not out[e]:
                    del out[e]
        return cls(ring, out)

    @classmethod
    def linear(cls, ring, coeffs):
        """The linear form sum(coeffs[i] * x_i)."""
        out = {}
        for i, c in enumerate(coeffs):
            c = as_scalar(c)
            if c:
                e = [0] * ring.n
                e[i] = 1
                out[tuple(e)] = c
        return cls(ring, out)

    # -- basic queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and self.ring._zero_exp in t)

    def constant_value(self):
        return self.terms.get(self.ring._zero_exp, 0)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        return len(degs) == 1

    def variables(self):
        """Indices of the variables occurring in the polynomial."""
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return used

    def is_monomial(self):
        return len(self.terms) == 1

    def homogeneous_components(self):
        comps: dict = {}
        for e, c in self.terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: Poly(self.ring, t) for d, t in sorted(comps.items())}

    def leading(self, order=DEGREVLEX):
        """(exponent, coefficient) of the leading term."""
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order=DEGREVLEX):
        return self.leading(order)[0]

    def leading_coefficient(self, order=DEGREVLEX):
        return self.leading(order)[1]

    def sorted_terms(self, order=DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- equality / hashing
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise AmbientMismatch(f"{self.ring} vs {other.ring}")
            return other
        return Poly.const(self.ring, other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = _norm(v + c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = -c
            else:
                v = _norm(v - c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.ring, out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return Poly(self.ring, {})
        if c == 1:
            return self
        if type(c) is int:
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()})
        return Poly(self.ring, {e: _norm(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if other.ring is not self.ring:
            raise AmbientMismatch(f"{self.ring} vs {other.ring}")
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly(self.ring, {})
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                v = get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        clean = {}
        for e, c in out.items():
            if c:
                clean[e] = _norm(c) if type(c) is Fraction else c
        return Poly(self.ring, clean)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = Poly.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, Poly):
            return self.divexact(c)
        c = as_scalar(c)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(Fraction(1) / c)

    def mul_monomial(self, e, c=1):
        return Poly(self.ring, {tuple([x + y for x, y in zip(k, e)]): _norm(v * c)
                                for k, v in self.terms.items()})

    # -- calculus and evaluation
    def diff(self, i):
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                out[tuple(f)] = c * k
        return Poly(self.ring, out)

    def gradient(self):
        return [self.diff(i) for i in range(self.ring.n)]

    def evaluate(self, point):
        """Value at a point (sequence of exact rationals)."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return as_scalar(total)

    def compose(self, images, ring=None):
        """Substitute ``x_i -> images[i]`` (Polys over ``ring``)."""
        if ring is None:
            ring = images[0].ring if images else self.ring
        powers: list = [dict() for _ in range(self.ring.n)]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        acc: dict = {}
        for e, c in self.terms.items():
            term = Poly.const(ring, c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            for te, tc in term.terms.items():
                v = _norm(acc.get(te, 0) + tc)
                if v:
                    acc[te] = v
                else:
                    acc.pop(te, None)
        return Poly(ring, acc)

    def embed(self, ring, index_map=None):
        """Rename into a larger ring; ``index_map[i]`` is the target index of x_i."""
        if index_map is None:
            index_map = [ring.index[s] for s in self.ring.names]
        out = {}
        zero = [0] * ring.n
        for e, c in self.terms.items():
            f = list(zero)
            for i, k in enumerate(e):
                if k:
                    f[index_map[i]] = k
            out[tuple(f)] = c
        return Poly(ring, out)

    def translate(self, shift):
        """Return the coefficient list [f_0, ..., f_d] of f(x + shift * t) in t."""
        d = self.degree()
        coeffs: list = [dict() for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            # expand prod_i (x_i + a_i t)^{e_i}
            partial = {((0,) * self.ring.n, 0): c}
            for i, k in enumerate(e):
                if not k:
                    continue
                a = shift[i]
                nxt: dict = {}
                for (mon, tdeg), v in partial.items():
                    for j in range(k + 1):
                        if j and not a:
                            break
                        coef = v * comb(k, j) * (a ** j if j else 1)
                        m2 = list(mon)
                        m2[i] += k - j
                        key = (tuple(m2), tdeg + j)
                        nxt[key] = nxt.get(key, 0) + coef
                partial = nxt
            for (mon, tdeg), v in partial.items():
                slot = coeffs[tdeg]
                slot[mon] = slot.get(mon, 0) + v
        return [Poly.from_terms(self.ring, t) for t in coeffs]

    # -- division
    def divexact(self, b):
        """Exact quotient self / b; raises ArithmeticError if b does not divide."""
        q, r = self.divmod(b)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divmod(self, b, order=DEGREVLEX):
        """Multivariate division by a single polynomial (quotient, remainder)."""
        b = self._coerce(b)
        if not b.terms:
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        if len(b.terms) == 1:
            (eb, cb), = b.terms.items()
            q, r = {}, {}
            inv = Fraction(1) / cb if type(cb) is not int or abs(cb) != 1 else cb
            for e, c in self.terms.items():
                if all(x >= y for x, y in zip(e, eb)):
                    q[tuple([x - y for x, y in zip(e, eb)])] = _norm(c * inv)
                else:
                    r[e] = c
            return Poly(ring, q), Poly(ring, r)
        key = order.key
        eb, cb = b.leading(order)
        rest = [(e, c) for e, c in b.terms.items() if e != eb]
        work = dict(self.terms)
        heap = [(tuple(-x for x in key(e)), e) for e in work]
        heapq.heapify(heap)
        q, r = {}, {}
        while heap:
            _, e = heapq.heappop(heap)
            c = work.pop(e, None)
            if c is None:
                continue
            if all(x >= y for x, y in zip(e, eb)):
                m = tuple([x - y for x, y in zip(e, eb)])
                if type(c) is int and type(cb) is int and not c % cb:
                    f = c // cb
                else:
                    f = _norm(Fraction(c) / cb)
                q[m] = f
                for e2, c2 in rest:
                    t = tuple([x + y for x, y in zip(m, e2)])
                    v = work.get(t)
                    if v is None:
                        work[t] = -f * c2
                        heapq.heappush(heap, (tuple(-x for x in key(t)), t))
                    else:
                        v = _norm(v - f * c2)
                        if v:
                            work[t] = v
                        else:
                            del work[t]
            else:
                r[e] = c
        return Poly(ring, q), Poly(ring, r)

    # -- coefficient helpers
    def coefficient_in(self, i, k):
        """Coefficient of x_i^k, viewing self as a polynomial in x_i."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                f = list(e)
                f[i] = 0
                out[tuple(f)] = c
        return Poly(self.ring, out)

    def integer_content(self):
        """(content, primitive integer polynomial) with self = content * primitive."""
        if not self.terms:
            return Fraction(0), self
        den = 1
        for c in self.terms.values():
            if type(c) is not int:
                den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, v)
        prim = {e: int(c * den) // g for e, c in self.terms.items()}
        return as_scalar(Fraction(g, den)), Poly(self.ring, prim)

    def normalized(self):
        """Integer-primitive associate with positive degrevlex leading coefficient."""
        if not self.terms:
            return self
        _, p = self.integer_content()
        if p.leading_coefficient() < 0:
            p = -p
        return p

    def monic(self, order=DEGREVLEX):
        if not self.terms:
            return self
        return self.scale(Fraction(1) / Fraction(self.leading_coefficient(order)))

    # -- printing
    def __str__(self):
        return poly_print(self)

    def __repr__(self):
        return f"Poly({poly_print(self)!r})"


def poly_print(f, order=DEGREVLEX):
    """Render ``f`` in the polynomial expression grammar (parse-compatible)."""
    if not f.terms:
        return "0"
    names = f.ring.names
    parts = []
    for e, c in f.sorted_terms(order):
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}"
            for i, k in enumerate(e) if k
        )
        neg = c < 0
        a = -c if neg else c
        a = Fraction(a)
        num = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        if not mono:
            body = num
        elif a == 1:
            body = mono
        else:
            body = f"{num}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
