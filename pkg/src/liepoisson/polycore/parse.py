"""Recursive-descent parser for the polynomial expression grammar.

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := rational | var ('^' nat)? | '(' expr ')'
    rational := int ('/' posint)?

A leading unary minus is accepted at the head of an expression and right
after an opening parenthesis.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Poly, Ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class ParseError(ValueError):
    def __init__(self, message, position, text=""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.text = text


class UnknownVariable(ParseError):
    pass


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, ring, env):
        self.text = text
        self.ring = ring
        self.env = env or {}
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2], self.text)
        self.i += 1
        return tok

    def expr(self):
        neg = False
        if self.peek()[0] == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            num = int(val)
            if self.peek()[0] == "/":
                self.take()
                _, d, dpos = self.take("int")
                den = int(d)
                if den == 0:
                    raise ParseError("zero denominator", dpos, self.text)
                return Poly.const(self.ring, Fraction(num, den))
            return Poly.const(self.ring, num)
        if kind == "id":
            self.take()
            if val in self.env:
                base = self.env[val]
                if not isinstance(base, Poly):
                    base = Poly.const(self.ring, base)
            elif val in self.ring.index:
                base = Poly.var(self.ring, val)
            else:
                raise UnknownVariable(f"unknown variable {val!r}", pos, self.text)
            if self.peek()[0] == "^":
                self.take()
                _, e, _ = self.take("int")
                return base ** int(e)
            return base
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        got = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {got}", pos, self.text)


def poly_parse(text, ring, env=None):
    """Parse ``text`` into a :class:`Poly` over ``ring``.

    ``ring`` may be a :class:`Ring` or a list of variable names.  ``env`` maps
    extra identifiers (named polynomials or constants) to values substituted
    in place; this is how relation expressions refer to named generators.
    """
    if not isinstance(ring, Ring):
        ring = Ring(ring)
    p = _Parser(text, ring, env)
    out = p.expr()
    p.take("end")
    return out
