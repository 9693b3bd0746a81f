"""Tiny expression parser for transcribing displayed polynomials.

Grammar: rational literals (7, -3, 5/2), variable names, + - * / ^ ( ).
`/` by a nonconstant divisor or `^` with a negative exponent promotes the
result to a RatFunc; otherwise an MPoly comes back.  Implicit multiplication
is not supported; transcriptions stay close to their printed sources.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import IllFormed
from .poly import MPoly, RatFunc

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_']*|\*\*|[-+*/^()])")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise IllFormed(f"bad token at: {text[pos:pos+20]!r}")
            break
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse_expr(self):
        node = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_factor()
            if op == "*":
                node = node * rhs
            else:
                node = RatFunc(node) / RatFunc(rhs) if isinstance(rhs, MPoly) \
                    else node / rhs
        return node

    def parse_factor(self):
        if self.peek() == "-":
            self.take()
            return -self.parse_factor()
        if self.peek() == "+":
            self.take()
            return self.parse_factor()
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            e = self.take()
            if not e or not e.isdigit():
                raise IllFormed("exponent must be an integer literal")
            n = int(e)
            if neg:
                return RatFunc(base) ** (-n)
            return base ** n
        return base

    def parse_atom(self):
        tok = self.take()
        if tok is None:
            raise IllFormed("unexpected end of expression")
        if tok == "(":
            node = self.parse_expr()
            if self.take() != ")":
                raise IllFormed("missing closing parenthesis")
            return node
        if tok.isdigit():
            return MPoly.const(Fraction(int(tok)))
        if re.match(r"^[A-Za-z_]", tok):
            return MPoly.var(tok)
        raise IllFormed(f"unexpected token {tok!r}")


def parse_expr(text):
    """Parse into an MPoly, or RatFunc if division/negative powers occur."""
    p = _Parser(_tokenize(text))
    node = p.parse_expr()
    if p.peek() is not None:
        raise IllFormed(f"trailing junk near token {p.i}")
    return node


def mpoly(text):
    """Parse an expression that must reduce to a polynomial."""
    node = parse_expr(text)
    if isinstance(node, RatFunc):
        return node.as_mpoly()
    return node


def ratfunc(text):
    node = parse_expr(text)
    return node if isinstance(node, RatFunc) else RatFunc(node)
