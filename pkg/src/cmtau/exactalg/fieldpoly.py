"""Dense univariate polynomials over an arbitrary exact coefficient field.

Coefficients may be Fraction, RatFunc, TowerElem or anything supporting
ring operators plus truthiness for zero tests.  Used for resolvent cubics,
expanded ray-class products and minimal-polynomial work over towers.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import IllFormed


class FieldPoly:
    """Little-endian dense polynomial over a caller-chosen field."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def from_roots(cls, roots, one=Fraction(1)):
        p = cls([one])
        for r in roots:
            p = p * cls([-r, one])
        return p

    @classmethod
    def x_minus(cls, r, one=Fraction(1)):
        return cls([-r, one])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def lead(self):
        if not self.coeffs:
            raise IllFormed("zero polynomial")
        return self.coeffs[-1]

    def __add__(self, other):
        if not isinstance(other, FieldPoly):
            other = FieldPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return FieldPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return FieldPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, FieldPoly):
            other = FieldPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return FieldPoly([self[k] - other[k] for k in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldPoly):
            return FieldPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return FieldPoly([])
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                t = a * b
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return FieldPoly([0 if c is None else c for c in out])

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        out = FieldPoly([Fraction(1)])
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, FieldPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc if acc is not None else Fraction(0)

    def shift(self, a):
        """p(x + a) by Horner rebuild."""
        out = FieldPoly([])
        for c in reversed(self.coeffs):
            out = out * FieldPoly([a, Fraction(1)]) + FieldPoly([c])
        return out

    def scale_arg(self, a):
        """p(a*x)."""
        out = []
        pw = Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * a
        return FieldPoly(out)

    def derivative(self):
        return FieldPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def __repr__(self):
        return f"FieldPoly({self.coeffs!r})"
