"""Parameterized curve families, Weierstrass invariants and the group law.

The six families (Legendre, Deuring, and the Tate normal forms for points
of order 4, 5, 9, 12) are built with RatFunc coefficients in their named
parameter.  Points are generic: coordinates may be Fraction, RatFunc or
TowerElem; one chord-tangent implementation covers all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IllFormed, NotOnCurve, SingularFamily
from .exactalg import MPoly, RatFunc, mpoly, ratfunc


@dataclass(frozen=True)
class WInvariants:
    b2: object
    b4: object
    b6: object
    b8: object
    c4: object
    c6: object
    g2: object
    g3: object
    disc: object
    j: object


class CurveModel:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    def __init__(self, a1, a2, a3, a4, a6, family="CUSTOM", parameter=None):
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1, a2, a3, a4, a6
        self.family = family
        self.parameter = parameter

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def invariants(self, check_singular=True):
        a1, a2, a3, a4, a6 = self.coefficients()
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        g2 = c4 * Fraction(1, 12)
        g3 = c6 * Fraction(1, 216)
        disc = g2 ** 3 - 27 * g3 ** 2
        if check_singular and not disc:
            raise SingularFamily("discriminant vanishes identically")
        j = 1728 * g2 ** 3 / disc
        return WInvariants(b2, b4, b6, b8, c4, c6, g2, g3, disc, j)

    def rhs(self, x):
        return x ** 3 + self.a2 * x * x + self.a4 * x + self.a6

    def on_curve(self, pt):
        if pt.infinity:
            return True
        x, y = pt.x, pt.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        return not (lhs - self.rhs(x))

    def point(self, x, y, check=True):
        pt = Point(x, y)
        if check and not self.on_curve(pt):
            raise NotOnCurve(f"({x!r}, {y!r}) not on {self.family}")
        return pt

    def neg(self, pt):
        if pt.infinity:
            return pt
        return Point(pt.x, -pt.y - self.a1 * pt.x - self.a3)

    def add(self, P, Q):
        """Chord-tangent addition; handles doubling and inverse pairs."""
        if not (self.on_curve(P) and self.on_curve(Q)):
            raise NotOnCurve("add() requires points on the curve")
        if P.infinity:
            return Q
        if Q.infinity:
            return P
        a1, a2, a3, a4, a6 = self.coefficients()
        x1, y1 = P.x, P.y
        x2, y2 = Q.x, Q.y
        if not (x1 - x2):
            if not (y1 + y2 + a1 * x2 + a3):
                return Point.at_infinity()
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) \
                / (2 * y1 + a1 * x1 + a3)
            nu = (-x1 ** 3 + a4 * x1 + 2 * a6 - a3 * y1) \
                / (2 * y1 + a1 * x1 + a3)
        else:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return Point(x3, y3)

    def scalar_mul(self, n, P):
        n = int(n)
        if n < 0:
            return self.scalar_mul(-n, self.neg(P))
        R = Point.at_infinity()
        Q = P
        while n:
            if n & 1:
                R = self.add(R, Q)
            n >>= 1
            if n:
                Q = self.add(Q, Q)
        return R

    def doubling_x(self):
        """X(2P) as (numerator, denominator) polynomials in X."""
        inv = self.invariants(check_singular=False)
        X = _sym("X")
        num = X ** 4 - inv.b4 * X ** 2 - 2 * inv.b6 * X - inv.b8
        den = 4 * X ** 3 + inv.b2 * X ** 2 + 2 * inv.b4 * X + inv.b6
        return num, den

    def specialize(self, value):
        """Substitute a number for the family parameter."""
        if self.parameter is None:
            raise IllFormed("curve has no free parameter")
        out = []
        for a in self.coefficients():
            if isinstance(a, RatFunc):
                out.append(a.eval_field({self.parameter: Fraction(value)}))
            else:
                out.append(Fraction(a))
        return CurveModel(*out, family=self.family, parameter=None)

    def __repr__(self):
        return f"CurveModel({self.family}, a=({self.a1!r},{self.a2!r},{self.a3!r},{self.a4!r},{self.a6!r}))"


def _sym(name):
    return RatFunc(MPoly.var(name))


class Point:
    __slots__ = ("x", "y", "infinity")

    def __init__(self, x=None, y=None):
        self.infinity = x is None and y is None
        self.x = x
        self.y = y

    @classmethod
    def at_infinity(cls):
        return cls()

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.infinity or other.infinity:
            return self.infinity == other.infinity
        return not (self.x - other.x) and not (self.y - other.y)

    def __repr__(self):
        return "O" if self.infinity else f"({self.x!r}, {self.y!r})"


# -- the six families -------------------------------------------------------------

def legendre_curve():
    """Y^2 = X(X-1)(X-a), two-torsion family."""
    a = _sym("a")
    zero = RatFunc.const(0)
    return CurveModel(zero, -(a + 1), zero, a, zero, family="E2", parameter="a")


def deuring_curve():
    """Y^2 + a XY + Y = X^3, three-torsion family (parameter printed as alpha)."""
    al = _sym("alpha")
    zero = RatFunc.const(0)
    return CurveModel(al, zero, RatFunc.const(1), zero, zero,
                      family="E3", parameter="alpha")


def tate4_curve():
    """Y^2 + XY + bY = X^3 + bX^2, (0,0) of order 4."""
    b = _sym("b")
    zero = RatFunc.const(0)
    return CurveModel(RatFunc.const(1), b, b, zero, zero, family="E4", parameter="b")


def tate5_curve():
    """Y^2 + (1+b)XY + bY = X^3 + bX^2, (0,0) of order 5."""
    b = _sym("b")
    zero = RatFunc.const(0)
    return CurveModel(1 + b, b, b, zero, zero, family="E5", parameter="b")


def tate9_curve():
    """(0,0) of order 9; coefficients polynomial in t."""
    t = _sym("t")
    a1 = 1 + t ** 2 - t ** 3
    b = (1 - t) * (1 - t + t ** 2) * t ** 2
    zero = RatFunc.const(0)
    return CurveModel(a1, b, b, zero, zero, family="E9", parameter="t")


def tate12_curve():
    """(0,0) of order 12; coefficients rational in t."""
    t = _sym("t")
    a1 = (3 * t ** 4 + 4 * t ** 3 - 2 * t ** 2 + 4 * t - 1) / (t - 1) ** 3
    a2 = -(t * (t + 1) * (t ** 2 + 1) * (3 * t ** 2 + 1)) / (t - 1) ** 4
    zero = RatFunc.const(0)
    return CurveModel(a1, a2, a2, zero, zero, family="E12", parameter="t")


FAMILIES = {
    "E2": legendre_curve,
    "E3": deuring_curve,
    "E4": tate4_curve,
    "E5": tate5_curve,
    "E9": tate9_curve,
    "E12": tate12_curve,
}


def family(tag):
    if tag not in FAMILIES:
        raise IllFormed(f"unknown family {tag!r}")
    return FAMILIES[tag]()


# -- division polynomials -----------------------------------------------------------

@dataclass
class DivisionData:
    n: int
    coeffs: list      # little-endian, coefficients in the curve field
    psi: object       # MPoly in (X, parameter) when coefficients are polynomial

    def as_mpoly(self):
        if self.psi is None:
            raise IllFormed("division polynomial has non-polynomial coefficients")
        return self.psi


def division_poly(curve, n):
    """psi_2^2 (n=2, the doubling denominator) or psi_3 (n=3)."""
    if n not in (2, 3):
        raise IllFormed("only n in {2, 3} supported")
    inv = curve.invariants(check_singular=False)
    if n == 2:
        coeffs = [inv.b6, 2 * inv.b4, inv.b2, RatFunc.const(4)]
    else:
        coeffs = [inv.b8, 3 * inv.b6, 3 * inv.b4, inv.b2, RatFunc.const(3)]
    coeffs = [c if isinstance(c, RatFunc) else RatFunc.const(c) for c in coeffs]
    psi = None
    if all(c.is_polynomial() for c in coeffs):
        X = MPoly.var("X")
        acc = MPoly.zero(("X",))
        for k, c in enumerate(coeffs):
            acc = acc + c.as_mpoly() * X ** k
        psi = acc
    return DivisionData(n, coeffs, psi)


# -- order-condition polynomials -------------------------------------------------------

def order_condition_poly(curve, tag):
    """Torsion-order conditions on X(P) used by the verification suite."""
    from .exactalg import exact_divide

    if tag == "E4_double_to_Q":
        if curve.family != "E4":
            raise IllFormed("tag requires the order-4 family")
        num, den = curve.doubling_x()
        b = _sym("b")
        cond = num + 2 * b * den          # X(2P) = -2b
        return cond.as_mpoly()
    if tag == "E5_order3":
        if curve.family != "E5":
            raise IllFormed("tag requires the order-5 family")
        num, den = curve.doubling_x()
        X = _sym("X")
        cond = X * den - num              # X(2P) = X(P)
        return cond.as_mpoly()
    if tag == "E3_order6":
        if curve.family != "E3":
            raise IllFormed("tag requires the Deuring family")
        num, _ = curve.doubling_x()
        q = exact_divide(num.as_mpoly(), MPoly.var("X"))
        return q.subs_poly({"X": MPoly.var("x")})
    if tag == "E3_triple_pm00":
        if curve.family != "E3":
            raise IllFormed("tag requires the Deuring family")
        return mpoly("x^3 - (3 + alpha)*x^2 + alpha*x + 1")
    raise IllFormed(f"unknown order-condition tag {tag!r}")


# -- family j-invariants ----------------------------------------------------------------

def j_from_parameter(tag):
    """The family's j-invariant as a RatFunc in its parameter."""
    return family(tag).invariants().j


def deuring_j(expr):
    """j of the Deuring model evaluated at a RatFunc argument."""
    al = j_from_parameter("E3")
    return al.subs({"alpha": expr})
