"""Section S2: the two-torsion (Legendre) family and its cubic."""

from fractions import Fraction

from . import check, register
from .util import combine, ctx, eq, factored, rf, tau_of, zero
from ..exactalg import discriminant, mpoly, ratfunc
from ..tauinv import ray_class_poly


def _taus():
    return (tau_of("E2", rf("0")), tau_of("E2", rf("1")), tau_of("E2", rf("a")))


@check("S2.invariants", "S2", "POLY_IDENTITY",
       "Legendre family: g2, g3, discriminant, j, and j-1728 as the square "
       "of R(a) = 8(a+1)(a-2)(2a-1)/(a(a-1))")
def _invariants():
    _, inv, _ = ctx("E2")
    R = rf("8*(a + 1)*(a - 2)*(2*a - 1)/(a*(a - 1))")
    return combine(
        eq(inv.g2, rf("4*(a^2 - a + 1)/3"), "g2"),
        eq(inv.g3, rf("4*(a + 1)*(a - 2)*(2*a - 1)/27"), "g3"),
        eq(16 * inv.disc, rf("16*a^2*(a - 1)^2"), "Delta"),
        eq(inv.j, rf("2^8*(a^2 - a + 1)^3/(a^2*(a - 1)^2)"), "j"),
        eq(inv.j - 1728,
           rf("64*(a + 1)^2*(a - 2)^2*(2*a - 1)^2/(a^2*(a - 1)^2)"), "j-1728"),
        eq(inv.j - 1728, R * R, "j-1728 = R(a)^2"),
    )


@check("S2.tau-values", "S2", "POLY_IDENTITY",
       "invariants of the three two-torsion abscissas 0, 1, a")
def _tau_values():
    t0, t1, t2 = _taus()
    den = "/(a^2*(a - 1)^2)"
    return combine(
        eq(t0, rf("128*(a^2 - a + 1)*(a + 1)^2*(a - 2)*(2*a - 1)" + den), "tau0"),
        eq(t1, rf("128*(a^2 - a + 1)*(a + 1)*(a - 2)^2*(2*a - 1)" + den), "tau1"),
        eq(t2, rf("-128*(a^2 - a + 1)*(a + 1)*(a - 2)*(2*a - 1)^2" + den), "tau2"),
    )


@check("S2.F-cubic", "S2", "POLY_IDENTITY",
       "the three invariants are the roots of "
       "X^3 - 3j(j-1728)X + 2j(j-1728)^2, whose discriminant is "
       "2^8 3^6 j^2 (j-1728)^3")
def _cubic():
    _, inv, _ = ctx("E2")
    j = inv.j
    F = ray_class_poly(_taus())
    X, jv = mpoly("X"), mpoly("j")
    Fj = X ** 3 - 3 * jv * (jv - 1728) * X + 2 * jv * (jv - 1728) ** 2
    dF = discriminant(Fj, "X")
    return combine(
        eq(F[2], ratfunc("0"), "X^2 coefficient"),
        eq(F[1], -3 * j * (j - 1728), "X coefficient"),
        eq(F[0], 2 * j * (j - 1728) ** 2, "constant"),
        eq(dF, mpoly("2^8*3^6*j^2*(j - 1728)^3"), "disc(F)"),
    )


@check("S2.eq2.1", "S2", "POLY_IDENTITY", "the three invariants sum to zero")
def _eq21():
    t0, t1, t2 = _taus()
    return zero(t0 + t1 + t2, "tau0+tau1+tau2")


@check("S2.eq2.2", "S2", "POLY_IDENTITY",
       "sum of reciprocal invariants equals 3/(2(j-1728))")
def _eq22():
    _, inv, _ = ctx("E2")
    t0, t1, t2 = _taus()
    return eq(1 / t0 + 1 / t1 + 1 / t2, 3 / (2 * (inv.j - 1728)), "reciprocal sum")


@check("S2.a-ratio", "S2", "POLY_IDENTITY",
       "(tau2-tau0)/(tau1-tau0) recovers the Legendre parameter")
def _a_ratio():
    t0, t1, t2 = _taus()
    return eq((t2 - t0) / (t1 - t0), rf("a"), "parameter ratio")


_BRACKET0 = """
2*x^4*y^3 + 2*x^3*y^4 - 4*x^4*y^2 - 7*x^3*y^3 - 4*x^2*y^4
 + 2*x^4*y + 10*x^3*y^2 + 10*x^2*y^3 + 2*x*y^4 - 7*x^3*y - 8*x^2*y^2 - 7*x*y^3
 + 2*x^3 + 10*x^2*y + 10*x*y^2 + 2*y^3 - 4*x^2 - 7*x*y - 4*y^2 + 2*x + 2*y
"""

_BRACKET1 = """
2*x^4*y^3 + 2*x^3*y^4 - 2*x^4*y^2 - 9*x^3*y^3 - 2*x^2*y^4
 + 9*x^3*y^2 + 9*x^2*y^3 - 2*x*y^4 - 13*x^2*y^2 + 8*x^2*y + 8*x*y^2
 - 4*x^2 - 16*x*y - 4*y^2 + 8*x + 8*y - 4
"""

_BRACKET2 = """
4*x^4*y^4 - 8*x^4*y^3 - 8*x^3*y^4
 + 4*x^4*y^2 + 16*x^3*y^3 + 4*x^2*y^4 - 8*x^3*y^2 - 8*x^2*y^3 + 13*x^2*y^2
 - 9*x^2*y - 9*x*y^2 + 2*x^2 + 9*x*y + 2*y^2 - 2*x - 2*y
"""


@check("S2.tau-diff-factorizations", "S2", "FACTORIZATION",
       "each difference tau_i(x) - tau_i(y), divided by 2^7, factors with "
       "the displayed bivariate cofactors")
def _tau_diffs():
    t0, t1, t2 = _taus()
    den = ratfunc("x^2*(x - 1)^2*y^2*(y - 1)^2")
    probes = [
        (t0, ratfunc("(-y + x)*(x*y - 1)") * ratfunc(_BRACKET0)),
        (t1, ratfunc("(x - y)*(x*y - x - y)") * ratfunc(_BRACKET1)),
        (t2, ratfunc("(y - x)*(y - 1 + x)") * ratfunc(_BRACKET2)),
    ]
    problems = []
    for k, (t, rhs) in enumerate(probes):
        lhs = (t.subs({"a": ratfunc("x")}) - t.subs({"a": ratfunc("y")})) \
            * Fraction(1, 2 ** 7)
        problems.append(eq(lhs, rhs / den, f"tau{k} difference"))
    return combine(*problems)


@check("S2.j-difference", "S2", "FACTORIZATION",
       "j(a) - j(a') factors as 2^8 (a-a')(aa'-a-a') times the quartic "
       "unit block over the squared denominators")
def _j_diff():
    _, inv, _ = ctx("E2")
    j = inv.j
    lhs = j.subs({"a": ratfunc("x")}) - j.subs({"a": ratfunc("y")})
    A = ratfunc("(x*y - x + 1)*(x*y - y + 1)*(x + y - 1)*(x*y - 1)")
    rhs = ratfunc("2^8") / ratfunc("x^2*(x - 1)^2") \
        * ratfunc("(x - y)*(x*y - x - y)") / ratfunc("y^2*(y - 1)^2") * A
    num = lhs.num * rhs.den - rhs.num * lhs.den
    w = eq(lhs, rhs, "j difference")
    if w:
        return w
    # the block A is the displayed product of four unit factors
    return factored(A.as_mpoly(),
                    [mpoly("x*y - x + 1"), mpoly("x*y - y + 1"),
                     mpoly("x + y - 1"), mpoly("x*y - 1")], "A block")


register("S2.valuation-descent", "S2", "CONSTANT_EQUALS",
         "prime-power valuation bookkeeping inside the number ring that "
         "upgrades the bracket congruences to equality of j-invariants",
         skip_reason="ideal-theoretic step; not reducible to a polynomial "
                     "congruence over F_p")
