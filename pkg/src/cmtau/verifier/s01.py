"""Section S1: normalization identities and the hard-modulus classifier."""

from fractions import Fraction
from itertools import product

from . import check
from .util import combine, ctx, eq
from ..tauinv import IdealShape, failing_ideals, hasse_lambda


@check("S1.lambda6", "S1", "POLY_IDENTITY",
       "sixth power of the Hasse factor times the discriminant equals "
       "12^6 j^2 (j-1728)^3 for all six curve families")
def _lambda6():
    problems = []
    for tag in ("E2", "E3", "E4", "E5", "E9", "E12"):
        _, inv, tctx = ctx(tag)
        lhs = tctx.lam ** 6 * inv.disc
        rhs = Fraction(12 ** 6) * inv.j ** 2 * (inv.j - 1728) ** 3
        problems.append(eq(lhs, rhs, f"{tag} lambda^6"))
        # hasse_lambda certifies internally as well
        hasse_lambda(inv.g2, inv.g3, inv.disc)
    return combine(*problems)


@check("S1.psi-formula", "S1", "CONSTANT_EQUALS",
       "multiplicative norm formula Psi(m) = N(m) prod (1 - 2/N(p)) "
       "on representative moduli")
def _psi_formula():
    inert2 = IdealShape((("(2)", 1),), (("(2)", 4),))
    p5 = IdealShape((("p5", 1),), (("p5", 5),))
    p3p3p5 = IdealShape((("p3", 1), ("p3'", 1), ("p5", 1)),
                        (("p3", 3), ("p3'", 3), ("p5", 5)))
    p2cube = IdealShape((("p2", 3),), (("p2", 2),))
    return combine(
        eq(inert2.psi(), Fraction(2), "Psi((2)) inert"),
        eq(p5.psi(), Fraction(3), "Psi(p5)"),
        eq(p3p3p5.psi(), Fraction(3), "Psi(p3 p3' p5)"),
        eq(p2cube.psi(), Fraction(0), "Psi(p2^3)"),
        eq(inert2.phi(), 3, "phi((2)) inert"),
    )


#: canonical shapes of the moduli that escape all three sufficiency conditions
HARD_MODULI = {
    "(2)", "p2^2", "p2^3", "p2^2*p2'^2",
    "p3*p3'", "p3^2", "p3*p3'^2", "(2)*p3*p3'", "p2^2*p3",
    "p5", "p3*p5", "p3*p3'*p5",
}


@check("S1.list4", "S1", "CONSTANT_EQUALS",
       "union over all splitting patterns of the moduli failing conditions "
       "(1)-(3) matches the twelve canonical shapes")
def _list4():
    union = set()
    for s2, s3, s5 in product(("split", "inert", "ramified"), repeat=3):
        for shape in failing_ideals(s2, s3, s5):
            union.add(shape.label())
    if union != HARD_MODULI:
        return (f"extra: {sorted(union - HARD_MODULI)}, "
                f"missing: {sorted(HARD_MODULI - union)}")
    # the split-everywhere pattern carries 9 of the 12 shapes
    splitall = {s.label() for s in failing_ideals("split", "split", "split")}
    expect = {"p2^3", "p2^2*p2'^2", "p3*p3'", "p3^2", "p3*p3'^2",
              "p2^2*p3", "p5", "p3*p5", "p3*p3'*p5"}
    return eq(sorted(splitall), sorted(expect), "split/split/split pattern")
