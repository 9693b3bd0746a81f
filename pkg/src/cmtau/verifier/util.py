"""Shared fixtures and assertion helpers for the catalog sections."""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from ..cmcurves import family
from ..exactalg import (
    MPoly, RatFunc, divides, exact_divide, mpoly, ratfunc,
)
from ..tauinv import tau, tau_context
from ..towerfield import Tower, TowerElem, adjoin, adjoin_omega


def eq(got, expect, label=""):
    """None when equal, otherwise a short witness with the difference."""
    try:
        same = not (got - expect)
    except TypeError:
        same = got == expect
    if same:
        return None
    return f"{label or 'value'}: got {got!r}, expected {expect!r}"


def combine(*witnesses):
    problems = [w for w in witnesses if w is not None]
    return "; ".join(problems) if problems else None


def zero(value, label=""):
    if not value:
        return None
    return f"{label or 'expression'} is nonzero: {value!r}"


def factored(target, factors, label=""):
    """FACTORIZATION check: each factor divides; the product re-expands."""
    prod = None
    for f in factors:
        prod = f if prod is None else prod * f
    w = []
    if isinstance(target, MPoly):
        for k, f in enumerate(factors):
            if isinstance(f, MPoly) and not f.is_constant() and not divides(f, target):
                w.append(f"{label}: factor {k} does not divide")
    w.append(eq(prod, target, f"{label} re-expansion"))
    return combine(*w)


@cache
def ctx(tag):
    """(curve, invariants, tau context) for a family tag."""
    curve = family(tag)
    inv = curve.invariants()
    return curve, inv, tau_context(curve)


def tau_of(tag, x):
    _, _, tctx = ctx(tag)
    return tau(tctx, x)


@cache
def rf(text):
    return ratfunc(text)


@cache
def mp(text):
    return mpoly(text)


# -- towers used by several sections ------------------------------------------------

@cache
def tower_beta_i():
    """Q(beta) with a square root of -1 adjoined."""
    t = adjoin(Tower(base_vars=("beta",)), -1, name="i")
    return t, t.gen(0)


@cache
def tower_beta_omega():
    """Q(beta) with omega adjoined."""
    t = adjoin_omega(Tower(base_vars=("beta",)))
    return t, t.gen(0)


@cache
def tower_d11():
    """Q(sqrt(-11))(sqrt(-2 sqrt(-11) + 6)) and its marked elements."""
    t1 = adjoin(Tower(), -11, name="sqrt_m11")
    sm11 = t1.gen(0)
    t2 = adjoin(t1, -2 * sm11 + 6, name="inner")
    sm11 = TowerElem(t2, t2._embed(sm11.node, 1, 2))
    inner = t2.gen(1)
    b = -1 + sm11 + (Fraction(3, 4) - sm11 / 4) * inner
    return t2, sm11, inner, b


def lift_all(tower, *elems):
    out = []
    for e in elems:
        if isinstance(e, TowerElem):
            if e.tower == tower:
                out.append(e)
            else:
                out.append(TowerElem(tower, tower._embed(e.node, e.tower.depth,
                                                         tower.depth)))
        else:
            out.append(tower.from_base(e))
    return out
