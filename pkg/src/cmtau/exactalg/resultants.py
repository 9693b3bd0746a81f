"""Resultants, discriminants, pseudo-reduction and reciprocal decomposition.

Three independent resultant routes are provided (Sylvester determinant via
fraction-free Bareiss, subresultant-style PRS, and modular
evaluation/interpolation for big bivariate integer instances).  They must
agree bit-exactly; the test suite enforces this on random instances.

Sign convention: Res_v(f, g) = lc(f)^deg(g) * prod g(root_i(f)), which equals
the determinant of the standard Sylvester matrix.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import IllFormed, NotReciprocal
from .poly import MPoly, exact_divide


def _check_resultant_args(f, g, v):
    if not isinstance(f, MPoly) or not isinstance(g, MPoly):
        raise IllFormed("resultant needs MPoly inputs")
    if f.is_zero() or g.is_zero():
        raise IllFormed("resultant of the zero polynomial")
    u = MPoly.union_vars(f, g)
    if v not in u:
        raise IllFormed(f"{v} not a variable of either input")
    f = f.with_vars(u)
    g = g.with_vars(u)
    if f.degree(v) <= 0 and g.degree(v) <= 0:
        raise IllFormed(f"both inputs constant in {v}")
    return f, g


def sylvester_matrix(f, g, v):
    """Sylvester matrix of f, g with respect to v; entries are MPoly."""
    f, g = _check_resultant_args(f, g, v)
    m, n = f.degree(v), g.degree(v)
    fc = f.to_dense(v)[::-1]  # leading coefficient first
    gc = g.to_dense(v)[::-1]
    zero = MPoly.zero(f.vars)
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (m - 1 - i))
    return rows


def _bareiss_det(rows):
    """Fraction-free Bareiss determinant of a matrix of MPoly."""
    n = len(rows)
    if n == 0:
        return MPoly.const(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = MPoly.const(1, m[0][0].vars)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(m[0][0].vars)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = exact_divide(num, prev)
            m[i][k] = MPoly.zero(pivot.vars)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant_sylvester(f, g, v):
    """Resultant via the Bareiss determinant of the Sylvester matrix."""
    return _bareiss_det(sylvester_matrix(f, g, v))


def _prem_steps(f, g, v):
    """Incremental pseudo-remainder: returns (r, s) with lc(g)^s*f = q*g + r."""
    dg = g.degree(v)
    lg = g.coeff_of(v, dg)
    x = MPoly.var(v, f.vars)
    r = f
    s = 0
    while True:
        dr = r.degree(v)
        if r.is_zero() or dr < dg:
            return r, s
        lr = r.coeff_of(v, dr)
        r = r * lg - g * lr * x ** (dr - dg)
        s += 1


def resultant_prs(f, g, v):
    """Resultant via a content-stripped pseudo-remainder sequence.

    Repeatedly applies Res(a,b) = (-1)^(da*db) lc(b)^(da-dr) Res(b, r) for
    the true remainder r, realized through pseudo-remainders plus exact
    factor bookkeeping: big_r = lc(b)^s * r = c * prim with rational c.
    """
    f, g = _check_resultant_args(f, g, v)
    a, b = f, g
    da, db = a.degree(v), b.degree(v)
    sign = 1
    if da < db:
        if (da * db) % 2:
            sign = -sign
        a, b, da, db = b, a, db, da
    scalar = Fraction(1)
    num = {}  # MPoly factor -> exponent
    den = {}

    def mul_into(d, poly, e):
        if e:
            d[poly] = d.get(poly, 0) + e

    while db > 0:
        big_r, s = _prem_steps(a, b, v)
        if big_r.is_zero():
            return MPoly.zero(a.vars)
        prim = big_r.primitive_part()
        c_signed = big_r.content()
        if big_r.leading_term()[1] < 0:
            c_signed = -c_signed
        dr = prim.degree(v)
        lb = b.coeff_of(v, db)
        if (da * db) % 2:
            sign = -sign
        mul_into(num, lb, da - dr)
        mul_into(den, lb, s * db)
        scalar *= c_signed ** db
        a, b = b, prim
        da, db = db, dr

    result = MPoly.const(scalar if sign > 0 else -scalar, a.vars)
    for key, e in num.items():
        result = result * key ** e
    result = result * b ** da
    for key, e in den.items():
        result = exact_divide(result, key ** e)
    return result


def resultant(f, g, v, algorithm="prs"):
    """Spec operation: Res_v(f, g), bit-exact, algorithm-independent."""
    if algorithm == "prs":
        return resultant_prs(f, g, v)
    if algorithm == "sylvester":
        return resultant_sylvester(f, g, v)
    if algorithm == "modular":
        from .modres import resultant_modular
        return resultant_modular(f, g, v)
    raise IllFormed(f"unknown resultant algorithm {algorithm!r}")


def discriminant(f, v, algorithm="prs"):
    """disc = (-1)^(d(d-1)/2) Res_v(f, df/dv) / lc_v(f)."""
    if not isinstance(f, MPoly):
        raise IllFormed("discriminant needs an MPoly")
    d = f.degree(v)
    if d < 2:
        raise IllFormed(f"degree in {v} must be >= 2")
    r = resultant(f, f.derivative(v), v, algorithm=algorithm)
    r = exact_divide(r, f.coeff_of(v, d))
    if (d * (d - 1) // 2) % 2:
        r = -r
    return r


def reduce_wrt(f, rel, v):
    """Canonical pseudo-remainder of f by rel with respect to v.

    When lc_v(rel) is a constant the result is the true remainder (the
    pseudo-remainder scaled back by the exact lc power), so reduction by a
    monic relation is ordinary division.  With a polynomial leading
    coefficient the raw pseudo-remainder is returned; reducing an
    already-reduced input is the identity either way.
    """
    if not isinstance(f, MPoly) or not isinstance(rel, MPoly):
        raise IllFormed("reduce_wrt needs MPoly inputs")
    u = MPoly.union_vars(f, rel)
    if v not in u:
        raise IllFormed(f"{v} not present in the inputs")
    f = f.with_vars(u)
    rel = rel.with_vars(u)
    dr = rel.degree(v)
    if dr <= 0:
        raise IllFormed(f"relation must have positive degree in {v}")
    if f.degree(v) < dr:
        return f
    lc = rel.coeff_of(v, dr)
    r, s = _prem_steps(f, rel, v)
    if lc.is_constant():
        return r * (Fraction(1) / lc.constant() ** s)
    return r


def reduce_chain(f, relations):
    """Apply reduce_wrt for several (rel, v) pairs, left to right."""
    for rel, v in relations:
        f = reduce_wrt(f, rel, v)
    return f


def reciprocal_decompose(f, v, sign):
    """Write f(v) = v^m * G(u) with u = v + sign/v and deg_v f = 2m.

    sign=+1 handles reciprocal polynomials (u = v + 1/v), sign=-1
    reverse-reciprocal ones (u = v - 1/v).  The required coefficient
    symmetry is c[2m-i] = sign^(m+i) * c[i]; NotReciprocal otherwise.
    """
    if sign not in (1, -1):
        raise IllFormed("sign must be +1 or -1")
    if not isinstance(f, MPoly):
        raise IllFormed("reciprocal_decompose needs an MPoly")
    d = f.degree(v)
    if d < 0 or d % 2:
        raise NotReciprocal(f"degree in {v} must be even and positive, got {d}")
    m = d // 2
    coeffs = f.to_dense(v)
    for i in range(d + 1):
        rhs = coeffs[i] if (sign == 1 or (m + i) % 2 == 0) else -coeffs[i]
        if not (coeffs[d - i] - rhs).is_zero():
            raise NotReciprocal(f"coefficient symmetry fails at index {i}")
    # solve top-down: f = sum_j g_j * v^(m-j) * (v^2 + sign)^j
    u = f.vars
    x = MPoly.var(v, u)
    rem = f
    g_terms = []
    for j in range(m, -1, -1):
        cj = rem.coeff_of(v, m + j)
        g_terms.append((j, cj))
        rem = rem - cj * x ** (m - j) * (x ** 2 + sign) ** j
    if not rem.is_zero():
        raise NotReciprocal("decomposition left a nonzero remainder")
    gvar = "_u"
    while gvar in u:
        gvar += "_"
    gu = MPoly.var(gvar)
    out = MPoly.zero((gvar,))
    for j, cj in g_terms:
        out = out + cj.with_vars(tuple(w for w in u if w != v)) * gu ** j
    if v not in out.used_vars():
        out = out.subs_poly({gvar: MPoly.var(v)})
    return out
