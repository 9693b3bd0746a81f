"""Modular resultant engine: evaluation, interpolation, CRT reconstruction.

Targets big bivariate integer instances (eliminate one variable, interpolate
the other).  Evaluation points and primes follow fixed deterministic
sequences; coefficients are reconstructed by CRT against a Hadamard-style
1-norm bound, so the result is exact, not probabilistic.

Work is split over (prime, point) pairs with no shared mutable state and
merged in schedule order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from ..errors import IllFormed
from .poly import MPoly

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond 2^64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_stream(start=(1 << 62) - 1):
    """Deterministic descending stream of primes below 2^62."""
    n = start
    if n % 2 == 0:
        n -= 1
    while True:
        if is_prime(n):
            yield n
        n -= 2


def _poly_mod_fp(a, b, p):
    """Remainder of dense coefficient lists over F_p (little-endian)."""
    a = a[:]
    db = len(b) - 1
    inv_lb = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] * inv_lb % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            if c:
                a[shift + i] = (a[shift + i] - q * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def resultant_fp(a, b, p):
    """Resultant of dense F_p coefficient lists, Euclidean PRS."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        raise IllFormed("resultant of zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    res = 1
    if da < db:
        if (da * db) % 2:
            res = p - res
        a, b, da, db = b, a, db, da
    while db > 0:
        r = _poly_mod_fp(a, b, p)
        if not r:
            return 0
        dr = len(r) - 1
        if (da * db) % 2:
            res = -res % p
        res = res * pow(b[-1], da - dr, p) % p
        a, b, da, db = b, r, db, dr
    return res * pow(b[0], da, p) % p


def _interpolate_fp(xs, ys, p):
    """Newton interpolation over F_p; returns dense coefficients."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            inv = pow((xs[i] - xs[i - j]) % p, p - 2, p)
            coef[i] = (coef[i] - coef[i - 1]) * inv % p
    # expand Newton form to standard basis
    poly = [0] * n
    for i in range(n - 1, -1, -1):
        # poly = poly*(x - xs[i]) + coef[i]
        carry = 0
        xi = xs[i] % p
        new = [0] * n
        for k in range(n - 1, 0, -1):
            new[k] = (poly[k - 1] - xi * poly[k]) % p
        new[0] = (-xi * poly[0] + 0) % p
        new[0] = (new[0] + coef[i]) % p
        poly = new
    return poly


def _int_coeff_data(f, v, w):
    """Dense [v-degree][w-degree] integer matrix for an MPoly in (v, w)."""
    dv = f.degree(v)
    dw = f.degree(w) if w is not None else 0
    iv = f.vars.index(v)
    iw = f.vars.index(w) if w is not None else None
    rows = [[0] * (dw + 1) for _ in range(dv + 1)]
    for exp, c in f.terms.items():
        if c.denominator != 1:
            raise IllFormed("modular engine needs integer coefficients")
        rows[exp[iv]][exp[iw] if iw is not None else 0] += c.numerator
    return rows


def _one_norm(rows):
    return sum(abs(c) for row in rows for c in row)


def _eval_rows(rows, x0, p):
    """Evaluate each w-coefficient row at w=x0 over F_p (Horner)."""
    out = []
    for row in rows:
        acc = 0
        for c in reversed(row):
            acc = (acc * x0 + c) % p
        out.append(acc)
    return out


def _crt_pair(r1, m1, r2, m2):
    # combine x=r1 mod m1, x=r2 mod m2
    g, s = 0, 0
    s = pow(m1, -1, m2)
    x = r1 + m1 * ((r2 - r1) * s % m2)
    return x % (m1 * m2), m1 * m2


def resultant_modular(f, g, v, workers=None, degree_bound=None):
    """Exact Res_v(f, g) for integer MPoly in at most two live variables."""
    if not isinstance(f, MPoly) or not isinstance(g, MPoly):
        raise IllFormed("resultant needs MPoly inputs")
    if f.is_zero() or g.is_zero():
        raise IllFormed("resultant of the zero polynomial")
    u = MPoly.union_vars(f, g)
    f = f.with_vars(u)
    g = g.with_vars(u)
    live = sorted((f.used_vars() | g.used_vars()))
    if v not in live:
        raise IllFormed(f"{v} not a live variable")
    others = [w for w in live if w != v]
    if len(others) > 1:
        raise IllFormed("modular engine supports at most one free variable")
    w = others[0] if others else None

    cf = f.content()
    cg = g.content()
    fz = f.primitive_part()
    sf = 1 if f.leading_term()[1] > 0 else -1
    gz = g.primitive_part()
    sg = 1 if g.leading_term()[1] > 0 else -1
    nf, ng = fz.degree(v), gz.degree(v)
    if nf <= 0 and ng <= 0:
        raise IllFormed(f"both inputs constant in {v}")
    scale = (sf * cf) ** ng * (sg * cg) ** nf

    rows_f = _int_coeff_data(fz, v, w)
    rows_g = _int_coeff_data(gz, v, w)
    bound = _one_norm(rows_f) ** ng * _one_norm(rows_g) ** nf
    if degree_bound is None:
        dwf = fz.degree(w) if w else 0
        dwg = gz.degree(w) if w else 0
        degree_bound = nf * dwg + ng * dwf
    npts = degree_bound + 1 if w else 1

    primes = []
    prod = 1
    stream = prime_stream()
    while prod <= 2 * bound:
        p = next(stream)
        primes.append(p)
        prod *= p

    def work(p):
        if w is None:
            a = [row[0] % p for row in rows_f]
            b = [row[0] % p for row in rows_g]
            if (a and a[-1] == 0) or (b and b[-1] == 0):
                return None  # degree dropped mod p; skip prime
            return [resultant_fp(a, b, p)]
        xs, ys = [], []
        x0 = 0
        trial = 0
        while len(xs) < npts:
            pt = (x0 + 1) // 2 if x0 % 2 else -(x0 // 2)  # 0,1,-1,2,-2,...
            x0 += 1
            trial += 1
            if trial > npts * 4 + 64:
                return None  # not enough good points mod p
            a = _eval_rows(rows_f, pt % p, p)
            b = _eval_rows(rows_g, pt % p, p)
            if a[-1] == 0 or b[-1] == 0:
                continue  # leading coefficient vanished; resultant spec changes
            xs.append(pt % p)
            ys.append(resultant_fp(a, b, p))
        return _interpolate_fp(xs, ys, p)

    n_workers = max(1, workers or 1)
    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            residues = list(pool.map(work, primes))
    else:
        residues = [work(p) for p in primes]

    good = [(p, r) for p, r in zip(primes, residues) if r is not None]
    if not good:
        raise IllFormed("no usable primes for modular resultant")
    prod = 1
    for p, _ in good:
        prod *= p
    if prod <= 2 * bound:
        # replace skipped primes deterministically
        while prod <= 2 * bound:
            p = next(stream)
            r = work(p)
            if r is not None:
                good.append((p, r))
                prod *= p

    ncoef = max(len(r) for _, r in good)
    combined = [0] * ncoef
    modulus = 1
    for p, r in good:
        for k in range(ncoef):
            rk = r[k] if k < len(r) else 0
            if modulus == 1:
                combined[k] = rk % p
            else:
                combined[k], _ = _crt_pair(combined[k], modulus, rk, p)
        modulus *= p
    half = modulus // 2
    lifted = [c - modulus if c > half else c for c in combined]

    if w is None:
        return MPoly.const(Fraction(lifted[0]) * scale, u)
    terms = {}
    iw = u.index(w)
    for k, c in enumerate(lifted):
        if c:
            exp = [0] * len(u)
            exp[iw] = k
            terms[tuple(exp)] = Fraction(c) * scale
    return MPoly(u, terms)
