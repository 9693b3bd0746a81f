"""Polynomial arithmetic and factorization over prime fields.

FpPoly is a little-endian residue list with the modulus attached.  Complete
factorization runs squarefree / distinct-degree / equal-degree stages; the
equal-degree split draws from a PRNG seeded by (p, poly-hash) so repeated
runs produce identical outputs.  On top of that sits the Dedekind
cycle-type probe used for the symmetric-group certifications.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IllFormed
from .exactalg import MPoly, discriminant, is_prime
from .exactalg.modres import _poly_mod_fp


class FpPoly:
    """Polynomial over F_p, little-endian coefficient list."""

    __slots__ = ("p", "c")

    def __init__(self, p, coeffs):
        self.p = p
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    @classmethod
    def from_int_coeffs(cls, p, coeffs):
        return cls(p, coeffs)

    @classmethod
    def x(cls, p):
        return cls(p, [0, 1])

    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def lead(self):
        if not self.c:
            raise IllFormed("zero polynomial")
        return self.c[-1]

    def monic(self):
        if not self.c:
            return self
        inv = pow(self.c[-1], self.p - 2, self.p)
        return FpPoly(self.p, [x * inv for x in self.c])

    def __eq__(self, other):
        return isinstance(other, FpPoly) and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, tuple(self.c)))

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        return FpPoly(self.p, [(self.c[i] if i < len(self.c) else 0)
                               + (other.c[i] if i < len(other.c) else 0)
                               for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.c), len(other.c))
        return FpPoly(self.p, [(self.c[i] if i < len(self.c) else 0)
                               - (other.c[i] if i < len(other.c) else 0)
                               for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [x * other for x in self.c])
        if not self.c or not other.c:
            return FpPoly(self.p, [])
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("FpPoly division by zero")
        p = self.p
        r = self.c[:]
        q = [0] * max(0, len(r) - len(other.c) + 1)
        inv = pow(other.c[-1], p - 2, p)
        db = other.degree()
        while len(r) - 1 >= db and r:
            if r[-1] == 0:
                r.pop()
                continue
            k = r[-1] * inv % p
            shift = len(r) - 1 - db
            q[shift] = k
            for i, c in enumerate(other.c):
                if c:
                    r[shift + i] = (r[shift + i] - k * c) % p
            r.pop()
        return FpPoly(p, q), FpPoly(p, r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def pow_mod(self, e, mod):
        result = FpPoly(self.p, [1])
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            e >>= 1
            if e:
                base = (base * base) % mod
        return result

    def derivative(self):
        return FpPoly(self.p, [c * k % self.p for k, c in enumerate(self.c)][1:])

    def eval(self, x):
        acc = 0
        for c in reversed(self.c):
            acc = (acc * x + c) % self.p
        return acc

    def shift_compose(self, g, mod):
        """self(g) mod `mod`, Horner in the quotient ring."""
        acc = FpPoly(self.p, [])
        for c in reversed(self.c):
            acc = (acc * g + FpPoly(self.p, [c])) % mod
        return acc

    def format(self, var="x"):
        if not self.c:
            return "0"
        bits = []
        for k in range(len(self.c) - 1, -1, -1):
            c = self.c[k]
            if not c:
                continue
            if k == 0:
                bits.append(str(c))
            elif k == 1:
                bits.append(f"{c}*{var}" if c != 1 else var)
            else:
                bits.append(f"{c}*{var}^{k}" if c != 1 else f"{var}^{k}")
        return " + ".join(bits)

    def __repr__(self):
        return f"FpPoly(p={self.p}, {self.format()})"


def reduce_mod_p(f, p):
    """Coefficientwise reduction of an integer univariate MPoly to FpPoly."""
    if not is_prime(p):
        raise IllFormed(f"{p} is not prime")
    live = sorted(f.used_vars())
    if len(live) > 1:
        raise IllFormed("use reduce_mod_p_mpoly for multivariate inputs")
    v = live[0] if live else None
    coeffs = [0] * (f.degree(v) + 1 if v else 1)
    iv = f.vars.index(v) if v else None
    for exp, c in f.terms.items():
        if c.denominator != 1:
            raise IllFormed("non-integer coefficient")
        coeffs[exp[iv] if v else 0] += c.numerator
    return FpPoly(p, coeffs)


def reduce_mod_p_mpoly(f, p):
    """Multivariate analogue: coefficients reduced into [0, p)."""
    if not is_prime(p):
        raise IllFormed(f"{p} is not prime")
    terms = {}
    for exp, c in f.terms.items():
        if c.denominator != 1:
            raise IllFormed("non-integer coefficient")
        r = c.numerator % p
        if r:
            terms[exp] = Fraction(r)
    return MPoly(f.vars, terms)


def _squarefree_decomposition(f):
    """List of (monic squarefree factor, multiplicity) covering f."""
    p = f.p
    out = []

    def yun(g, mult):
        g = g.monic()
        if g.degree() <= 0:
            return
        gp = g.derivative()
        if gp.is_zero():
            root = FpPoly(p, [g.c[i] for i in range(0, len(g.c), p)])
            yun(root, mult * p)
            return
        a = g.gcd(gp)
        b = g // a
        i = 1
        while b.degree() > 0:
            c = a.gcd(b)
            piece = b // c
            if piece.degree() > 0:
                out.append((piece.monic(), mult * i))
            b = c
            a = a // c
            i += 1
        if a.degree() > 0:
            yun(a, mult * p)

    yun(f, 1)
    return out


def _distinct_degree(f):
    """[(product-of-irreducibles-of-degree-d, d)] for monic squarefree f."""
    p = f.p
    out = []
    x = FpPoly.x(p)
    h = x
    g = f
    d = 0
    while g.degree() > 0:
        d += 1
        if 2 * d > g.degree():
            out.append((g, g.degree()))
            break
        h = h.pow_mod(p, g)
        factor = g.gcd(h - x)
        if factor.degree() > 0:
            out.append((factor, d))
            g = g // factor
            h = h % g
    return out


def _equal_degree_split(f, d, rng):
    """Cantor-Zassenhaus split of a degree-(k*d) product of degree-d primes."""
    p = f.p
    n = f.degree()
    if n == d:
        return [f]
    while True:
        a = FpPoly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree() < 1:
            continue
        g = f.gcd(a)
        if 0 < g.degree() < n:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = t.pow_mod(2, f)
                acc = (acc + t) % f
            g = f.gcd(acc)
        else:
            e = (p ** d - 1) // 2
            b = a.pow_mod(e, f)
            g = f.gcd(b - FpPoly(p, [1]))
        if 0 < g.degree() < n:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor_mod_p(f):
    """Complete monic factorization [(irreducible, multiplicity), ...].

    Deterministic: the equal-degree stage is seeded from (p, f).  Factors
    are sorted by (degree, coefficient tuple).
    """
    if f.is_zero():
        raise IllFormed("cannot factor the zero polynomial")
    p = f.p
    unit = f.lead()
    rng = random.Random((p, tuple(f.c)).__repr__())
    pieces = []
    for sqfree, mult in _squarefree_decomposition(f):
        for prod, d in _distinct_degree(sqfree):
            for irr in _equal_degree_split(prod, d, rng):
                pieces.append((irr.monic(), mult))
    pieces.sort(key=lambda t: (t[0].degree(), tuple(t[0].c)))
    return unit, pieces


def degree_pattern(f):
    """Multiset of irreducible factor degrees (with multiplicity)."""
    _, pieces = factor_mod_p(f)
    pattern = []
    for poly, mult in pieces:
        pattern.extend([poly.degree()] * mult)
    return tuple(sorted(pattern))


def distinct_degree_pattern(f):
    """Factor-degree multiset of a squarefree f via DDF only (fast)."""
    out = []
    for prod, d in _distinct_degree(f.monic()):
        out.extend([d] * (prod.degree() // d))
    return tuple(sorted(out))


# -- quotient-ring resultant ---------------------------------------------------

def _fp_poly_matrix_det(rows, p):
    """Fraction-free Bareiss determinant over F_p[x]."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = FpPoly(p, [1])
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return FpPoly(p, [])
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                if not r.is_zero():
                    raise IllFormed("Bareiss division not exact")
                m[i][j] = q
            m[i][k] = FpPoly(p, [])
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else det * (p - 1)


@dataclass
class QuotientResultant:
    p: int
    modulus: FpPoly
    residue: FpPoly          # representative of Res mod (m(x), p), deg < deg m
    nonzero: bool
    invertible: bool         # gcd(residue, modulus) = 1
    unit: int                # leading unit of the residue
    factors: list            # monic irreducible factors of the residue over F_p


def quotient_resultant(B, m, p, quotient_modulus=None):
    """Res_y(B(x,y), m(y)) with coefficients reduced mod (m(x), p).

    B is an integer MPoly in (x, y) (y-only is fine); m an FpPoly used as
    the y-argument, and as the quotient modulus unless one is supplied.
    Returns a QuotientResultant carrying the residue, its factorization
    over F_p and a certified zero/nonzero flag.
    """
    if not is_prime(p):
        raise IllFormed(f"{p} is not prime")
    qmod = quotient_modulus if quotient_modulus is not None else m
    if qmod.degree() > 0:
        if qmod.gcd(qmod.derivative()).degree() != 0:
            raise IllFormed("quotient modulus must be squarefree mod p")
    # Sylvester matrix of B (in y, coefficients in F_p[x]) against m(y)
    live = sorted(B.used_vars())
    if "y" not in live:
        raise IllFormed("B must involve y")
    dy = B.degree("y")
    dx = B.degree("x") if "x" in B.vars and B.degree("x") > 0 else 0
    iy = B.vars.index("y")
    ix = B.vars.index("x") if "x" in B.vars else None
    bc = [[0] * (dx + 1) for _ in range(dy + 1)]
    for exp, c in B.terms.items():
        if c.denominator != 1:
            raise IllFormed("non-integer coefficient")
        bc[exp[iy]][exp[ix] if ix is not None else 0] += c.numerator
    brows = [FpPoly(p, row) for row in bc]          # index = y-degree
    mrows = [FpPoly(p, [c]) for c in m.c]
    n, k = dy, m.degree()
    rows = []
    zero = FpPoly(p, [])
    bden = brows[::-1]
    mden = mrows[::-1]
    for i in range(k):
        rows.append([zero] * i + bden + [zero] * (k - 1 - i))
    for i in range(n):
        rows.append([zero] * i + mden + [zero] * (n - 1 - i))
    res = _fp_poly_matrix_det(rows, p)
    residue = res % qmod if qmod.degree() > 0 else res
    nonzero = not residue.is_zero()
    invertible = nonzero and qmod.degree() > 0 and residue.gcd(qmod).degree() == 0
    if nonzero:
        unit, factors = factor_mod_p(residue)
        flist = [f for f, mult in factors for _ in range(mult)]
    else:
        unit, flist = 0, []
    return QuotientResultant(p=p, modulus=qmod, residue=residue, nonzero=nonzero,
                             invertible=invertible, unit=unit, factors=flist)


# -- Dedekind cycle-type probing -------------------------------------------------

@dataclass
class CycleTypeReport:
    poly: tuple               # integer coefficients, little-endian
    n: int
    observations: dict = field(default_factory=dict)   # prime -> degree tuple
    verdict: str = "INCONCLUSIVE"
    primes_used: int = 0
    evidence: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "poly": list(self.poly),
            "degree": self.n,
            "observations": {str(p): list(t) for p, t in self.observations.items()},
            "verdict": self.verdict,
            "primes_used": self.primes_used,
            "evidence": {k: str(v) for k, v in self.evidence.items()},
        }


def _is_transposition_type(pattern):
    return pattern.count(2) == 1 and all(d % 2 == 1 for d in pattern if d != 2)


def _int_coeffs(f):
    live = sorted(f.used_vars())
    if len(live) != 1:
        raise IllFormed("probe needs a univariate integer polynomial")
    v = live[0]
    iv = f.vars.index(v)
    coeffs = [0] * (f.degree(v) + 1)
    for exp, c in f.terms.items():
        if c.denominator != 1:
            raise IllFormed("non-integer coefficient")
        coeffs[exp[iv]] = c.numerator
    return coeffs


def galois_cycle_probe(f, prime_budget=25):
    """Sample factorization patterns mod good primes; certify S_n when sound.

    SYMMETRIC_CERTIFIED requires an irreducible pattern (an n-cycle), a
    pattern whose odd power is a transposition (single part 2, all other
    parts odd), and either n prime or an observed (1, n-1) pattern; these
    together generate S_n.  Anything less stays INCONCLUSIVE.
    """
    if isinstance(f, (list, tuple)):
        f = MPoly.from_dense(f, "x")
    coeffs = _int_coeffs(f)
    n = len(coeffs) - 1
    if n < 1:
        raise IllFormed("degree must be positive")
    v = sorted(f.used_vars())[0]
    d = discriminant(f, v) if n >= 2 else MPoly.const(1)
    disc = int(d.constant())
    if disc == 0:
        raise IllFormed("polynomial is not squarefree")
    lc = coeffs[-1]

    report = CycleTypeReport(poly=tuple(coeffs), n=n)
    if n == 1:
        report.verdict = "SYMMETRIC_CERTIFIED"
        return report

    seen_ncycle = False
    seen_transposition = False
    seen_n1cycle = False
    p = 1
    used = 0
    while used < prime_budget:
        p += 1
        while not is_prime(p):
            p += 1
        if lc % p == 0 or disc % p == 0:
            continue
        used += 1
        pattern = distinct_degree_pattern(FpPoly(p, coeffs))
        report.observations[p] = pattern
        if pattern == (n,):
            seen_ncycle = True
        if _is_transposition_type(pattern):
            seen_transposition = True
        if sorted(pattern) == sorted((1, n - 1)):
            seen_n1cycle = True
    report.primes_used = used
    certified = seen_ncycle and seen_transposition and (is_prime(n) or n <= 2 or seen_n1cycle)
    if certified:
        report.verdict = "SYMMETRIC_CERTIFIED"
    report.evidence = {
        "n_cycle": seen_ncycle,
        "transposition": seen_transposition,
        "n_minus_1_cycle": seen_n1cycle,
    }
    return report
