"""Hasse-normalized torsion invariants and the quadratic-field case classifier.

tau(P) = lambda * (X(P) + b2/12) with lambda = -2^7 3^5 g2 g3 / Delta; the
b2/12 shift makes one formula cover every family.  The classifier enumerates
the ideals supported on primes over 2, 3, 5 that escape all three of the
classical sufficiency conditions, by splitting pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import Degenerate, IllFormed, NotGeneric
from .exactalg import RatFunc
from .exactalg.fieldpoly import FieldPoly


@dataclass
class TauContext:
    curve: object
    lam: object       # the Hasse factor
    shift: object     # b2/12


def hasse_lambda(g2, g3, disc, certify=True):
    """lambda = -2^7 3^5 g2 g3 / Delta, with the sixth-power certificate."""
    if not g2 or not g3:
        raise NotGeneric("g2*g3 vanishes; no Hasse factor in this normalization")
    lam = Fraction(-(2 ** 7) * (3 ** 5)) * g2 * g3 / disc
    if certify:
        j = 1728 * g2 ** 3 / disc
        lhs = lam ** 6 * disc
        rhs = Fraction(12 ** 6) * j ** 2 * (j - 1728) ** 3
        if lhs - rhs:
            raise IllFormed("lambda^6 certificate failed")
    return lam


def tau_context(curve):
    inv = curve.invariants()
    lam = hasse_lambda(inv.g2, inv.g3, inv.disc)
    return TauContext(curve, lam, inv.b2 * Fraction(1, 12))


def tau(ctx, x):
    """Invariant attached to the X-coordinate x."""
    return ctx.lam * (x + ctx.shift)


def ray_class_poly(taus):
    """Monic polynomial with the given invariants as roots (FieldPoly)."""
    taus = list(taus)
    if not taus:
        raise IllFormed("empty invariant list")
    one = _one_like(taus[0])
    return FieldPoly.from_roots(taus, one=one)


def _one_like(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(1)
    if isinstance(x, RatFunc):
        return RatFunc.const(1)
    tower = getattr(x, "tower", None)
    if tower is not None:
        return tower.one()
    return Fraction(1)


def cross_ratio(t1, t2, t3, t4):
    """(t1, t2; t3, t4) = (t1-t3)(t2-t4) / ((t2-t3)(t1-t4))."""
    d1 = t2 - t3
    d2 = t1 - t4
    if not d1 or not d2:
        raise Degenerate("cross-ratio denominator vanishes")
    return ((t1 - t3) * (t2 - t4)) / (d1 * d2)


# -- quadratic-field case classification --------------------------------------------

def kronecker_symbol(d, p):
    if p == 2:
        if d % 2 == 0:
            return 0
        return 1 if d % 8 in (1, 7) else -1
    r = d % p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def is_fundamental_discriminant(d):
    if d >= 0:
        return False
    if d % 4 == 1:
        return _squarefree(-d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(-m)
    return False


def _squarefree(n):
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class IdealShape:
    """Formal ideal supported on the primes over 2, 3, 5.

    exps maps a prime label like 'p2', "p2'", '(2)' to its exponent; norms
    carry the absolute norm of each label.
    """
    exps: tuple          # sorted tuple of (label, exponent)
    norms: tuple         # matching tuple of (label, norm)

    def norm(self):
        n = 1
        for (lbl, e), (_, q) in zip(self.exps, self.norms):
            n *= q ** e
        return n

    def phi(self):
        out = 1
        for (lbl, e), (_, q) in zip(self.exps, self.norms):
            out *= q ** (e - 1) * (q - 1)
        return out

    def psi(self):
        val = Fraction(self.norm())
        for (_, e), (_, q) in zip(self.exps, self.norms):
            val *= 1 - Fraction(2, q)
        return val

    def label(self):
        bits = []
        for (lbl, e), _ in zip(self.exps, self.norms):
            bits.append(lbl if e == 1 else f"{lbl}^{e}")
        return "*".join(bits) if bits else "(1)"


def _primes_for(l, splitting):
    """Prime labels over the rational prime l with (norm, ramification index)."""
    if splitting == "split":
        return [(f"p{l}", l, 1), (f"p{l}'", l, 1)]
    if splitting == "inert":
        return [(f"({l})", l * l, 1)]
    if splitting == "ramified":
        return [(f"p{l}", l, 2)]
    raise IllFormed(f"bad splitting type {splitting!r}")


def _all_ideals(split2, split3, split5, max_exp=3):
    prime_data = (_primes_for(2, split2) + _primes_for(3, split3)
                  + _primes_for(5, split5))
    labels = [(lbl, q) for lbl, q, _ in prime_data]
    # exponents above these are always caught by conditions (2) or (3)
    caps = {2: min(max_exp, 3), 3: min(max_exp, 2), 5: min(max_exp, 1)}
    ranges = [range(0, caps[2 if "2" in lbl else 3 if "3" in lbl else 5] + 1)
              for lbl, _ in labels]
    for exps in product(*ranges):
        if not any(exps):
            continue
        pairs = tuple((lbl, e) for (lbl, _), e in zip(labels, exps) if e)
        norms = tuple((lbl, q) for (lbl, q), e in zip(labels, exps) if e)
        yield IdealShape(pairs, norms), dict(zip([l for l, _ in labels], exps)), prime_data


def _divides_ideal(exps_a, exps_b):
    """a | b on exponent dicts."""
    return all(exps_b.get(l, 0) >= e for l, e in exps_a.items())


def _proper_divisors(exps):
    labels = [l for l, e in exps.items() if e]
    ranges = [range(0, exps[l] + 1) for l in labels]
    for combo in product(*ranges):
        d = dict(zip(labels, combo))
        if d != {l: exps[l] for l in labels}:
            yield d


def _ray_degree(exps, prime_data):
    """[K_m : Sigma] = phi(m) / #(unit image): units {+-1}, trivial mod m | (2)."""
    phi = 1
    norm_div2 = True
    for lbl, q, ram in prime_data:
        e = exps.get(lbl, 0)
        if e:
            phi *= q ** (e - 1) * (q - 1)
            # m | (2) iff every prime divides 2 with exponent <= v_p((2))
            l = 2 if lbl in ("p2", "p2'", "(2)") else (3 if "3" in lbl else 5)
            v2 = ram if l == 2 else 0
            if l != 2 or e > v2:
                norm_div2 = False
    return phi if norm_div2 else Fraction(phi, 2)


@dataclass
class QuadFieldCase:
    d_K: int
    splitting: dict
    hard_ideals: list = field(default_factory=list)   # shapes failing (1)-(3)
    psi_values: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "d_K": self.d_K,
            "splitting": self.splitting,
            "hard_ideals": [s.label() for s in self.hard_ideals],
            "psi": {k: str(v) for k, v in self.psi_values.items()},
        }


def _canonicalize(shapes):
    """One representative per orbit of the psi <-> psi' swaps, per prime."""
    def swapped(exps_pairs, l):
        out = []
        for lbl, e in exps_pairs:
            if lbl == f"p{l}":
                out.append((f"p{l}'", e))
            elif lbl == f"p{l}'":
                out.append((f"p{l}", e))
            else:
                out.append((lbl, e))
        return tuple(sorted(out))

    by_rep = {}
    for shape in shapes:
        key = tuple(sorted(shape.exps))
        orbit = {key}
        for l in (2, 3, 5):
            orbit |= {swapped(k, l) for k in orbit}
        rep = min(orbit)
        if key == rep:
            by_rep[rep] = shape
        else:
            by_rep.setdefault(rep, shape)
    return [s for _, s in sorted(by_rep.items())]


def failing_ideals(split2, split3, split5, max_exp=3):
    """Conductors over {2,3,5} that satisfy none of the three conditions.

    Condition (1): (4) | m, m != (4); (2): some prime over 2 has square
    dividing m and phi(m) >= 6; (3): Psi(m) >= 5.  The conductor filter
    keeps m only when its ray degree strictly exceeds that of every proper
    divisor; the result lists one representative per conjugation orbit.
    """
    out = []
    prime_data = (_primes_for(2, split2) + _primes_for(3, split3)
                  + _primes_for(5, split5))
    four = {}
    for lbl, q, ram in prime_data:
        l = 2 if lbl in ("p2", "p2'", "(2)") else None
        if l == 2:
            four[lbl] = 2 * ram
    for shape, exps, _ in _all_ideals(split2, split3, split5, max_exp):
        # condition (1)
        div4 = all(exps.get(l, 0) >= e for l, e in four.items())
        is4 = div4 and all(exps.get(l, 0) == four.get(l, 0) for l in exps if exps[l])
        if div4 and not is4:
            continue
        # condition (2)
        sq2 = any(exps.get(lbl, 0) >= 2 for lbl, q, ram in prime_data
                  if lbl in four)
        if sq2 and shape.phi() >= 6:
            continue
        # condition (3)
        if shape.psi() >= 5:
            continue
        # conductor filter
        deg = _ray_degree(exps, prime_data)
        if deg <= 1:
            continue
        if any(_ray_degree(d, prime_data) >= deg for d in _proper_divisors(exps)):
            continue
        out.append(shape)
    return _canonicalize(out)


def classify(d_K):
    """Splitting of 2, 3, 5 and the list of ideals needing a direct argument."""
    if not is_fundamental_discriminant(d_K) or d_K >= -4:
        raise IllFormed(f"{d_K} is not a fundamental discriminant < -4")
    names = {1: "split", -1: "inert", 0: "ramified"}
    splitting = {p: names[kronecker_symbol(d_K, p)] for p in (2, 3, 5)}
    shapes = failing_ideals(splitting[2], splitting[3], splitting[5])
    case = QuadFieldCase(d_K=d_K, splitting={str(k): v for k, v in splitting.items()})
    case.hard_ideals = shapes
    case.psi_values = {s.label(): s.psi() for s in shapes}
    return case
