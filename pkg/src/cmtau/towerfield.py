"""Iterated quadratic-radical towers over Q or a rational-function field.

A Tower is a base field plus a sequence of levels, each adjoining either a
square root of an element of the tower built so far, or omega with
omega^2 + omega + 1 = 0.  Every level doubles the degree, so a tower with
k levels has degree 2^k; elements are nested (lo, hi) pairs bottoming out
in base scalars (Fraction over Q, RatFunc otherwise).

Radical signs are formal: each square-root level designates one branch.
Sign-sensitive checks try both branch assignments and accept exactly one.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivByZero, IllFormed, NeedsCubicSplit
from .exactalg import MPoly, RatFunc
from .exactalg.fieldpoly import FieldPoly


class _Level:
    __slots__ = ("kind", "radicand", "name")

    def __init__(self, kind, radicand, name):
        self.kind = kind          # "sqrt" | "omega"
        self.radicand = radicand  # node of depth == level index (sqrt only)
        self.name = name

    def __eq__(self, other):
        return (isinstance(other, _Level) and self.kind == other.kind
                and self.radicand == other.radicand)

    def __hash__(self):
        return hash((self.kind, repr(self.radicand)))


class Tower:
    """Base field descriptor plus adjunction levels."""

    def __init__(self, base_vars=None, levels=None):
        self.base_vars = tuple(base_vars) if base_vars else ()
        self.levels = list(levels) if levels else []

    # -- base field helpers --------------------------------------------------

    def base_scalar(self, x):
        if self.base_vars:
            if isinstance(x, RatFunc):
                return x
            if isinstance(x, MPoly):
                return RatFunc(x)
            if isinstance(x, (int, Fraction)):
                return RatFunc.const(x)
        else:
            if isinstance(x, (int,)):
                return Fraction(x)
            if isinstance(x, Fraction):
                return x
            if isinstance(x, MPoly) and x.is_constant():
                return x.constant()
            if isinstance(x, RatFunc) and x.is_constant():
                return x.constant()
        raise IllFormed(f"cannot coerce {x!r} into the base field")

    def _zero_node(self, depth):
        if depth == 0:
            return self.base_scalar(0)
        return (self._zero_node(depth - 1), self._zero_node(depth - 1))

    def _embed(self, node, from_depth, to_depth):
        while from_depth < to_depth:
            node = (node, self._zero_node(from_depth))
            from_depth += 1
        return node

    @property
    def depth(self):
        return len(self.levels)

    def degree(self):
        return 1 << self.depth

    # -- element constructors -------------------------------------------------

    def from_base(self, x):
        return TowerElem(self, self._embed(self.base_scalar(x), 0, self.depth))

    def zero(self):
        return TowerElem(self, self._zero_node(self.depth))

    def one(self):
        return self.from_base(1)

    def gen(self, k):
        """The radical (or omega) adjoined at level k (0-based)."""
        if not 0 <= k < self.depth:
            raise IllFormed(f"level {k} out of range")
        node = (self._zero_node(k), self._embed(self.base_scalar(1), 0, k))
        return TowerElem(self, self._embed(node, k + 1, self.depth))

    def gen_by_name(self, name):
        for k, lv in enumerate(self.levels):
            if lv.name == name:
                return self.gen(k)
        raise IllFormed(f"no level named {name}")

    def is_prefix_of(self, other):
        if self.base_vars != other.base_vars:
            return False
        if len(self.levels) > len(other.levels):
            return False
        return all(a == b for a, b in zip(self.levels, other.levels))

    def __eq__(self, other):
        return (isinstance(other, Tower) and self.base_vars == other.base_vars
                and self.levels == other.levels)

    def __repr__(self):
        base = "Q" + (f"({','.join(self.base_vars)})" if self.base_vars else "")
        names = [lv.name for lv in self.levels]
        return f"Tower({base}; {', '.join(names) if names else 'trivial'})"


def adjoin(tower, radicand, name=None):
    """New tower one square-root level deeper; radicand must be nonzero."""
    if isinstance(radicand, TowerElem):
        if not radicand.tower.is_prefix_of(tower) and radicand.tower != tower:
            raise IllFormed("radicand from an unrelated tower")
        node = tower._embed(radicand.node, radicand.tower.depth, tower.depth) \
            if radicand.tower.depth < tower.depth else radicand.node
    else:
        node = tower._embed(tower.base_scalar(radicand), 0, tower.depth)
    if _node_is_zero(node, tower.depth):
        raise IllFormed("zero radicand")
    name = name or f"r{tower.depth}"
    return Tower(tower.base_vars, tower.levels + [_Level("sqrt", node, name)])


def adjoin_omega(tower, name="w"):
    if any(lv.kind == "omega" for lv in tower.levels):
        raise IllFormed("omega already adjoined")
    return Tower(tower.base_vars, tower.levels + [_Level("omega", None, name)])


# -- node arithmetic ------------------------------------------------------------

def _node_is_zero(node, depth):
    if depth == 0:
        return not node
    return _node_is_zero(node[0], depth - 1) and _node_is_zero(node[1], depth - 1)


def _node_add(a, b, depth):
    if depth == 0:
        return a + b
    return (_node_add(a[0], b[0], depth - 1), _node_add(a[1], b[1], depth - 1))


def _node_neg(a, depth):
    if depth == 0:
        return -a
    return (_node_neg(a[0], depth - 1), _node_neg(a[1], depth - 1))


def _node_mul(tower, a, b, depth):
    if depth == 0:
        return a * b
    lv = tower.levels[depth - 1]
    a0, a1 = a
    b0, b1 = b
    d = depth - 1
    lo = _node_mul(tower, a0, b0, d)
    cross = _node_add(_node_mul(tower, a0, b1, d), _node_mul(tower, a1, b0, d), d)
    hihi = _node_mul(tower, a1, b1, d)
    if lv.kind == "sqrt":
        return (_node_add(lo, _node_mul(tower, hihi, lv.radicand, d), d), cross)
    # omega: w^2 = -1 - w
    return (_node_add(lo, _node_neg(hihi, d), d),
            _node_add(cross, _node_neg(hihi, d), d))


def _node_inv(tower, a, depth):
    if depth == 0:
        if not a:
            raise DivByZero("inverse of zero in tower base")
        if isinstance(a, Fraction):
            return Fraction(1) / a
        return RatFunc.const(1) / a
    a0, a1 = a
    d = depth - 1
    lv = tower.levels[depth - 1]
    if lv.kind == "sqrt":
        # (a0 + a1 s)^-1 = (a0 - a1 s)/(a0^2 - a1^2 r)
        den = _node_add(_node_mul(tower, a0, a0, d),
                        _node_neg(_node_mul(tower, _node_mul(tower, a1, a1, d),
                                            lv.radicand, d), d), d)
        inv_den = _node_inv(tower, den, d)
        return (_node_mul(tower, a0, inv_den, d),
                _node_neg(_node_mul(tower, a1, inv_den, d), d))
    # omega: conjugate is a0 - a1 - a1 w, norm = a0^2 - a0 a1 + a1^2
    den = _node_add(_node_mul(tower, a0, a0, d),
                    _node_add(_node_neg(_node_mul(tower, a0, a1, d), d),
                              _node_mul(tower, a1, a1, d), d), d)
    inv_den = _node_inv(tower, den, d)
    conj0 = _node_add(a0, _node_neg(a1, d), d)
    return (_node_mul(tower, conj0, inv_den, d),
            _node_neg(_node_mul(tower, a1, inv_den, d), d))


class TowerElem:
    """Element of a Tower, stored as nested (lo, hi) coordinate pairs."""

    __slots__ = ("tower", "node")

    def __init__(self, tower, node):
        self.tower = tower
        self.node = node

    # -- coercion ------------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, TowerElem):
            if other.tower == self.tower:
                return self, other
            if other.tower.is_prefix_of(self.tower):
                node = self.tower._embed(other.node, other.tower.depth,
                                         self.tower.depth)
                return self, TowerElem(self.tower, node)
            if self.tower.is_prefix_of(other.tower):
                node = other.tower._embed(self.node, self.tower.depth,
                                          other.tower.depth)
                return TowerElem(other.tower, node), other
            raise IllFormed("elements of incompatible towers")
        if isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return self, self.tower.from_base(other)
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return TowerElem(a.tower, _node_add(a.node, b.node, a.tower.depth))

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.tower, _node_neg(self.node, self.tower.depth))

    def __sub__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return TowerElem(a.tower, _node_mul(a.tower, a.node, b.node, a.tower.depth))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivByZero("inverse of zero tower element")
        return TowerElem(self.tower, _node_inv(self.tower, self.node, self.tower.depth))

    def __truediv__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_zero(self):
        return _node_is_zero(self.node, self.tower.depth)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return (a - b).is_zero()

    def __hash__(self):
        return hash(repr(self.flat_coords()))

    # -- coordinates -----------------------------------------------------------

    def flat_coords(self):
        """Base coordinates; index bit k set means level-k radical present."""
        out = []

        def walk(node, depth):
            if depth == 0:
                out.append(node)
                return
            walk(node[0], depth - 1)
            walk(node[1], depth - 1)

        walk(self.node, self.tower.depth)
        return out

    @classmethod
    def from_flat_coords(cls, tower, coords):
        coords = [tower.base_scalar(c) for c in coords]
        if len(coords) != tower.degree():
            raise IllFormed("coordinate count must equal tower degree")

        def build(cs, depth):
            if depth == 0:
                return cs[0]
            half = len(cs) // 2
            return (build(cs[:half], depth - 1), build(cs[half:], depth - 1))

        return cls(tower, build(coords, tower.depth))

    def base_part(self):
        return self.flat_coords()[0]

    def is_base(self):
        return all(not c for c in self.flat_coords()[1:])

    def __repr__(self):
        names = ["1"]
        for k, lv in enumerate(self.tower.levels):
            names = names + [f"{n}*{lv.name}" if n != "1" else lv.name for n in names]
        bits = []
        for c, n in zip(self.flat_coords(), names):
            if c:
                bits.append(f"({c})" if n == "1" else f"({c})*{n}")
        return " + ".join(bits) if bits else "0"


# -- spec operations -------------------------------------------------------------

def eval_poly(f, bindings):
    """Exact evaluation of an MPoly at TowerElem values (all variables bound)."""
    live = sorted(f.used_vars())
    for v in live:
        if v not in bindings:
            raise IllFormed(f"unbound variable {v}")
    return f.eval_field(bindings)


def minimal_poly_check(elem, f):
    """True iff the univariate f vanishes exactly at elem."""
    live = sorted(f.used_vars())
    if len(live) != 1:
        raise IllFormed("minimal_poly_check needs a univariate polynomial")
    val = f.eval_field({live[0]: elem})
    if isinstance(val, TowerElem):
        return val.is_zero()
    return not val


def fraction_sqrt(q):
    """Exact square root of a nonnegative Fraction, or None."""
    if q < 0:
        return None
    n = math.isqrt(q.numerator)
    d = math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def mpoly_sqrt(p):
    """Exact square root of an MPoly if it is a perfect square, else None."""
    if p.is_zero():
        return p
    if p.is_constant():
        r = fraction_sqrt(p.constant())
        return MPoly.const(r, p.vars) if r is not None else None
    lexp, lc = p.leading_term()
    if any(e % 2 for e in lexp):
        return None
    rc = fraction_sqrt(lc)
    if rc is None:
        return None
    s = MPoly(p.vars, {tuple(e // 2 for e in lexp): rc})
    rem = p - s * s
    twol = 2 * MPoly(p.vars, {tuple(e // 2 for e in lexp): rc})
    guard = 0
    while not rem.is_zero():
        guard += 1
        if guard > len(p.terms) * 4 + 16:
            return None
        rexp, rcoef = rem.leading_term()
        sexp, scoef = twol.leading_term()
        dexp = tuple(a - b for a, b in zip(rexp, sexp))
        if any(e < 0 for e in dexp):
            return None
        t = MPoly(p.vars, {dexp: rcoef / scoef})
        s = s + t
        rem = p - s * s
    return s


def ratfunc_sqrt(r):
    """Exact square root of a RatFunc, or None."""
    num = mpoly_sqrt(r.num)
    den = mpoly_sqrt(r.den)
    if num is None or den is None:
        return None
    return RatFunc(num, den)


def try_sqrt(elem):
    """Square root of a tower element when it is a recognizable square."""
    if isinstance(elem, TowerElem):
        if elem.is_zero():
            return elem
        if elem.is_base():
            b = elem.base_part()
            s = _base_sqrt(b)
            if s is not None:
                return elem.tower.from_base(s)
        return None
    return _base_sqrt(elem)


def _base_sqrt(b):
    if isinstance(b, (int,)):
        b = Fraction(b)
    if isinstance(b, Fraction):
        return fraction_sqrt(b)
    if isinstance(b, RatFunc):
        return ratfunc_sqrt(b)
    return None


def _synth_div(poly, root):
    """poly / (x - root) assuming root is a root; FieldPoly in, FieldPoly out."""
    q = [Fraction(0)] * poly.degree()
    acc = Fraction(0)
    for k in range(poly.degree(), 0, -1):
        acc = acc * root + poly.coeffs[k]
        q[k - 1] = acc
    return FieldPoly(q)


def _rational_roots(coeffs):
    """All rational roots (with multiplicity) from Fraction coefficients."""
    den = 1
    for x in coeffs:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in coeffs]
    poly = FieldPoly([Fraction(c) for c in ints])
    roots = []
    while poly.degree() >= 1 and not poly.coeffs[0]:
        roots.append(Fraction(0))
        poly = FieldPoly(poly.coeffs[1:])
    if poly.degree() < 1:
        return roots
    cands = set()
    for pdiv in _divisors(int(poly.coeffs[0])):
        for qdiv in _divisors(int(poly.coeffs[-1])):
            cands.add(Fraction(pdiv, qdiv))
            cands.add(Fraction(-pdiv, qdiv))
    for cand in sorted(cands):
        while poly.degree() >= 1 and not poly(cand):
            roots.append(cand)
            poly = _synth_div(poly, cand)
    return roots


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def quartic_roots(p, q, r, tower, resolvent_roots=None):
    """Roots of x^4 + p x^2 + q x + r via the resolvent cubic.

    Returns (roots, thetas, tower_out).  The four roots are
    (±s1 ± s2 ± s3)/2 with an even number of minus signs, s_i^2 = -theta_i
    and s1 s2 s3 = -q; towers grow by at most two square-root levels.
    Resolvent roots may be supplied; otherwise a rational split is attempted
    (NeedsCubicSplit if neither applies).
    """
    p = p if isinstance(p, TowerElem) else tower.from_base(p)
    q = q if isinstance(q, TowerElem) else tower.from_base(q)
    r = r if isinstance(r, TowerElem) else tower.from_base(r)
    res_c = [q * q, p * p - 4 * r, -2 * p, tower.one()]  # y^3 -2p y^2 + (p^2-4r)y + q^2
    if resolvent_roots is None:
        if tower.depth == 0 and not tower.base_vars:
            cs = [c.base_part() for c in res_c]
            roots = _rational_roots(cs)
            if len(roots) != 3:
                raise NeedsCubicSplit("resolvent does not split rationally")
            resolvent_roots = [tower.from_base(x) for x in roots]
        else:
            raise NeedsCubicSplit("resolvent roots must be supplied")
    thetas = []
    for th in resolvent_roots:
        th = th if isinstance(th, TowerElem) else tower.from_base(th)
        thetas.append(th)
    resolvent = FieldPoly([c for c in res_c])
    for th in thetas:
        val = resolvent(th)
        if val:
            raise IllFormed("supplied resolvent root fails the cubic")

    t = tower
    s = []
    for k, th in enumerate(thetas[:2]):
        target = -(th if th.tower == t else TowerElem(t, t._embed(
            th.node, th.tower.depth, t.depth)))
        got = try_sqrt(target)
        if got is None:
            t = adjoin(t, target, name=f"s{k + 1}")
            got = t.gen(t.depth - 1)
        s.append(got)
    # lift everything into the final tower
    def lift(e):
        if e.tower == t:
            return e
        return TowerElem(t, t._embed(e.node, e.tower.depth, t.depth))

    s = [lift(x) for x in s]
    pq = [lift(p if isinstance(p, TowerElem) else t.from_base(p)),
          lift(q), lift(r)]
    p, q, r = pq
    th3 = lift(thetas[2])
    if q and s[0] and s[1]:
        s3 = -q / (s[0] * s[1])
        if s3 * s3 != -th3:
            raise IllFormed("resolvent roots inconsistent with the quartic")
    else:
        s3 = try_sqrt(-th3)
        if s3 is None:
            t = adjoin(t, -th3, name="s3")
            s3 = t.gen(t.depth - 1)
            s = [lift(x) for x in s]
            p, q, r = lift(p), lift(q), lift(r)
            th3 = lift(th3)
        s3 = s3 if s3.tower == t else lift(s3)
    s1, s2 = s
    half = Fraction(1, 2)
    quartic = FieldPoly([r, q, p, t.zero(), t.one()])

    def make_roots(u3):
        return [(s1 + s2 + u3) * half, (s1 - s2 - u3) * half,
                (-s1 + s2 - u3) * half, (-s1 - s2 + u3) * half]

    roots = make_roots(s3)
    if any(quartic(x) for x in roots):
        roots = make_roots(-s3)  # q = 0 leaves the s3 branch free
        if any(quartic(x) for x in roots):
            raise IllFormed("computed roots fail the quartic")
    return roots, [lift(th) if th.tower != t else th for th in thetas], t
