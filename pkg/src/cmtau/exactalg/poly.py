"""Sparse multivariate polynomials over Q and their quotients.

An MPoly is a map from exponent vectors to nonzero Fraction coefficients,
together with an ordered tuple of variable names.  Internal canonical form
uses graded lexicographic order over the declared variable sequence; the
order affects nothing but tie-breaking in leading-term queries.

A RatFunc is a reduced quotient num/den of two MPoly over a common variable
set.  Normalization: gcd(num, den) = 1 after content removal, and den is an
integer-primitive polynomial with positive leading coefficient.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as igcd

from ..errors import IllFormed, NotDivisible, PoleEverywhere

_VAR_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


def check_varname(name):
    if not isinstance(name, str) or not _VAR_RE.match(name):
        raise IllFormed(f"bad variable name: {name!r}")
    return name


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise IllFormed(f"coefficient must be rational, got {type(c).__name__}")


def _grlex_key(exp):
    return (sum(exp), exp)


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        for v in variables:
            check_varname(v)
        if len(set(variables)) != len(variables):
            raise IllFormed(f"duplicate variable in {variables}")
        clean = {}
        n = len(variables)
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise IllFormed(f"bad exponent vector {exp} for {variables}")
            c = _as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.vars = variables
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables=()):
        return cls(variables, {})

    @classmethod
    def const(cls, c, variables=()):
        variables = tuple(variables)
        c = _as_fraction(c)
        if not c:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name, variables=None):
        if variables is None:
            variables = (name,)
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: Fraction(1)})

    @classmethod
    def from_dense(cls, coeffs, v):
        """Univariate polynomial from a little-endian coefficient list."""
        return cls((v,), {(i,): _as_fraction(c) for i, c in enumerate(coeffs) if c})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant(self):
        """The constant Fraction of a constant polynomial."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise IllFormed("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, v):
        i = self.vars.index(v)
        return max((e[i] for e in self.terms), default=-1)

    def leading_term(self):
        """(exponent, coeff) maximal in grlex order; error on zero."""
        if not self.terms:
            raise IllFormed("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def coeff_of(self, v, k):
        """Coefficient of v**k, an MPoly in the same variable set."""
        i = self.vars.index(v)
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                e2 = exp[:i] + (0,) + exp[i + 1:]
                out[e2] = c
        return MPoly(self.vars, out)

    def to_dense(self, v):
        """Little-endian list of MPoly coefficients with respect to v."""
        d = self.degree(v)
        return [self.coeff_of(v, k) for k in range(d + 1)]

    def used_vars(self):
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(self.vars[i])
        return used

    # -- variable alignment ------------------------------------------------

    def with_vars(self, variables):
        """Reindex onto a superset of the current variables."""
        variables = tuple(variables)
        idx = []
        for v in self.vars:
            if v not in variables:
                if self.degree(v) > 0:
                    raise IllFormed(f"cannot drop live variable {v}")
                idx.append(None)
            else:
                idx.append(variables.index(v))
        n = len(variables)
        out = {}
        for exp, c in self.terms.items():
            e2 = [0] * n
            for i, e in enumerate(exp):
                if e:
                    e2[idx[i]] = e
            out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c
        return MPoly(variables, out)

    @staticmethod
    def union_vars(*polys):
        seen = set()
        for p in polys:
            seen.update(p.vars)
        return tuple(sorted(seen))

    def _aligned(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented, NotImplemented
        if self.vars == other.vars:
            return self, other
        u = MPoly.union_vars(self, other)
        return self.with_vars(u), other.with_vars(u)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._aligned(other)
        if a is NotImplemented:
            return NotImplemented
        out = dict(a.terms)
        for exp, c in b.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._aligned(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return MPoly.zero(self.vars)
            return MPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        a, b = self._aligned(other)
        if a is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly(a.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise IllFormed("negative power of a polynomial")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division of MPoly by zero scalar")
            return self * (Fraction(1) / c)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant() == other
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        # hash over live variables only, so x+0*y hashes like x
        live = tuple(sorted(self.used_vars()))
        p = self.with_vars(live) if live != self.vars else self
        return hash((live, frozenset(p.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / evaluation ---------------------------------------------

    def derivative(self, v):
        i = self.vars.index(v)
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                e2 = exp[:i] + (e - 1,) + exp[i + 1:]
                out[e2] = out.get(e2, Fraction(0)) + c * e
        return MPoly(self.vars, out)

    def subs_poly(self, bindings):
        """Substitute MPoly/scalar values for variables; returns MPoly."""
        vals = {}
        for v, val in bindings.items():
            if v not in self.vars:
                raise IllFormed(f"variable {v} not in {self.vars}")
            vals[v] = val if isinstance(val, MPoly) else MPoly.const(val)
        result = None
        for exp, c in self.terms.items():
            term = MPoly.const(c)
            for i, e in enumerate(exp):
                if not e:
                    continue
                v = self.vars[i]
                base = vals.get(v, MPoly.var(v))
                term = term * base ** e
            result = term if result is None else result + term
        if result is None:
            return MPoly.zero(())
        return result

    def eval_field(self, bindings):
        """Evaluate with all variables bound to elements of any common field."""
        result = None
        for exp, c in self.terms.items():
            term = None
            for i, e in enumerate(exp):
                if not e:
                    continue
                p = bindings[self.vars[i]] ** e
                term = p if term is None else term * p
            term = c if term is None else term * c
            result = term if result is None else result + term
        if result is None:
            return Fraction(0)
        return result

    # -- integer structure ---------------------------------------------------

    def content(self):
        """Rational content: positive Fraction c with self = c * primitive."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = igcd(num, abs(c.numerator))
            den = den * c.denominator // igcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_part(self):
        """Integer-primitive part with positive grlex leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        p = self * (1 / c)
        if p.leading_term()[1] < 0:
            p = -p
        return p

    def map_coeffs(self, fn):
        return MPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    # -- display -------------------------------------------------------------

    def __repr__(self):
        return f"MPoly({self.format()!r})"

    def format(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exp)
                if e
            )
            if mono:
                cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                bits.append(f"{cs}{mono}")
            else:
                bits.append(str(c))
        s = " + ".join(bits).replace("+ -", "- ")
        return s


def exact_divide(f, g):
    """Return q with f = q*g exactly; raise NotDivisible otherwise."""
    if isinstance(f, (int, Fraction)):
        f = MPoly.const(f)
    if isinstance(g, (int, Fraction)):
        g = MPoly.const(g)
    if g.is_zero():
        raise IllFormed("division by the zero polynomial")
    u = MPoly.union_vars(f, g)
    f = f.with_vars(u)
    g = g.with_vars(u)
    q = {}
    rem = dict(f.terms)
    gexp, gc = g.leading_term()
    while rem:
        rexp = max(rem, key=_grlex_key)
        rc = rem[rexp]
        qexp = tuple(a - b for a, b in zip(rexp, gexp))
        if any(e < 0 for e in qexp):
            raise NotDivisible("leading monomial not divisible",
                               remainder=MPoly(u, rem))
        qc = rc / gc
        q[qexp] = qc
        for e2, c2 in g.terms.items():
            e = tuple(x + y for x, y in zip(qexp, e2))
            s = rem.get(e, Fraction(0)) - qc * c2
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return MPoly(u, q)


def divides(g, f):
    try:
        exact_divide(f, g)
        return True
    except NotDivisible:
        return False


# -- gcd ---------------------------------------------------------------------

def _gcd_univariate_int(a, b):
    """GCD of primitive integer coefficient lists (little-endian)."""

    def strip(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def content(p):
        g = 0
        for c in p:
            g = igcd(g, abs(c))
        return g or 1

    def prim(p):
        c = content(p)
        return [x // c for x in p]

    a = prim(strip(list(a)))
    b = prim(strip(list(b)))
    if not a:
        return b
    if not b:
        return a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        db, lb = len(b) - 1, b[-1]
        while len(r) - 1 >= db and any(r):
            dr = len(r) - 1
            if r[-1] == 0:
                r.pop()
                continue
            lr = r[-1]
            g = igcd(lr, lb)
            mul_r, mul_b = lb // g, lr // g
            r = [c * mul_r for c in r]
            shift = dr - db
            for i, c in enumerate(b):
                r[shift + i] -= mul_b * c
            r = strip(r)
        a, b = b, prim(strip(r))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def mpoly_gcd(f, g):
    """GCD of two MPoly, integer-primitive with positive leading coefficient."""
    if f.is_zero():
        return g.primitive_part()
    if g.is_zero():
        return f.primitive_part()
    u = MPoly.union_vars(f, g)
    f = f.with_vars(u).primitive_part()
    g = g.with_vars(u).primitive_part()
    live = sorted(f.used_vars() | g.used_vars())
    if not live:
        return MPoly.const(1, u)
    if len(live) == 1:
        v = live[0]
        i = u.index(v)
        fa = [0] * (f.degree(v) + 1)
        for exp, c in f.terms.items():
            fa[exp[i]] = int(c)
        ga = [0] * (g.degree(v) + 1)
        for exp, c in g.terms.items():
            ga[exp[i]] = int(c)
        h = _gcd_univariate_int(fa, ga)
        exp0 = [0] * len(u)
        terms = {}
        for k, c in enumerate(h):
            if c:
                e = list(exp0)
                e[i] = k
                terms[tuple(e)] = Fraction(c)
        return MPoly(u, terms)
    # multivariate: recurse on the variable of smallest combined degree
    v = min(live, key=lambda w: f.degree(w) + g.degree(w))
    fc = [c for c in f.to_dense(v)]
    gc = [c for c in g.to_dense(v)]
    cont_f = _coeff_gcd(fc)
    cont_g = _coeff_gcd(gc)
    cont = mpoly_gcd(cont_f, cont_g)
    fp = exact_divide(f, cont_f)
    gp = exact_divide(g, cont_g)
    h = _prs_gcd(fp, gp, v)
    h = exact_divide(h, _coeff_gcd(h.to_dense(v)))
    return (cont * h).primitive_part()


def _coeff_gcd(coeffs):
    g = MPoly.zero(())
    for c in coeffs:
        if not c.is_zero():
            g = mpoly_gcd(g, c)
    if g.is_zero():
        raise IllFormed("zero polynomial has no coefficient gcd")
    return g


def pseudo_rem(f, g, v):
    """Pseudo-remainder prem(f, g) with respect to v (no scaling fixups)."""
    df, dg = f.degree(v), g.degree(v)
    if dg < 0:
        raise IllFormed("pseudo-division by zero")
    if df < dg:
        return f
    lg = g.coeff_of(v, dg)
    r = f
    x = MPoly.var(v, f.vars) if v in f.vars else MPoly.var(v)
    while True:
        dr = r.degree(v)
        if dr < dg or r.is_zero():
            return r
        lr = r.coeff_of(v, dr)
        r = r * lg - g * lr * x ** (dr - dg)


def _prs_gcd(f, g, v):
    if f.degree(v) < g.degree(v):
        f, g = g, f
    while not g.is_zero():
        r = pseudo_rem(f, g, v)
        if not r.is_zero():
            r = exact_divide(r, _coeff_gcd(r.to_dense(v)))
        f, g = g, r
    return f


# -- RatFunc -------------------------------------------------------------------

class RatFunc:
    """Reduced quotient of two MPoly over a common variable set."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = MPoly.const(num)
        if den is None:
            den = MPoly.const(1, num.vars)
        if isinstance(den, (int, Fraction)):
            den = MPoly.const(den, num.vars)
        if den.is_zero():
            raise IllFormed("zero denominator")
        u = MPoly.union_vars(num, den)
        num = num.with_vars(u)
        den = den.with_vars(u)
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num, den):
        if num.is_zero():
            return num, MPoly.const(1, num.vars)
        g = mpoly_gcd(num, den)
        if not (g.is_constant() and g.constant() == 1):
            num = exact_divide(num, g)
            den = exact_divide(den, g)
        # den integer-primitive with positive leading coefficient
        c = den.content()
        if den.leading_term()[1] < 0:
            c = -c
        if c != 1:
            num = num * (1 / c)
            den = den * (1 / c)
        return num, den

    @classmethod
    def var(cls, name):
        return cls(MPoly.var(name))

    @classmethod
    def const(cls, c):
        return cls(MPoly.const(c))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant(self):
        return self.num.constant() / self.den.constant()

    def is_polynomial(self):
        return self.den.is_constant()

    def as_mpoly(self):
        if not self.is_polynomial():
            raise IllFormed("denominator is not constant")
        return self.num * (1 / self.den.constant())

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc(x)
        if isinstance(x, (int, Fraction)):
            return RatFunc(MPoly.const(x))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        n, d = self.num, self.den
        c = n.content() or Fraction(1)
        return hash((hash(n * (1 / c) if c != 1 else n), hash(d), c))

    def __bool__(self):
        return not self.is_zero()

    def subs(self, bindings):
        """Simultaneous substitution of RatFunc values; result reduced."""
        vals = {}
        for v, val in bindings.items():
            if v not in self.num.vars:
                raise IllFormed(f"variable {v} not bound in {self.num.vars}")
            r = self._coerce(val)
            if r is None:
                raise IllFormed(f"cannot bind {v} to {val!r}")
            vals[v] = r
        num = _subs_mpoly_rat(self.num, vals)
        den = _subs_mpoly_rat(self.den, vals)
        if den.is_zero():
            raise PoleEverywhere("substituted denominator vanishes identically")
        return num / den

    def eval_field(self, bindings):
        den = self.den.eval_field(bindings)
        if not den:
            from ..errors import DivByZero
            raise DivByZero("denominator vanishes at evaluation point")
        return self.num.eval_field(bindings) * _field_inverse(den)

    def __repr__(self):
        if self.den == 1:
            return f"RatFunc({self.num.format()!r})"
        return f"RatFunc({self.num.format()!r} / {self.den.format()!r})"


def _field_inverse(x):
    if isinstance(x, Fraction):
        return Fraction(1) / x
    if isinstance(x, int):
        return Fraction(1, x)
    one = getattr(x, "one", None)
    if one is not None:
        return one() / x
    return 1 / x


def _subs_mpoly_rat(p, vals):
    """Substitute RatFunc values into an MPoly, returning a RatFunc."""
    result = RatFunc.const(0)
    for exp, c in p.terms.items():
        term = RatFunc.const(c)
        for i, e in enumerate(exp):
            if not e:
                continue
            v = p.vars[i]
            base = vals.get(v, RatFunc.var(v))
            term = term * base ** e
        result = result + term
    return result


def substitute(f, bindings):
    """Spec operation: substitution into a RatFunc (see RatFunc.subs)."""
    if isinstance(f, MPoly):
        f = RatFunc(f)
    return f.subs(bindings)


# -- SPARSE-POLY v1 text format -------------------------------------------------

def format_sparse_poly(p):
    """Serialize an MPoly in the SPARSE-POLY v1 format."""
    head = ",".join(p.vars)
    if not p.terms:
        return head + "; 0"
    bits = []
    for exp in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[exp]
        cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        parts = [cs]
        for v, e in zip(p.vars, exp):
            if e:
                parts.append(f"{v}^{e}")
        bits.append(" * ".join(parts))
    return head + "; " + " + ".join(bits)


def parse_sparse_poly(text):
    """Parse the SPARSE-POLY v1 format back into an MPoly."""
    head, _, body = text.partition(";")
    variables = tuple(v.strip() for v in head.split(",") if v.strip())
    terms = {}
    body = body.strip()
    if body in ("", "0"):
        return MPoly(variables, {})
    for chunk in body.replace("- ", "+ -").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [s.strip() for s in chunk.split("*")]
        coeff = Fraction(parts[0])
        exp = [0] * len(variables)
        for s in parts[1:]:
            if "^" in s:
                v, _, e = s.partition("^")
                exp[variables.index(v.strip())] += int(e)
            else:
                exp[variables.index(s)] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MPoly(variables, terms)
