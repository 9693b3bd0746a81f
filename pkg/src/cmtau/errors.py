"""Typed errors shared across the package.

Degenerate inputs are rejected early with one of these rather than being
propagated silently.
"""


class CmtauError(Exception):
    pass


class IllFormed(CmtauError):
    """Input violates a structural precondition (zero poly, bad variable, ...)."""


class NotDivisible(CmtauError):
    """Exact division failed; carries the nonzero remainder as witness."""

    def __init__(self, msg, remainder=None):
        super().__init__(msg)
        self.remainder = remainder


class PoleEverywhere(CmtauError):
    """A substitution produced an identically-zero denominator."""


class NotReciprocal(CmtauError):
    """Polynomial fails the (reverse-)reciprocal symmetry precondition."""


class DivByZero(CmtauError):
    """Division by zero during exact evaluation."""


class NotOnCurve(CmtauError):
    """Point does not satisfy the curve equation."""


class SingularFamily(CmtauError):
    """Curve model with identically vanishing discriminant."""


class NotGeneric(CmtauError):
    """g2*g3 vanishes identically; the Hasse factor is undefined."""


class Degenerate(CmtauError):
    """Cross-ratio (or similar) with vanishing denominator."""


class NeedsCubicSplit(CmtauError):
    """Resolvent cubic roots are not available in the working tower."""


class NotFound(CmtauError):
    """Unknown identity id."""
