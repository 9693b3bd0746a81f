"""cmtau: exact verification laboratory for CM torsion-point ray class invariants."""

__version__ = "0.1.0"
