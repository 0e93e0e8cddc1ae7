"""Shared exception types.

Domain errors (bad arguments) use plain ValueError throughout the package;
the classes here are the ones callers are expected to branch on.
"""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A configurable cap (polynomial degree or enumeration count) was hit.

    Carries the cap so callers and the CLI can name it in diagnostics.
    """

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class NotPolynomialError(ArithmeticError):
    """An exact polynomial division left a nonzero remainder.

    For polynomiality tests this is a result, not a failure: the verdict
    machinery in fibl.catalan catches it.  ``remainder`` is the IntPoly
    remainder when the division was performed by long division, or None
    when a factor-by-factor division detected inexactness without
    materializing a remainder.
    """

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class DegenerateParametersError(ArithmeticError):
    """An elliptic evaluation hit a denominator below the min_denom guard
    (or exhausted its resampling budget)."""
