"""Exception types raised by the library.

Everything derives from :class:`InvPolyError`, which itself is a
``ValueError``, so callers that do not care about the fine-grained kind
can catch a single class.
"""


class InvPolyError(ValueError):
    """Base class for all domain errors."""


class NotInvertible(InvPolyError):
    """Exponent matrix is singular over the rationals."""


class NotIsolated(InvPolyError):
    """Polynomial (or its transpose) has a non-isolated singularity."""


class Unrecognized(InvPolyError):
    """Exponent matrix matches no two-variable atomic shape."""


class NotLogGeneralType(InvPolyError):
    """Operation requires d0 > 0; only x^2 + y^2 fails this."""


class SpecMismatch(InvPolyError):
    """Cylinder gluing data violates its size or shape constraints."""


class DegenerateForm(InvPolyError):
    """Quadratic form is degenerate, Arf invariant undefined."""


class TooLarge(InvPolyError):
    """Brute-force enumeration refused (dimension too big)."""


class GenusZero(InvPolyError):
    """Graded symplectomorphism criteria cover genus >= 1 only."""


class InsufficientRange(InvPolyError):
    """Requested check needs a larger truncation degree."""


class NotAdmissible(InvPolyError):
    """Unfolding coefficient placed on a non-admissible direction."""
