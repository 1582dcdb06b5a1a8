"""Failure modes of the inversion methods.

Every method failure carries a machine-readable ``status`` string that the
compare/bench reports and the CLI reuse verbatim.
"""

__all__ = [
    "TridiagonalError",
    "NotApplicableError",
    "ZeroOffDiagonalError",
    "RecurrenceOverflowError",
    "SingularMatrixError",
]


class TridiagonalError(Exception):
    """Base class for inversion-method failures."""

    status = "error"


class NotApplicableError(TridiagonalError):
    """The method's preconditions do not hold for this matrix."""

    status = "not-applicable"


class ZeroOffDiagonalError(NotApplicableError):
    """The method requires the relevant off-diagonal entries to be non-zero."""


class RecurrenceOverflowError(TridiagonalError):
    """A scalar recurrence or column left the double range (non-finite value)."""

    status = "overflow"


class SingularMatrixError(TridiagonalError):
    """The matrix is singular (zero pivot, or a non-finite inverse entry)."""

    status = "singular"
