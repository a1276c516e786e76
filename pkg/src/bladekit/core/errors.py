"""Exception types raised by bladekit.

Everything caused by bad input derives from :class:`ValueError`, so callers
(and the CLI) can treat it as a usage error. :class:`FactorizationError` is
the only hard fault.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from bladekit.core.models import CheckReport


class DimensionMismatchError(ValueError):
    """Operands live in geometric algebras of different dimension."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"dimension mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class GradeError(ValueError):
    """Input is zero, not homogeneous, or of the wrong grade."""


class DivisibilityError(ValueError):
    """A multivector is not divisible by the requested blade."""


class NotABladeError(ValueError):
    """An r-vector failed a decomposability criterion.

    Parameters
    ----------
    report : CheckReport
        The failing report, including the witness (r-1)-blade and residual.
    """

    def __init__(self, report: CheckReport) -> None:
        witness = report.witness_k.label() if report.witness_k is not None else "?"
        super().__init__(f"not a blade (witness K={witness})")
        self.report = report


class ExpressionSyntaxError(ValueError):
    """Malformed multivector expression.

    Parameters
    ----------
    message : str
        Description of the problem.
    offset : int
        Byte offset into the source text where the problem was detected.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class FactorizationError(RuntimeError):
    """A factorization failed its exact reconstruction check."""
