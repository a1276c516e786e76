"""Protocol definitions for bladekit public interfaces.

Decomposability criteria implement :class:`BladeCriterion`; the trial runner
and ``bladekit check`` look them up by name in
:data:`bladekit.oracle.criteria.CRITERIA`. Criteria that can name a failing
coordinate relation also implement :class:`WitnessCriterion`.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Protocol, runtime_checkable

if TYPE_CHECKING:
    from bladekit.algebra.multivector import Multivector
    from bladekit.core.models import CheckReport


@runtime_checkable
class BladeCriterion(Protocol):
    """Interface for an r-blade decision procedure."""

    name: str

    def is_blade(self, b: Multivector, r: int) -> bool:
        """Decide whether the nonzero r-vector *b* is an r-blade.

        Parameters
        ----------
        b : Multivector
            Nonzero homogeneous multivector of grade *r*.
        r : int
            Grade of *b*.

        Returns
        -------
        bool
            The criterion's verdict.
        """
        ...


@runtime_checkable
class WitnessCriterion(BladeCriterion, Protocol):
    """A criterion that reports the coordinate blade ``K`` at which it fails."""

    def check(self, b: Multivector, r: int) -> CheckReport:
        """Full report: verdict, witness ``K``, residual and failed condition."""
        ...
