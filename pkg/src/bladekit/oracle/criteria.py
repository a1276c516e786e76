"""Named decomposability criteria for sweeps and the CLI."""

from __future__ import annotations

from bladekit.algebra.multivector import Multivector
from bladekit.core.models import CheckReport
from bladekit.core.protocols import BladeCriterion
from bladekit.oracle.blade_oracle import RankSpaceOracle
from bladekit.plucker.nguyen import nguyen_check
from bladekit.plucker.rank import span_rank
from bladekit.plucker.relations import plucker_check


class PluckerCriterion:
    """Coordinate Plücker relations ``(e_K << B) ^ B = 0``."""

    name = "plucker"

    def check(self, b: Multivector, r: int) -> CheckReport:
        return plucker_check(b, r)

    def is_blade(self, b: Multivector, r: int) -> bool:
        return self.check(b, r).passed


class NguyenCriterion:
    """``B^2`` scalar and ``BvB`` a vector for every probe vector."""

    name = "nguyen"

    def check(self, b: Multivector, r: int) -> CheckReport:
        return nguyen_check(b, r)

    def is_blade(self, b: Multivector, r: int) -> bool:
        return self.check(b, r).passed


class SpanRankCriterion:
    """Span set of rank exactly ``r``."""

    name = "span"

    def is_blade(self, b: Multivector, r: int) -> bool:
        return span_rank(b, r) == r


CRITERIA: dict[str, BladeCriterion] = {
    c.name: c
    for c in (PluckerCriterion(), NguyenCriterion(), SpanRankCriterion(), RankSpaceOracle())
}
"""Criterion registry keyed by name, in evaluation order."""
