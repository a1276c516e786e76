"""Rank-space blade oracle.

Decides blade-ness from the dimension of ``V_B = {x : x ^ B = 0}`` alone.
The linear system is assembled straight from the term masks (``e_i ^ e_J``
is ``+-e_(J + i)`` with the sign of moving ``e_i`` past the smaller indices
of ``J``), so the oracle shares no code with the contraction-based criteria
and does not even use the multivector products.
"""

from __future__ import annotations

from fractions import Fraction

from bladekit.algebra.linalg import exact_rank
from bladekit.algebra.multivector import Multivector, require_rvector


def rank_space_dimension(b: Multivector) -> int:
    """Dimension of ``{x : x ^ B = 0}`` for a nonzero homogeneous *b*."""
    n = b.dimension
    rows: dict[int, list[Fraction]] = {}
    for mask, coeff in b.masks.items():
        for p in range(n):
            bit = 1 << p
            if mask & bit:
                continue
            below = (mask & (bit - 1)).bit_count()
            value = -coeff if below & 1 else coeff
            row = rows.setdefault(mask | bit, [Fraction(0)] * n)
            row[p] += value
    return n - exact_rank(list(rows.values()), n)


def blade_oracle(b: Multivector, r: int) -> bool:
    """True iff the nonzero r-vector *b* is an r-blade (``dim V_B == r``).

    Raises
    ------
    GradeError
        If *b* is zero or not a homogeneous r-vector.
    """
    require_rvector(b, r)
    return rank_space_dimension(b) == r


class RankSpaceOracle:
    """:class:`~bladekit.core.protocols.BladeCriterion` wrapper of :func:`blade_oracle`."""

    name = "oracle"

    def is_blade(self, b: Multivector, r: int) -> bool:
        return blade_oracle(b, r)
