"""Exact rank and nullspace over the rationals.

Rows are cleared of denominators and handed to sympy's ``DomainMatrix`` over
``ZZ``; elimination is exact, so there is no tolerance parameter anywhere.
Nullspace basis vectors are returned as primitive integer vectors (content
one, first nonzero entry positive), which keeps them deterministic and easy
to read.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for x in row:
        den = math.lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def _primitive(row: Sequence[Fraction]) -> list[Fraction]:
    ints = _integer_row(row)
    g = math.gcd(*ints) or 1
    lead = next((x for x in ints if x), 1)
    if lead < 0:
        g = -g
    return [Fraction(x // g) for x in ints]


def _domain_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = [[ZZ(x) for x in _integer_row(row)] for row in rows]
    return DomainMatrix(data, (len(data), ncols), ZZ)


def exact_rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """Rank of the matrix whose rows are *rows*.

    Parameters
    ----------
    rows : sequence of sequence of Fraction
        Matrix rows, each of length *ncols*. May be empty.
    ncols : int
        Number of columns.

    Returns
    -------
    int
        The exact rank over the rationals.
    """
    nonzero = [r for r in rows if any(r)]
    if not nonzero:
        return 0
    return int(_domain_matrix(nonzero, ncols).rank())


def exact_nullspace(
    rows: Sequence[Sequence[Fraction]], ncols: int
) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows.

    Returns
    -------
    list of list of Fraction
        Primitive integer basis vectors (length *ncols* each). Empty when
        the matrix has full column rank.
    """
    nonzero = [r for r in rows if any(r)]
    if not nonzero:
        return [
            [Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)
        ]
    dm = _domain_matrix(nonzero, ncols)
    if dm.rank() == ncols:
        return []
    basis = dm.to_field().nullspace().to_Matrix().tolist()
    return [
        _primitive([Fraction(int(x.p), int(x.q)) for x in vec]) for vec in basis
    ]
