"""Span set and rank space of an r-vector.

``S_B`` collects the probe vectors ``~e_K << B``; its rank lies between
``r`` and ``n`` and equals ``r`` exactly for blades. The rank space
``V_B = {x : x ^ B = 0}`` has dimension ``r`` exactly for blades.
"""

from __future__ import annotations

from fractions import Fraction

from bladekit.algebra.blades import coordinate_blades
from bladekit.algebra.linalg import exact_nullspace, exact_rank
from bladekit.algebra.multivector import Multivector, outer_product, require_rvector
from bladekit.core.models import RankSpace
from bladekit.plucker.relations import probe_vector


def span_set(b: Multivector, r: int) -> list[Multivector]:
    """Nonzero probe vectors ``~e_K << B`` in lexicographic ``K`` order.

    Examples
    --------
    >>> from bladekit.cli.expression import parse_multivector
    >>> [str(v) for v in span_set(parse_multivector("e12 + e13", 3), 2)]
    ['e2 + e3', '-e1', '-e1']
    """
    require_rvector(b, r)
    out = []
    for k in coordinate_blades(b.dimension, r - 1):
        v = probe_vector(b, k)
        if not v.is_zero():
            out.append(v)
    return out


def span_rank(b: Multivector, r: int) -> int:
    """Number of linearly independent vectors in :func:`span_set`."""
    vectors = span_set(b, r)
    return exact_rank([v.vector_coefficients() for v in vectors], b.dimension)


def rank_space(b: Multivector, r: int) -> RankSpace:
    """Solve ``x ^ B = 0`` for vectors ``x``.

    Column ``i`` of the system holds the coefficients of ``e_i ^ B``; there
    is one row per coordinate (r+1)-blade that occurs.

    Returns
    -------
    RankSpace
        Nullspace dimension and a primitive integer basis.
    """
    require_rvector(b, r)
    n = b.dimension
    rows: dict[int, list[Fraction]] = {}
    for i in range(n):
        column = outer_product(Multivector.basis_vector(n, i + 1), b)
        for mask, coeff in column.masks.items():
            rows.setdefault(mask, [Fraction(0)] * n)[i] = coeff
    basis = exact_nullspace([rows[m] for m in sorted(rows)], n)
    return RankSpace(
        dimension=len(basis),
        basis=tuple(Multivector.vector(n, vec) for vec in basis),
    )
