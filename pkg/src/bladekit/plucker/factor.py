"""Divisibility and blade factorization.

A nonzero r-vector ``B`` is divisible by a k-blade ``L`` when ``LB`` is
homogeneous of grade ``r - k``; then ``B = L (L << B) / L^2``. Once the
Plücker relations hold, any nonzero pivot coefficient ``B_J`` yields the
factorization ``B = c (v_1 ^ ... ^ v_r)`` with ``v_i = e_(J - j_i) << B``.
The scale ``c`` is fixed by comparing pivot coefficients and the result is
always checked by exact reconstruction.
"""

from __future__ import annotations

from fractions import Fraction

from bladekit.algebra.blades import BasisBladeIndex, coordinate_blades
from bladekit.algebra.multivector import (
    Multivector,
    geometric_product,
    left_contraction,
    outer_product,
    require_rvector,
)
from bladekit.core.errors import (
    DivisibilityError,
    FactorizationError,
    GradeError,
    NotABladeError,
)
from bladekit.core.models import Factorization
from bladekit.plucker.relations import plucker_check, probe_vector


def is_divisible(b: Multivector, k: Multivector) -> bool:
    """True iff ``KB`` is homogeneous of grade ``grade(B) - grade(K)``.

    *k* is assumed to be a blade; only its homogeneity is checked.

    Raises
    ------
    GradeError
        If either input is zero or not homogeneous, or ``grade(K) > grade(B)``.
    """
    r = b.homogeneous_grade()
    s = k.homogeneous_grade()
    if r is None:
        raise GradeError("dividend must be a nonzero homogeneous multivector")
    if s is None:
        raise GradeError("divisor must be a nonzero homogeneous multivector")
    if s > r:
        raise GradeError(f"divisor grade {s} exceeds dividend grade {r}")
    return geometric_product(k, b).grades() == {r - s}


def divide(b: Multivector, divisor: Multivector) -> Multivector:
    """Quotient ``Q = (divisor << B) / divisor^2``, so that ``divisor * Q = B``.

    Raises
    ------
    DivisibilityError
        If *b* is not divisible by *divisor*, ``divisor^2`` is not a nonzero scalar, or
        the quotient fails the ``divisor * Q = B`` check (e.g. *divisor* is not a blade).

    Examples
    --------
    >>> from bladekit.cli.expression import parse_multivector as p
    >>> str(divide(p("e123", 3), p("e12", 3)))
    'e3'
    """
    if not is_divisible(b, divisor):
        raise DivisibilityError(f"{b} is not divisible by {divisor}")
    sq = geometric_product(divisor, divisor)
    l2 = sq.scalar_part()
    if sq != sq.grade(0) or not l2:
        raise DivisibilityError(f"divisor square {sq} is not a nonzero scalar")
    q = left_contraction(divisor, b).scale(1 / l2)
    if geometric_product(divisor, q) != b:
        raise DivisibilityError(f"quotient check failed; is {divisor} a blade?")
    return q


def vector_divisors(b: Multivector, r: int) -> list[tuple[BasisBladeIndex, Multivector]]:
    """Coordinate (r-1)-blades whose probe vector divides ``B``.

    Each vector ``~e_K << B`` with ``(~e_K << B) ^ B = 0`` divides ``B``.
    """
    require_rvector(b, r)
    out = []
    for k in coordinate_blades(b.dimension, r - 1):
        v = probe_vector(b, k)
        if not v.is_zero() and is_divisible(b, v):
            out.append((k, v))
    return out


def factorize(b: Multivector, r: int) -> Factorization:
    """Factor an r-blade into ``scale * (v_1 ^ ... ^ v_r)``.

    Parameters
    ----------
    b : Multivector
        Nonzero homogeneous r-vector.
    r : int
        Its grade.

    Returns
    -------
    Factorization
        Scale, factor vectors and pivot; ``scale * wedge == b`` exactly.

    Raises
    ------
    NotABladeError
        If a Plücker relation fails; carries the failing report.
    FactorizationError
        If the reconstruction check fails (an internal fault).
    """
    require_rvector(b, r)
    n = b.dimension
    pivot, coeff = next(b.items())
    if r == 1:
        return Factorization(Fraction(1), (b,), pivot)
    if r == n:
        vectors = tuple(Multivector.basis_vector(n, i) for i in range(1, n + 1))
        return Factorization(coeff, vectors, pivot)

    report = plucker_check(b, r)
    if not report.passed:
        raise NotABladeError(report)

    vectors = tuple(
        left_contraction(
            Multivector.blade(n, BasisBladeIndex(tuple(i for i in pivot.indices if i != j))),
            b,
        )
        for j in pivot.indices
    )
    wedge = vectors[0]
    for v in vectors[1:]:
        wedge = outer_product(wedge, v)
    w_pivot = wedge.coefficient(pivot)
    if not w_pivot:
        raise FactorizationError(f"factor wedge vanishes at pivot {pivot}")
    result = Factorization(coeff / w_pivot, vectors, pivot)
    if result.reconstruct() != b:
        raise FactorizationError(f"reconstruction of {b} failed")
    return result
