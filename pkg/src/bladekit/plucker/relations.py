"""Plücker relations of an r-vector.

An r-vector ``B`` is an r-blade iff ``(A << B) ^ B = 0`` for every
(r-1)-vector ``A``; it suffices to check the coordinate (r-1)-blades. Each
coordinate blade ``e_K`` is probed through the vector
``v_K = ~e_K << B`` (the reversed blade, matching the coefficient
convention ``B_J = B . ~e_J``), so that for ``B = e123 + e456`` and
``K = {1, 2}`` the residual is exactly ``e3 ^ B = e3456``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from bladekit.algebra.blades import BasisBladeIndex, coordinate_blades, reverse_sign
from bladekit.algebra.multivector import (
    Multivector,
    left_contraction,
    outer_product,
    require_rvector,
)
from bladekit.core.errors import GradeError
from bladekit.core.models import CheckReport


def probe_vector(b: Multivector, k: BasisBladeIndex) -> Multivector:
    """The vector ``~e_K << B`` for a coordinate (r-1)-blade ``K``."""
    return left_contraction(
        Multivector.blade(b.dimension, k, reverse_sign(k.grade)), b
    )


def plucker_residual(b: Multivector, k: BasisBladeIndex) -> Multivector:
    """``(~e_K << B) ^ B``; zero for every ``K`` iff ``B`` is a blade."""
    return outer_product(probe_vector(b, k), b)


def plucker_failures(b: Multivector, r: int) -> list[tuple[BasisBladeIndex, Multivector]]:
    """Every coordinate (r-1)-blade whose Plücker relation fails.

    Full enumeration for diagnostics; :func:`plucker_check` stops at the
    first failure instead.
    """
    require_rvector(b, r)
    out = []
    for k in coordinate_blades(b.dimension, r - 1):
        res = plucker_residual(b, k)
        if not res.is_zero():
            out.append((k, res))
    return out


def plucker_check(b: Multivector, r: int) -> CheckReport:
    """Test the coordinate Plücker relations ``(e_K << B) ^ B = 0``.

    Parameters
    ----------
    b : Multivector
        Nonzero homogeneous r-vector.
    r : int
        Its grade.

    Returns
    -------
    CheckReport
        Passing, or failing with the lexicographically first failing
        ``K`` and its residual.

    Raises
    ------
    GradeError
        If *b* is zero or not a homogeneous r-vector.

    Examples
    --------
    >>> from bladekit.cli.expression import parse_multivector
    >>> rep = plucker_check(parse_multivector("e123 + e456", 6), 3)
    >>> rep.passed, str(rep.witness_k), str(rep.residual)
    (False, 'e12', 'e3456')
    """
    require_rvector(b, r)
    for k in coordinate_blades(b.dimension, r - 1):
        res = plucker_residual(b, k)
        if not res.is_zero():
            return CheckReport(False, "plucker", k, res, condition="plucker")
    return CheckReport(True, "plucker")


def wedge_square(b: Multivector) -> Multivector:
    """``B ^ B`` for a 2-vector; zero iff ``B`` is a 2-blade.

    In ``G_4`` the only coefficient is at ``e1234`` and equals
    ``2 (B12 B34 - B13 B24 + B14 B23)``.

    Raises
    ------
    GradeError
        If *b* is not a homogeneous 2-vector.
    """
    if not b.is_zero() and b.grades() != {2}:
        raise GradeError(f"expected a 2-vector, got grades {sorted(b.grades())}")
    return outer_product(b, b)


def _quadratic(c: Multivector, q: tuple[int, int, int, int]) -> Fraction:
    i, j, k, m = q

    def cf(x: int, y: int) -> Fraction:
        return c.coefficient(BasisBladeIndex.of(x, y))

    return cf(i, j) * cf(k, m) - cf(i, k) * cf(j, m) + cf(i, m) * cf(j, k)


def three_term_relations(
    b: Multivector, r: int
) -> dict[tuple[BasisBladeIndex, BasisBladeIndex], Fraction]:
    """Three-term Plücker relations of an r-vector (``r >= 2``).

    For every coordinate (r-2)-blade ``S`` the contraction
    ``C = ~e_S << B`` is a 2-vector on the remaining indices; for every
    4-subset ``Q = {i<j<k<l}`` disjoint from ``S`` the value
    ``C_ij C_kl - C_ik C_jl + C_il C_jk`` must vanish when ``B`` is a blade.
    For ``r = 2`` (``S`` empty) these are the quadratic relations of a
    bivector, and their joint vanishing is equivalent to ``B ^ B = 0``.

    Returns
    -------
    dict
        ``(S, Q) -> value`` for every pair, including zero values.
    """
    require_rvector(b, r)
    if r < 2:
        raise GradeError("three-term relations need grade >= 2")
    n = b.dimension
    out: dict[tuple[BasisBladeIndex, BasisBladeIndex], Fraction] = {}
    for s in coordinate_blades(n, r - 2):
        c = left_contraction(Multivector.blade(n, s, reverse_sign(s.grade)), b)
        rest = [i for i in range(1, n + 1) if i not in s.indices]
        for q in itertools.combinations(rest, 4):
            out[(s, BasisBladeIndex(q))] = _quadratic(c, q)
    return out


def quadratic_relations(b: Multivector) -> dict[BasisBladeIndex, Fraction]:
    """Quadratic relations ``B_ij B_kl - B_ik B_jl + B_il B_jk`` of a 2-vector.

    Keyed by the 4-subset ``{i<j<k<l}``; in ``G_4`` there is exactly one.
    """
    return {q: v for (_, q), v in three_term_relations(b, 2).items()}
