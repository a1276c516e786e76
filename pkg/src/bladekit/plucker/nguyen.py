"""Geometric-product characterizations of blades.

A nonzero r-vector ``B`` is an r-blade iff ``B^2`` is a scalar and ``BvB``
is a vector for every probe vector ``v = ~e_K << B``. The first condition
alone is necessary but not sufficient (``e123 + e456`` squares to ``-2``);
when it fails, :func:`parity_witness` locates a Plücker relation that fails
too.
"""

from __future__ import annotations

import itertools
import warnings

from bladekit.algebra.blades import BasisBladeIndex, coordinate_blades
from bladekit.algebra.multivector import (
    Multivector,
    geometric_product,
    left_contraction,
    require_rvector,
)
from bladekit.core.errors import GradeError
from bladekit.core.models import CheckReport
from bladekit.plucker.relations import plucker_check, plucker_residual, probe_vector


def square_parity(b: Multivector) -> bool:
    """True iff ``B^2`` equals its scalar part.

    Raises
    ------
    GradeError
        If *b* is not homogeneous.
    """
    if not b.is_homogeneous():
        raise GradeError(f"expected a homogeneous multivector, got grades {sorted(b.grades())}")
    sq = geometric_product(b, b)
    return sq == sq.grade(0)


def parity_witness(b: Multivector, r: int) -> BasisBladeIndex | None:
    """Find a failing Plücker relation from a non-scalar ``B^2``.

    In ``B^2 = sum B_m B_p e_Jm e_Jp`` a cross term survives only when
    ``r - #(J_m & J_p)`` is even. For such a pair, a ``K`` inside ``J_m``
    meets ``J_p`` in at most ``r - 2`` indices; the first such ``K`` (pairs
    and subsets in lexicographic order) with a nonzero residual is returned.

    Returns
    -------
    BasisBladeIndex or None
        The witness ``K``, or ``None`` when ``B^2`` is a scalar.
    """
    require_rvector(b, r)
    if square_parity(b):
        return None
    blades = [idx for idx, _ in b.items()]
    for jm, jp in itertools.combinations(blades, 2):
        overlap = len(set(jm.indices) & set(jp.indices))
        if (r - overlap) % 2:
            continue
        for sub in itertools.combinations(jm.indices, r - 1):
            k = BasisBladeIndex(sub)
            if not plucker_residual(b, k).is_zero():
                return k
    report = plucker_check(b, r)
    warnings.warn(
        "parity construction found no witness; using the first failing Plücker relation",
        stacklevel=2,
    )
    return report.witness_k


def nguyen_check(b: Multivector, r: int) -> CheckReport:
    """Test ``B^2 = B . B`` and ``BvB`` in ``G_n^1`` for all probe vectors.

    Parameters
    ----------
    b : Multivector
        Nonzero homogeneous r-vector.
    r : int
        Its grade.

    Returns
    -------
    CheckReport
        On a non-scalar square: condition ``"square"``, witness from
        :func:`parity_witness`, residual ``B^2 - <B^2>_0``. On a non-vector
        sandwich: condition ``"sandwich"``, the first failing ``K`` and the
        non-vector part of ``BvB``.
    """
    require_rvector(b, r)
    sq = geometric_product(b, b)
    if sq != sq.grade(0):
        witness = parity_witness(b, r)
        if witness is None:
            raise RuntimeError("non-scalar square but every Plücker relation holds")
        return CheckReport(False, "nguyen", witness, sq - sq.grade(0), condition="square")
    for k in coordinate_blades(b.dimension, r - 1):
        v = probe_vector(b, k)
        if v.is_zero():
            continue
        bvb = geometric_product(b, geometric_product(v, b))
        extra = bvb - bvb.grade(1)
        if not extra.is_zero():
            return CheckReport(False, "nguyen", k, extra, condition="sandwich")
    return CheckReport(True, "nguyen")


def blade_vb_identity_residual(b: Multivector, r: int) -> Multivector:
    """First nonzero ``BvB - (-1)^(r+1) (B . B) v`` over probe vectors.

    The identity holds for every probe vector whenever ``B`` satisfies the
    Plücker relations, so the result is zero for blades.
    """
    require_rvector(b, r)
    dot = left_contraction(b, b)
    sign = 1 if (r + 1) % 2 == 0 else -1
    for k in coordinate_blades(b.dimension, r - 1):
        v = probe_vector(b, k)
        if v.is_zero():
            continue
        lhs = geometric_product(b, geometric_product(v, b))
        rhs = geometric_product(dot, v).scale(sign)
        res = lhs - rhs
        if not res.is_zero():
            return res
    return Multivector.zero(b.dimension)
