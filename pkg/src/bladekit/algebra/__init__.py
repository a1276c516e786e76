"""Exact Euclidean geometric algebra kernel."""

from bladekit.algebra.blades import (
    BasisBladeIndex,
    blade_sign_and_index,
    coordinate_blades,
    sort_indices,
)
from bladekit.algebra.linalg import exact_nullspace, exact_rank
from bladekit.algebra.multivector import (
    Multivector,
    Rational,
    add,
    coefficient,
    extract_coefficient,
    geometric_product,
    grade_project,
    grades,
    left_contraction,
    outer_product,
    require_rvector,
    reverse,
)

__all__ = [
    "BasisBladeIndex",
    "Multivector",
    "Rational",
    "add",
    "blade_sign_and_index",
    "coefficient",
    "coordinate_blades",
    "exact_nullspace",
    "exact_rank",
    "extract_coefficient",
    "geometric_product",
    "grade_project",
    "grades",
    "left_contraction",
    "outer_product",
    "require_rvector",
    "reverse",
    "sort_indices",
]
