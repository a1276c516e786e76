"""Decomposability criteria and blade factorization."""

from bladekit.plucker.factor import divide, factorize, is_divisible, vector_divisors
from bladekit.plucker.nguyen import (
    blade_vb_identity_residual,
    nguyen_check,
    parity_witness,
    square_parity,
)
from bladekit.plucker.rank import rank_space, span_rank, span_set
from bladekit.plucker.relations import (
    plucker_check,
    plucker_failures,
    probe_vector,
    quadratic_relations,
    three_term_relations,
    wedge_square,
)

__all__ = [
    "blade_vb_identity_residual",
    "divide",
    "factorize",
    "is_divisible",
    "nguyen_check",
    "parity_witness",
    "plucker_check",
    "plucker_failures",
    "probe_vector",
    "quadratic_relations",
    "rank_space",
    "span_rank",
    "span_set",
    "square_parity",
    "three_term_relations",
    "vector_divisors",
    "wedge_square",
]
