"""Seeded random instances for equivalence sweeps.

Every generator is a ``numpy.random.Generator`` on the PCG64 bit generator
(128-bit linear congruential state with a permuted 64-bit output). Trial
``i`` of a sweep with seed ``s`` uses
``SeedSequence(entropy=s, spawn_key=(i,))``, so each trial is reproducible
on its own and independent of the order in which trials run.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

import numpy as np

from bladekit.algebra.blades import coordinate_blades
from bladekit.algebra.multivector import Multivector, outer_product

DEFAULT_BOUND = 3


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    """Generator for trial *trial* of a sweep seeded with *seed*."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(trial,)))
    )


def random_rational(rng: np.random.Generator, bound: int = DEFAULT_BOUND) -> Fraction:
    """Rational ``p/q`` with ``|p| <= bound`` and ``1 <= q <= bound``."""
    num = int(rng.integers(-bound, bound, endpoint=True))
    den = int(rng.integers(1, bound, endpoint=True))
    return Fraction(num, den)


def _nonzero_rational(rng: np.random.Generator, bound: int) -> Fraction:
    while True:
        x = random_rational(rng, bound)
        if x:
            return x


def random_vector(n: int, rng: np.random.Generator, bound: int = DEFAULT_BOUND) -> Multivector:
    """Nonzero grade-1 multivector with random rational coefficients."""
    while True:
        v = Multivector.vector(n, [random_rational(rng, bound) for _ in range(n)])
        if not v.is_zero():
            return v


def random_blade(
    n: int, r: int, rng: np.random.Generator, bound: int = DEFAULT_BOUND
) -> Multivector:
    """Nonzero outer product of *r* random vectors, an r-blade by construction."""
    while True:
        b = reduce(outer_product, [random_vector(n, rng, bound) for _ in range(r)])
        if not b.is_zero():
            return b


def random_rvector(
    n: int, r: int, rng: np.random.Generator, bound: int = DEFAULT_BOUND
) -> Multivector:
    """Sparse nonzero r-vector.

    Each coordinate r-blade is kept with probability one half and given a
    nonzero random rational coefficient.
    """
    blades = coordinate_blades(n, r)
    while True:
        terms = {}
        for idx in blades:
            if rng.random() < 0.5:
                terms[idx] = _nonzero_rational(rng, bound)
        if terms:
            return Multivector(n, terms)
