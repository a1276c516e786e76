"""Tests for seeded instance generators."""

from fractions import Fraction

import pytest

from bladekit.algebra.multivector import Multivector
from bladekit.oracle.blade_oracle import blade_oracle
from bladekit.oracle.sampling import (
    random_blade,
    random_rational,
    random_rvector,
    random_vector,
    trial_rng,
)
from bladekit.plucker.relations import wedge_square


class TestTrialRng:
    def test_reproducible(self) -> None:
        a = trial_rng(42, 3).integers(0, 2**32, size=8)
        b = trial_rng(42, 3).integers(0, 2**32, size=8)
        assert a.tolist() == b.tolist()

    def test_trials_are_distinct_streams(self) -> None:
        a = trial_rng(42, 0).integers(0, 2**32, size=8)
        b = trial_rng(42, 1).integers(0, 2**32, size=8)
        assert a.tolist() != b.tolist()

    def test_accepts_full_64_bit_seed(self) -> None:
        trial_rng(2**64 - 1, 0).random()


class TestRandomRational:
    def test_bounds(self) -> None:
        rng = trial_rng(0)
        for _ in range(200):
            x = random_rational(rng, 3)
            assert isinstance(x, Fraction)
            assert abs(x.numerator) <= 3
            assert 1 <= x.denominator <= 3


class TestRandomVector:
    @pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
    def test_nonzero_grade_one(self, seed: int) -> None:
        v = random_vector(4, trial_rng(seed))
        assert not v.is_zero()
        assert v.grades() == {1}

    def test_deterministic(self) -> None:
        assert random_vector(5, trial_rng(7)) == random_vector(5, trial_rng(7))

    def test_one_dimension_bound_one(self) -> None:
        v = random_vector(1, trial_rng(11), bound=1)
        assert v.grades() == {1}


class TestRandomBlade:
    @pytest.mark.parametrize("seed", range(10))
    def test_grade_two_wedge_square_vanishes(self, seed: int) -> None:
        b = random_blade(4, 2, trial_rng(seed))
        assert b.grades() == {2}
        assert wedge_square(b).is_zero()

    @pytest.mark.parametrize("seed", range(5))
    def test_top_grade_is_pseudoscalar_multiple(self, seed: int) -> None:
        b = random_blade(4, 4, trial_rng(seed))
        assert len(b) == 1
        ((idx, coeff),) = b.items()
        assert Multivector.blade(4, idx) == Multivector.pseudoscalar(4)
        assert coeff != 0

    @pytest.mark.parametrize("seed", range(5))
    def test_oracle_accepts(self, seed: int) -> None:
        assert blade_oracle(random_blade(6, 3, trial_rng(seed)), 3)


class TestRandomRVector:
    @pytest.mark.parametrize("seed", range(5))
    def test_homogeneous(self, seed: int) -> None:
        b = random_rvector(6, 3, trial_rng(seed))
        assert b.dimension == 6
        assert b.grades() == {3}

    def test_deterministic(self) -> None:
        assert random_rvector(6, 3, trial_rng(5)) == random_rvector(6, 3, trial_rng(5))
