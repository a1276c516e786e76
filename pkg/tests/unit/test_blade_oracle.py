"""Tests for the rank-space blade oracle."""

import pytest

from bladekit.algebra.blades import BasisBladeIndex
from bladekit.algebra.multivector import Multivector
from bladekit.cli.expression import parse_multivector
from bladekit.core.errors import GradeError
from bladekit.core.protocols import BladeCriterion, WitnessCriterion
from bladekit.oracle.blade_oracle import RankSpaceOracle, blade_oracle, rank_space_dimension
from bladekit.oracle.criteria import CRITERIA
from bladekit.plucker.rank import rank_space


class TestBladeOracle:
    def test_g6_non_blade(self, g6_non_blade: Multivector) -> None:
        assert not blade_oracle(g6_non_blade, 3)
        assert rank_space_dimension(g6_non_blade) == 0

    def test_coordinate_blade(self) -> None:
        assert blade_oracle(parse_multivector("e123", 3), 3)

    def test_g5_blade(self, g5_blade: Multivector) -> None:
        assert blade_oracle(g5_blade, 3)

    def test_divisible_example(self, g6_divisible: Multivector) -> None:
        assert not blade_oracle(g6_divisible, 3)

    def test_matches_product_based_rank_space(self, g6_divisible: Multivector) -> None:
        for b, r in [
            (g6_divisible, 3),
            (parse_multivector("e12 + e13", 3), 2),
            (parse_multivector("e12 + e34", 4), 2),
        ]:
            assert rank_space_dimension(b) == rank_space(b, r).dimension

    def test_rejects_zero(self) -> None:
        with pytest.raises(GradeError):
            blade_oracle(Multivector.zero(4), 2)

    def test_rejects_wrong_grade(self) -> None:
        with pytest.raises(GradeError):
            blade_oracle(parse_multivector("e12", 4), 3)


class TestCriteriaRegistry:
    def test_names(self) -> None:
        assert set(CRITERIA) == {"plucker", "nguyen", "span", "oracle"}

    def test_protocol(self) -> None:
        assert isinstance(RankSpaceOracle(), BladeCriterion)
        for name, crit in CRITERIA.items():
            assert isinstance(crit, BladeCriterion)
            assert crit.name == name

    def test_verdicts(self, g5_blade: Multivector, g6_non_blade: Multivector) -> None:
        for crit in CRITERIA.values():
            assert crit.is_blade(g5_blade, 3)
            assert not crit.is_blade(g6_non_blade, 3)

    def test_witness_criteria(self, g6_non_blade: Multivector) -> None:
        assert list(CRITERIA) == ["plucker", "nguyen", "span", "oracle"]
        witnessing = {n for n, c in CRITERIA.items() if isinstance(c, WitnessCriterion)}
        assert witnessing == {"plucker", "nguyen"}
        plucker = CRITERIA["plucker"]
        assert isinstance(plucker, WitnessCriterion)
        rep = plucker.check(g6_non_blade, 3)
        assert rep.witness_k == BasisBladeIndex.of(1, 2)
