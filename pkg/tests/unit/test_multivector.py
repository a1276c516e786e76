"""Tests for the exact multivector kernel."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bladekit.algebra.blades import BasisBladeIndex, coordinate_blades
from bladekit.algebra.multivector import (
    Multivector,
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
from bladekit.cli.expression import parse_multivector
from bladekit.core.errors import DimensionMismatchError, GradeError

N = 5

rationals = st.builds(
    Fraction, st.integers(min_value=-4, max_value=4), st.integers(min_value=1, max_value=3)
)
nonzero_rationals = rationals.filter(bool)


def multivectors(n: int = N, max_terms: int = 6) -> st.SearchStrategy[Multivector]:
    return st.dictionaries(
        st.integers(min_value=0, max_value=(1 << n) - 1), rationals, max_size=max_terms
    ).map(lambda terms: Multivector(n, terms))


def homogeneous(n: int, r: int) -> st.SearchStrategy[Multivector]:
    blades = [idx.mask for idx in coordinate_blades(n, r)]
    return st.dictionaries(st.sampled_from(blades), nonzero_rationals, min_size=1).map(
        lambda terms: Multivector(n, terms)
    )


def vectors(n: int = N) -> st.SearchStrategy[Multivector]:
    return st.lists(rationals, min_size=n, max_size=n).map(lambda c: Multivector.vector(n, c))


class TestConstruction:
    def test_zero_terms_dropped(self) -> None:
        mv = Multivector(3, {BasisBladeIndex.of(1): 0, BasisBladeIndex.of(2): 1})
        assert len(mv) == 1
        assert Multivector(3, {1: 0}).is_zero()

    def test_index_beyond_dimension_rejected(self) -> None:
        with pytest.raises(ValueError):
            Multivector(2, {BasisBladeIndex.of(3): 1})

    def test_dimension_range(self) -> None:
        with pytest.raises(ValueError):
            Multivector(0)
        with pytest.raises(ValueError):
            Multivector(65)
        assert Multivector.basis_vector(64, 64).grades() == {1}

    def test_pseudoscalar(self) -> None:
        assert Multivector.pseudoscalar(3) == parse_multivector("e123", 3)

    def test_vector_length_checked(self) -> None:
        with pytest.raises(ValueError):
            Multivector.vector(3, [1, 2])

    def test_items_are_lexicographic(self) -> None:
        mv = parse_multivector("e3 + e12 + 1 + e2", 3)
        assert [idx for idx, _ in mv.items()] == [
            BasisBladeIndex(),
            BasisBladeIndex.of(1, 2),
            BasisBladeIndex.of(2),
            BasisBladeIndex.of(3),
        ]

    def test_zero_is_homogeneous_without_grade(self) -> None:
        z = Multivector.zero(4)
        assert z.is_homogeneous()
        assert z.homogeneous_grade() is None
        assert grades(z) == set()


class TestArithmetic:
    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            add(Multivector.basis_vector(3, 1), Multivector.basis_vector(4, 1))

    def test_subtraction_cancels(self) -> None:
        a = parse_multivector("e12 + 3e3", 3)
        assert (a - a).is_zero()

    def test_scalar_multiplication(self) -> None:
        a = parse_multivector("e12 - e3", 3)
        assert a * Fraction(1, 2) == parse_multivector("1/2 e12 - 1/2 e3", 3)
        assert 2 * a == a + a

    def test_basis_products(self) -> None:
        e1 = Multivector.basis_vector(3, 1)
        e2 = Multivector.basis_vector(3, 2)
        assert geometric_product(e1, e1) == 1
        assert geometric_product(e2, e1) == -geometric_product(e1, e2)
        assert outer_product(e1, e1).is_zero()
        assert left_contraction(e1, e1 ^ e2) == e2

    def test_left_contraction_higher_grade_is_zero(self) -> None:
        a = parse_multivector("e123", 3)
        assert left_contraction(a, Multivector.basis_vector(3, 1)).is_zero()

    def test_product_operators_reject_other_types(self) -> None:
        a = parse_multivector("e12", 3)
        with pytest.raises(TypeError):
            a ^ 2
        with pytest.raises(TypeError):
            a << "e1"
        assert (a ^ Multivector.basis_vector(3, 3)) == parse_multivector("e123", 3)

    def test_square_of_g6_example(self, g6_non_blade: Multivector) -> None:
        assert geometric_product(g6_non_blade, g6_non_blade) == -2

    def test_norm_squared(self) -> None:
        a = parse_multivector("2e12 - e3 + 1/2", 3)
        assert a.norm_squared() == Fraction(21, 4)
        assert a.norm_squared() == geometric_product(a, reverse(a)).scalar_part()

    def test_grade_projection(self) -> None:
        a = parse_multivector("1 + e1 + e12 + e123", 3)
        assert grade_project(a, 2) == parse_multivector("e12", 3)
        assert a.grades() == {0, 1, 2, 3}
        assert not a.is_homogeneous()

    def test_coefficient_accessors(self) -> None:
        a = parse_multivector("3e12 - e13", 3)
        assert coefficient(a, BasisBladeIndex.of(1, 3)) == -1
        assert coefficient(a, BasisBladeIndex.of(2, 3)) == 0


class TestAlgebraLaws:
    @settings(max_examples=200)
    @given(multivectors(), multivectors(), multivectors())
    def test_geometric_product_associative(
        self, a: Multivector, b: Multivector, c: Multivector
    ) -> None:
        assert geometric_product(geometric_product(a, b), c) == geometric_product(
            a, geometric_product(b, c)
        )

    @given(multivectors(), multivectors(), multivectors())
    def test_outer_product_associative(
        self, a: Multivector, b: Multivector, c: Multivector
    ) -> None:
        assert outer_product(outer_product(a, b), c) == outer_product(a, outer_product(b, c))

    @given(multivectors(), multivectors(), multivectors())
    def test_distributive(self, a: Multivector, b: Multivector, c: Multivector) -> None:
        assert geometric_product(a, b + c) == geometric_product(a, b) + geometric_product(a, c)

    @given(multivectors())
    def test_reverse_involution(self, a: Multivector) -> None:
        assert reverse(reverse(a)) == a

    @given(multivectors(), multivectors())
    def test_reverse_anti_automorphism(self, a: Multivector, b: Multivector) -> None:
        assert reverse(geometric_product(a, b)) == geometric_product(reverse(b), reverse(a))

    @given(multivectors())
    def test_grade_decomposition(self, a: Multivector) -> None:
        total = Multivector.zero(N)
        for k in range(N + 1):
            total = total + grade_project(a, k)
        assert total == a

    @given(st.integers(min_value=1, max_value=N).flatmap(lambda r: homogeneous(N, r)))
    def test_coefficient_round_trip(self, b: Multivector) -> None:
        r = b.homogeneous_grade()
        assert r is not None
        rebuilt = Multivector.zero(N)
        for idx in coordinate_blades(N, r):
            rebuilt = rebuilt + Multivector.blade(N, idx, extract_coefficient(b, idx))
        assert rebuilt == b
        for idx, c in b.items():
            assert extract_coefficient(b, idx) == coefficient(b, idx) == c

    @given(
        st.integers(min_value=1, max_value=N).flatmap(lambda r: homogeneous(N, r)),
        vectors(),
    )
    def test_wedge_from_geometric_products(self, b: Multivector, v: Multivector) -> None:
        r = b.homogeneous_grade()
        assert r is not None
        sign = -1 if r % 2 else 1
        lhs = outer_product(b, v).scale(2)
        rhs = geometric_product(b, v) + geometric_product(v, b).scale(sign)
        assert lhs == rhs

    @given(multivectors(), multivectors())
    def test_equality_ignores_construction_order(self, a: Multivector, b: Multivector) -> None:
        assert a + b == b + a
        assert hash(a + b) == hash(b + a)


class TestRequireRVector:
    def test_accepts_rvector(self) -> None:
        require_rvector(parse_multivector("e12 + e34", 4), 2)

    def test_rejects_zero(self) -> None:
        with pytest.raises(GradeError):
            require_rvector(Multivector.zero(4), 2)

    def test_rejects_mixed(self) -> None:
        with pytest.raises(GradeError):
            require_rvector(parse_multivector("e1 + e12", 4), 2)

    def test_rejects_wrong_grade(self) -> None:
        with pytest.raises(GradeError):
            require_rvector(parse_multivector("e123", 4), 2)

    def test_rejects_grade_beyond_dimension(self) -> None:
        with pytest.raises(GradeError):
            require_rvector(parse_multivector("e12", 2), 3)
