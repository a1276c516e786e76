"""Tests for the multivector text notation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bladekit.algebra.blades import BasisBladeIndex
from bladekit.algebra.multivector import Multivector
from bladekit.cli.expression import Expression, format_multivector, parse_multivector
from bladekit.core.errors import ExpressionSyntaxError

K = BasisBladeIndex.of


class TestParse:
    def test_sum_of_blades(self) -> None:
        b = parse_multivector("e123 + e456", 6)
        assert b == Multivector(6, {K(1, 2, 3): 1, K(4, 5, 6): 1})

    def test_transposition_sign(self) -> None:
        assert parse_multivector("e21", 4) == Multivector(4, {K(1, 2): -1})

    def test_braces_and_rationals(self) -> None:
        b = parse_multivector("3/2 e{10,12} - e{1,2}", 12)
        assert b == Multivector(12, {K(10, 12): Fraction(3, 2), K(1, 2): -1})

    def test_leading_sign_and_scalar(self) -> None:
        b = parse_multivector("-2 + e1", 2)
        assert b.scalar_part() == -2
        assert b.coefficient(K(1)) == 1

    def test_like_terms_combine(self) -> None:
        assert parse_multivector("e12 - e21", 3) == parse_multivector("2e12", 3)
        assert parse_multivector("e12 + e21", 3).is_zero()

    def test_whitespace_and_compact(self) -> None:
        assert parse_multivector("e125+e234+2e124", 5) == parse_multivector(
            " e125 + e234 + 2 e124 ", 5
        )

    def test_zero(self) -> None:
        assert parse_multivector("0", 3).is_zero()

    def test_digits_only_up_to_nine(self) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse_multivector("e12", 10)
        assert exc.value.offset == 0
        assert parse_multivector("e{1,2}", 10) == Multivector(10, {K(1, 2): 1})

    def test_index_out_of_range(self) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse_multivector("e12 + e15", 4)
        assert exc.value.offset == 8

    def test_repeated_index(self) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse_multivector("e121", 4)
        assert exc.value.offset == 3

    def test_repeated_index_braces(self) -> None:
        with pytest.raises(ExpressionSyntaxError):
            parse_multivector("e{3,3}", 12)

    @pytest.mark.parametrize(
        "text,offset",
        [("", 0), ("e12 +", 5), ("e12 e34", 4), ("x", 0), ("e", 1), ("1/0 e1", 2), ("e{1,", 4)],
    )
    def test_malformed(self, text: str, offset: int) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse_multivector(text, 4)
        assert exc.value.offset == offset
        assert f"offset {offset}" in str(exc.value)

    def test_dimension_range(self) -> None:
        with pytest.raises(ValueError):
            parse_multivector("e1", 65)


class TestFormat:
    def test_zero(self) -> None:
        assert format_multivector(Multivector.zero(3)) == "0"

    def test_negative_compact(self) -> None:
        assert format_multivector(parse_multivector("e21", 4)) == "-e12"

    def test_ordering(self) -> None:
        assert format_multivector(parse_multivector("2e124 + e123", 4)) == "e123 + 2e124"

    def test_fractions_and_braces(self) -> None:
        b = parse_multivector("3/2 e{10,12} - e{1,2}", 12)
        assert format_multivector(b) == "-e{1,2} + 3/2 e{10,12}"

    def test_scalar_terms(self) -> None:
        assert format_multivector(parse_multivector("-1/3 + e1", 2)) == "-1/3 + e1"

    def test_str_uses_format(self) -> None:
        assert str(parse_multivector("e3 - e2", 3)) == "-e2 + e3"


class TestExpression:
    def test_canonical(self) -> None:
        ex = Expression.parse("e21 + e3", 3)
        assert ex.source == "e21 + e3"
        assert ex.dimension == 3
        assert ex.canonical == "-e12 + e3"


rationals = st.builds(
    Fraction, st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=9)
)


@st.composite
def multivectors(draw: st.DrawFn) -> Multivector:
    n = draw(st.sampled_from([1, 3, 6, 9, 10, 12]))
    terms = draw(
        st.dictionaries(st.integers(min_value=0, max_value=(1 << n) - 1), rationals, max_size=6)
    )
    return Multivector(n, terms)


class TestRoundTrip:
    @settings(max_examples=1000)
    @given(multivectors())
    def test_parse_format_identity(self, b: Multivector) -> None:
        assert parse_multivector(format_multivector(b), b.dimension) == b
