"""Shared test fixtures for bladekit."""

import pytest

from bladekit.algebra.multivector import Multivector
from bladekit.cli.expression import parse_multivector

G5_BLADE = "e125 + e234 + 2e124 + e235 + e123 + e245"
G5_FACTORS = ("-e1 + e2 + e3 + e4", "-2e1 + e2 + e3 - e5", "-3e1 + e2 + 2e3 + e4 - e5")
G6_NON_BLADE = "e123 + e456"
G6_DIVISIBLE = "e123 + e456 + e124 + e356 + e125 + e346 + e126 + e345"


@pytest.fixture
def g5_blade() -> Multivector:
    """Decomposable 3-vector of G5 with a known factorization."""
    return parse_multivector(G5_BLADE, 5)


@pytest.fixture
def g5_factors() -> tuple[Multivector, ...]:
    """The three published factor vectors of ``g5_blade``."""
    return tuple(parse_multivector(f, 5) for f in G5_FACTORS)


@pytest.fixture
def g6_non_blade() -> Multivector:
    """``e123 + e456``: scalar square, yet not a blade."""
    return parse_multivector(G6_NON_BLADE, 6)


@pytest.fixture
def g6_divisible() -> Multivector:
    """Eight-term 3-vector of G6, divisible by a vector but not decomposable."""
    return parse_multivector(G6_DIVISIBLE, 6)

