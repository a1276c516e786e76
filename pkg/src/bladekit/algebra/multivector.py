"""Sparse exact multivectors of the Euclidean geometric algebra ``G_n``.

A :class:`Multivector` maps basis-blade masks to nonzero
:class:`fractions.Fraction` coefficients and carries its ambient dimension.
Values are immutable; every operation returns a new multivector. The
products are the bilinear extensions of :func:`reordering_sign` over the
stored terms:

- geometric product: every pair of terms, ``e_A e_B = sign * e_(A xor B)``
- outer product: pairs with ``A`` and ``B`` disjoint
- left contraction: pairs with ``A`` a subset of ``B``

Python operators follow the usual geometric algebra conventions: ``*`` is
the geometric product, ``^`` the outer product, ``<<`` the left contraction
and ``~`` the reverse.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Union

from bladekit.algebra.blades import (
    BasisBladeIndex,
    mask_indices,
    reordering_sign,
    reverse_sign,
)
from bladekit.core.constants import MAX_DIMENSION
from bladekit.core.errors import DimensionMismatchError, GradeError

Rational = Fraction
"""Exact scalar type: reduced, positive denominator, zero is ``0/1``."""

Scalar = Union[int, Fraction]


def _grade_of(mask: int) -> int:
    return mask.bit_count()


class Multivector:
    """Immutable sparse multivector over ``G_n``.

    Parameters
    ----------
    dimension : int
        Ambient dimension ``n`` (1 to 64).
    terms : mapping or None
        Coefficients keyed by :class:`BasisBladeIndex` (or raw bit mask).
        Zero coefficients are dropped; every index must lie in ``[1, n]``.

    Examples
    --------
    >>> e = Multivector.basis_vector
    >>> (e(3, 1) ^ e(3, 2)) == Multivector.blade(3, BasisBladeIndex.of(1, 2))
    True
    """

    __slots__ = ("_dimension", "_terms")

    _dimension: int
    _terms: dict[int, Fraction]

    def __init__(
        self,
        dimension: int,
        terms: Mapping[BasisBladeIndex, Scalar] | Mapping[int, Scalar] | None = None,
    ) -> None:
        if not isinstance(dimension, int) or not 1 <= dimension <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {dimension}")
        limit = 1 << dimension
        clean: dict[int, Fraction] = {}
        for key, value in (terms or {}).items():
            mask = key.mask if isinstance(key, BasisBladeIndex) else int(key)
            if mask < 0 or mask >= limit:
                raise ValueError(
                    f"blade {BasisBladeIndex.from_mask(mask)} does not fit dimension {dimension}"
                )
            coeff = clean.get(mask, Fraction(0)) + Fraction(value)
            if coeff:
                clean[mask] = coeff
            else:
                clean.pop(mask, None)
        self._dimension = dimension
        self._terms = clean

    @classmethod
    def _from_masks(cls, dimension: int, terms: dict[int, Fraction]) -> Multivector:
        """Wrap an already-clean term dict without validation."""
        obj = cls.__new__(cls)
        obj._dimension = dimension
        obj._terms = terms
        return obj

    # ---- Constructors ----

    @classmethod
    def zero(cls, dimension: int) -> Multivector:
        return cls(dimension)

    @classmethod
    def scalar(cls, dimension: int, value: Scalar = 1) -> Multivector:
        return cls(dimension, {0: value})

    @classmethod
    def basis_vector(cls, dimension: int, i: int) -> Multivector:
        """The coordinate vector ``e_i``."""
        return cls(dimension, {BasisBladeIndex.of(i): 1})

    @classmethod
    def blade(
        cls, dimension: int, index: BasisBladeIndex, coeff: Scalar = 1
    ) -> Multivector:
        """The coordinate blade ``coeff * e_J``."""
        return cls(dimension, {index: coeff})

    @classmethod
    def vector(cls, dimension: int, coeffs: Iterable[Scalar]) -> Multivector:
        """Grade-1 multivector ``sum_i coeffs[i-1] e_i``."""
        values = list(coeffs)
        if len(values) != dimension:
            raise ValueError(f"expected {dimension} coefficients, got {len(values)}")
        return cls(dimension, {1 << i: c for i, c in enumerate(values)})

    @classmethod
    def pseudoscalar(cls, dimension: int) -> Multivector:
        """The unit top-grade blade ``e_(1...n)``."""
        return cls(dimension, {(1 << dimension) - 1: 1})

    # ---- Accessors ----

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def masks(self) -> Mapping[int, Fraction]:
        """Copy of the raw ``mask -> coefficient`` terms."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[BasisBladeIndex, Fraction]]:
        """Terms in lexicographic blade order."""
        keyed = sorted(
            ((mask_indices(m), c) for m, c in self._terms.items()), key=lambda t: t[0]
        )
        for indices, coeff in keyed:
            yield BasisBladeIndex(indices), coeff

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, index: BasisBladeIndex) -> Fraction:
        """Stored coefficient at *index* (``0`` when absent)."""
        return self._terms.get(index.mask, Fraction(0))

    def scalar_part(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def grades(self) -> set[int]:
        """Grades with a nonzero projection."""
        return {_grade_of(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        """True for a single-grade multivector (and for zero, by convention)."""
        return len(self.grades()) <= 1

    def homogeneous_grade(self) -> int | None:
        """The single grade of a nonzero homogeneous multivector, else ``None``."""
        gs = self.grades()
        return next(iter(gs)) if len(gs) == 1 else None

    def grade(self, k: int) -> Multivector:
        """Grade-*k* projection ``<A>_k``."""
        return Multivector._from_masks(
            self._dimension, {m: c for m, c in self._terms.items() if _grade_of(m) == k}
        )

    def vector_coefficients(self) -> list[Fraction]:
        """Grade-1 coefficients as a length-``n`` list."""
        return [self._terms.get(1 << i, Fraction(0)) for i in range(self._dimension)]

    # ---- Linear structure ----

    def _check(self, other: Multivector) -> None:
        if self._dimension != other._dimension:
            raise DimensionMismatchError(self._dimension, other._dimension)

    def __add__(self, other: object) -> Multivector:
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self._dimension, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Multivector._from_masks(self._dimension, out)

    __radd__ = __add__

    def __neg__(self) -> Multivector:
        return Multivector._from_masks(self._dimension, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> Multivector:
        if isinstance(other, (int, Fraction, Multivector)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: object) -> Multivector:
        return (-self) + other

    def scale(self, factor: Scalar) -> Multivector:
        f = Fraction(factor)
        if not f:
            return Multivector.zero(self._dimension)
        return Multivector._from_masks(self._dimension, {m: c * f for m, c in self._terms.items()})

    # ---- Products ----

    def _product(self, other: Multivector, kind: str) -> Multivector:
        self._check(other)
        outer = kind == "outer"
        lcont = kind == "lcont"
        sign = reordering_sign
        acc: dict[int, Fraction] = {}
        right = list(other._terms.items())
        for am, ac in self._terms.items():
            for bm, bc in right:
                if outer and am & bm:
                    continue
                if lcont and am & ~bm:
                    continue
                m = am ^ bm
                term = ac * bc if sign(am, bm) > 0 else -(ac * bc)
                acc[m] = acc[m] + term if m in acc else term
        return Multivector._from_masks(self._dimension, {m: c for m, c in acc.items() if c})

    def __mul__(self, other: object) -> Multivector:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._product(other, "geometric")

    def __rmul__(self, other: object) -> Multivector:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __xor__(self, other: object) -> Multivector:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._product(other, "outer")

    def __lshift__(self, other: object) -> Multivector:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._product(other, "lcont")

    def __invert__(self) -> Multivector:
        return Multivector._from_masks(
            self._dimension,
            {m: c * reverse_sign(_grade_of(m)) for m, c in self._terms.items()},
        )

    def norm_squared(self) -> Fraction:
        """Scalar part of ``A ~A``; positive for every nonzero ``A``."""
        return sum((c * c for c in self._terms.values()), Fraction(0))

    # ---- Comparison / display ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self._dimension, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        from bladekit.cli.expression import format_multivector

        return format_multivector(self)

    def __repr__(self) -> str:
        return f"Multivector(n={self._dimension}, {self})"


def add(a: Multivector, b: Multivector) -> Multivector:
    """Termwise sum; cancelled terms are removed."""
    return a + b


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Clifford product ``ab`` with exact coefficients.

    Raises
    ------
    DimensionMismatchError
        If *a* and *b* have different ambient dimensions.
    """
    return a._product(b, "geometric")


def outer_product(a: Multivector, b: Multivector) -> Multivector:
    """Outer (wedge) product ``a ^ b``."""
    return a._product(b, "outer")


def left_contraction(a: Multivector, b: Multivector) -> Multivector:
    """Left contraction ``a << b``.

    For homogeneous grades ``s <= t`` this is ``<ab>_(t-s)``; contributions
    with ``s > t`` vanish.
    """
    return a._product(b, "lcont")


def reverse(a: Multivector) -> Multivector:
    """Reverse: each grade-*k* term scaled by ``(-1)^(k(k-1)/2)``."""
    return ~a


def grade_project(a: Multivector, k: int) -> Multivector:
    """Keep exactly the grade-*k* terms of *a*."""
    return a.grade(k)


def grades(a: Multivector) -> set[int]:
    """The set of grades present in *a*; empty for zero."""
    return a.grades()


def coefficient(b: Multivector, j: BasisBladeIndex) -> Fraction:
    """Coefficient of ``e_J`` in *b*, read from the term map."""
    return b.coefficient(j)


def extract_coefficient(b: Multivector, j: BasisBladeIndex) -> Fraction:
    """Coefficient of ``e_J`` computed as the scalar part of ``b ~e_J``.

    Agrees with :func:`coefficient`; kept separate so the two definitions
    can be checked against each other.
    """
    basis = Multivector.blade(b.dimension, j)
    return geometric_product(b, reverse(basis)).scalar_part()


def require_rvector(b: Multivector, r: int) -> None:
    """Validate that *b* is a nonzero homogeneous multivector of grade *r*.

    Raises
    ------
    GradeError
        If *b* is zero, mixes grades, or has a grade other than *r*.
    """
    if b.is_zero():
        raise GradeError("expected a nonzero r-vector, got 0")
    if not 1 <= r <= b.dimension:
        raise GradeError(f"grade {r} outside [1, {b.dimension}]")
    gs = b.grades()
    if gs != {r}:
        raise GradeError(f"expected a homogeneous {r}-vector, got grades {sorted(gs)}")
