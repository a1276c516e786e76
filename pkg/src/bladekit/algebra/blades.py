"""Coordinate basis blades and their canonical products.

A basis blade ``e_J`` is identified by the ascending index set ``J``. Index
``i`` occupies bit ``i - 1`` of an integer mask, so every operation on index
sets reduces to bit arithmetic. All signs come from one place,
:func:`reordering_sign`, which counts the transpositions needed to sort the
concatenation of two index sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from bladekit.core.constants import COMPACT_NOTATION_MAX, MAX_DIMENSION


@dataclass(frozen=True, order=True)
class BasisBladeIndex:
    """Ascending index set ``J`` of a coordinate blade ``e_J``.

    Ordering compares the index tuples lexicographically, which is the order
    used for every enumeration of coordinate blades.

    Parameters
    ----------
    indices : tuple of int
        Strictly ascending indices in ``[1, 64]``. The empty tuple denotes
        the scalar unit.
    """

    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = 0
        for i in self.indices:
            if not isinstance(i, int) or i <= prev or i > MAX_DIMENSION:
                raise ValueError(
                    f"blade indices must be strictly ascending in [1, {MAX_DIMENSION}], "
                    f"got {self.indices}"
                )
            prev = i

    @classmethod
    def of(cls, *indices: int) -> BasisBladeIndex:
        """Build an index from already-ascending integers, ``of(1, 2) -> e12``."""
        return cls(tuple(indices))

    @classmethod
    def from_mask(cls, mask: int) -> BasisBladeIndex:
        """Decode a bit mask (bit ``i - 1`` set for index ``i``)."""
        return cls(mask_indices(mask))

    @property
    def grade(self) -> int:
        return len(self.indices)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << (i - 1)
        return m

    @property
    def top(self) -> int:
        """Largest index, 0 for the scalar unit."""
        return self.indices[-1] if self.indices else 0

    def label(self, dimension: int | None = None) -> str:
        """Blade name in the ``e123`` / ``e{10,12}`` notation.

        Parameters
        ----------
        dimension : int or None
            Ambient dimension. Digit notation is used when it is at most
            ``COMPACT_NOTATION_MAX``; when omitted, the largest index decides.
        """
        if not self.indices:
            return "1"
        limit = self.top if dimension is None else dimension
        if limit <= COMPACT_NOTATION_MAX:
            return "e" + "".join(str(i) for i in self.indices)
        return "e{" + ",".join(str(i) for i in self.indices) + "}"

    def __str__(self) -> str:
        return self.label()


def mask_indices(mask: int) -> tuple[int, ...]:
    """Ascending indices encoded in *mask*."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def reordering_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation ``e_A e_B`` into ascending order.

    Counts the pairs ``(i, j)`` with ``i`` in ``A``, ``j`` in ``B`` and
    ``i > j``; each such pair costs one transposition.

    Parameters
    ----------
    a, b : int
        Index-set bit masks.

    Returns
    -------
    int
        ``+1`` or ``-1``.
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_sign_and_index(
    a: BasisBladeIndex, b: BasisBladeIndex
) -> tuple[int, BasisBladeIndex]:
    """Geometric product of two coordinate blades in the Euclidean metric.

    Parameters
    ----------
    a, b : BasisBladeIndex
        Factors, left to right.

    Returns
    -------
    tuple of (int, BasisBladeIndex)
        Sign and index set such that ``e_A e_B = sign * e_(A xor B)``;
        repeated indices annihilate to ``+1``.

    Examples
    --------
    >>> blade_sign_and_index(BasisBladeIndex.of(2), BasisBladeIndex.of(1))
    (-1, BasisBladeIndex(indices=(1, 2)))
    """
    am, bm = a.mask, b.mask
    return reordering_sign(am, bm), BasisBladeIndex.from_mask(am ^ bm)


def sort_indices(sequence: tuple[int, ...] | list[int]) -> tuple[int, BasisBladeIndex]:
    """Canonicalize a juxtaposed index sequence, ``e21 -> -e12``.

    Raises
    ------
    ValueError
        If an index repeats.
    """
    if len(set(sequence)) != len(sequence):
        raise ValueError(f"repeated index in blade {tuple(sequence)}")
    inversions = sum(
        1 for x, y in itertools.combinations(sequence, 2) if x > y
    )
    return (-1 if inversions & 1 else 1), BasisBladeIndex(tuple(sorted(sequence)))


def coordinate_blades(n: int, k: int) -> list[BasisBladeIndex]:
    """All grade-*k* coordinate blades of ``G_n`` in lexicographic order."""
    if k < 0 or k > n:
        return []
    return [BasisBladeIndex(c) for c in itertools.combinations(range(1, n + 1), k)]


def reverse_sign(grade: int) -> int:
    """Reversion sign ``(-1)^(k(k-1)/2)`` of a grade-*k* blade."""
    return -1 if (grade * (grade - 1) // 2) & 1 else 1
