"""Text notation for multivectors.

Grammar (whitespace is allowed between tokens)::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := rational [blade] | blade
    rational   := integer ['/' integer]
    blade      := 'e' digit+            (n <= 9 only)
                | 'e{' integer (',' integer)* '}'

Indices written out of order are sorted with the sign of the permutation,
so ``e21`` parses to ``-e12``. :func:`format_multivector` writes the
canonical form, which :func:`parse_multivector` reads back unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from bladekit.algebra.blades import sort_indices
from bladekit.algebra.multivector import Multivector
from bladekit.core.constants import COMPACT_NOTATION_MAX, MAX_DIMENSION
from bladekit.core.errors import ExpressionSyntaxError


@dataclass(frozen=True)
class Expression:
    """A parsed multivector together with its source text.

    Parameters
    ----------
    source : str
        Text as given by the user.
    value : Multivector
        The parsed multivector.
    dimension : int
        Ambient dimension the text was parsed in.
    """

    source: str
    value: Multivector
    dimension: int

    @classmethod
    def parse(cls, source: str, dimension: int) -> Expression:
        return cls(source, parse_multivector(source, dimension), dimension)

    @property
    def canonical(self) -> str:
        return format_multivector(self.value)


class _Parser:
    def __init__(self, text: str, n: int) -> None:
        self.text = text
        self.n = n
        self.pos = 0

    def fail(self, message: str, pos: int | None = None) -> ExpressionSyntaxError:
        at = self.pos if pos is None else pos
        return ExpressionSyntaxError(message, len(self.text[:at].encode()))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() != "/":
            return Fraction(num)
        self.pos += 1
        at = self.pos
        den = self.integer()
        if den == 0:
            raise self.fail("zero denominator", at)
        return Fraction(num, den)

    def blade(self) -> tuple[int, int]:
        """Parse a blade name; returns ``(sign, mask)``."""
        self.skip_ws()
        start = self.pos
        self.pos += 1  # 'e'
        indices: list[tuple[int, int]] = []
        if self.pos < len(self.text) and self.text[self.pos] == "{":
            self.pos += 1
            while True:
                self.skip_ws()
                at = self.pos
                indices.append((self.integer(), at))
                if self.peek() == ",":
                    self.pos += 1
                    continue
                if self.peek() == "}":
                    self.pos += 1
                    break
                raise self.fail("expected ',' or '}' in blade")
        else:
            if self.n > COMPACT_NOTATION_MAX:
                raise self.fail(
                    f"digit notation needs n <= {COMPACT_NOTATION_MAX}; use e{{i,j,...}}", start
                )
            while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
                indices.append((int(self.text[self.pos]), self.pos))
                self.pos += 1
            if not indices:
                raise self.fail("expected blade indices after 'e'")
        seen: set[int] = set()
        for i, at in indices:
            if not 1 <= i <= self.n:
                raise self.fail(f"index {i} out of range [1, {self.n}]", at)
            if i in seen:
                raise self.fail(f"repeated index {i}", at)
            seen.add(i)
        sign, idx = sort_indices([i for i, _ in indices])
        return sign, idx.mask

    def term(self) -> tuple[Fraction, int]:
        c = self.peek()
        if c == "e":
            sign, mask = self.blade()
            return Fraction(sign), mask
        if c.isdigit():
            coeff = self.rational()
            if self.peek() == "e":
                sign, mask = self.blade()
                return coeff * sign, mask
            return coeff, 0
        if not c:
            raise self.fail("unexpected end of expression")
        raise self.fail(f"unexpected character {c!r}")

    def expression(self) -> dict[int, Fraction]:
        terms: dict[int, Fraction] = {}
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        while True:
            coeff, mask = self.term()
            terms[mask] = terms.get(mask, Fraction(0)) + sign * coeff
            c = self.peek()
            if not c:
                return terms
            if c not in "+-":
                raise self.fail(f"expected '+' or '-', got {c!r}")
            sign = -1 if c == "-" else 1
            self.pos += 1


def parse_multivector(text: str, n: int) -> Multivector:
    """Parse *text* as a multivector of ``G_n``.

    Parameters
    ----------
    text : str
        Expression such as ``"e123 + e456"`` or ``"3/2 e{10,12} - e{1,2}"``.
    n : int
        Ambient dimension, 1 to 64.

    Returns
    -------
    Multivector
        Sum of the terms; like terms are combined.

    Raises
    ------
    ExpressionSyntaxError
        On malformed text, an index outside ``[1, n]`` or a repeated index,
        with the byte offset of the problem.
    ValueError
        If *n* is out of range.

    Examples
    --------
    >>> str(parse_multivector("e21", 4))
    '-e12'
    """
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {n}")
    terms = _Parser(text, n).expression()
    return Multivector(n, terms)


def _coefficient_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_multivector(b: Multivector) -> str:
    """Canonical text of *b*: lexicographic blade order, ``"0"`` for zero.

    Examples
    --------
    >>> format_multivector(parse_multivector("2e124 + e123", 4))
    'e123 + 2e124'
    """
    parts: list[str] = []
    for idx, coeff in b.items():
        mag = abs(coeff)
        if idx.grade == 0:
            body = _coefficient_text(mag)
        else:
            name = idx.label(b.dimension)
            if mag == 1:
                body = name
            elif mag.denominator == 1:
                body = f"{mag.numerator}{name}"
            else:
                body = f"{_coefficient_text(mag)} {name}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(parts) if parts else "0"
