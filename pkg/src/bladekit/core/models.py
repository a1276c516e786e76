"""Core datamodels for bladekit.

Frozen dataclasses shared by the criteria, the factorization routine, the
trial runner and the CLI. Rationals are :class:`fractions.Fraction`;
multivectors are :class:`bladekit.algebra.multivector.Multivector`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from bladekit.algebra.blades import BasisBladeIndex
    from bladekit.algebra.multivector import Multivector


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one decomposability criterion.

    Parameters
    ----------
    passed : bool
        True when the criterion holds for every coordinate (r-1)-blade.
    method : str
        ``"plucker"`` or ``"nguyen"``.
    witness_k : BasisBladeIndex or None
        The coordinate (r-1)-blade at which the criterion first failed.
    residual : Multivector or None
        The nonzero value whose vanishing the criterion demands.
    condition : str or None
        Which condition failed: ``"plucker"`` for ``(e_K << B) ^ B``,
        ``"square"`` for a non-scalar ``B^2`` and ``"sandwich"`` for a
        non-vector ``BvB``.
    """

    passed: bool
    method: str
    witness_k: BasisBladeIndex | None = None
    residual: Multivector | None = None
    condition: str | None = None

    def __post_init__(self) -> None:
        if self.passed:
            if self.witness_k is not None or self.residual is not None:
                raise ValueError("a passing report carries no witness")
        else:
            if self.witness_k is None or self.residual is None:
                raise ValueError("a failing report needs a witness and a residual")
            if self.residual.is_zero():
                raise ValueError("a failing report needs a nonzero residual")

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class Factorization:
    """A blade written as ``scale * (v_1 ^ ... ^ v_r)``.

    Parameters
    ----------
    scale : Fraction
        Nonzero scalar factor.
    vectors : tuple of Multivector
        The ``r`` grade-1 factors, in wedge order.
    pivot : BasisBladeIndex
        Coordinate r-blade whose coefficient fixed the scale.
    """

    scale: Fraction
    vectors: tuple[Multivector, ...]
    pivot: BasisBladeIndex

    @property
    def grade(self) -> int:
        return len(self.vectors)

    def wedge(self) -> Multivector:
        """Outer product of the factor vectors (without the scale)."""
        from bladekit.algebra.multivector import outer_product

        out = self.vectors[0]
        for v in self.vectors[1:]:
            out = outer_product(out, v)
        return out

    def reconstruct(self) -> Multivector:
        """``scale * (v_1 ^ ... ^ v_r)``."""
        return self.wedge().scale(self.scale)


@dataclass(frozen=True)
class RankSpace:
    """Solution space ``{x : x ^ B = 0}`` of an r-vector.

    Parameters
    ----------
    dimension : int
        Dimension of the space.
    basis : tuple of Multivector
        Grade-1 basis vectors with primitive integer coefficients.
    """

    dimension: int
    basis: tuple[Multivector, ...]


@dataclass(frozen=True)
class TrialRecord:
    """Verdicts for one generated instance of an equivalence sweep.

    Parameters
    ----------
    trial : int
        Trial index the instance was drawn in.
    kind : str
        ``"blade"`` (outer product of random vectors) or ``"rvector"``
        (sparse random r-vector).
    expression : str
        Canonical text of the instance, parseable by the CLI.
    oracle, plucker, nguyen, span : bool
        Blade verdict of each criterion.
    quadratic : bool or None
        For grade 2, whether every quadratic relation vanishes.
    wedge : bool or None
        For grade 2, whether ``B ^ B`` vanishes.
    parity : bool or None
        For a non-scalar ``B^2``, whether the parity construction produced
        a witness with a nonzero Plücker residual; ``None`` when ``B^2`` is
        a scalar.
    identity : bool or None
        For an instance passing the Plücker relations, whether
        ``BvB = (-1)^(r+1) (B . B) v`` holds for every probe vector;
        ``None`` otherwise.
    """

    trial: int
    kind: str
    expression: str
    oracle: bool
    plucker: bool
    nguyen: bool
    span: bool
    quadratic: bool | None = None
    wedge: bool | None = None
    parity: bool | None = None
    identity: bool | None = None

    @property
    def agree(self) -> bool:
        verdicts = {self.oracle, self.plucker, self.nguyen, self.span}
        verdicts.update(v for v in (self.quadratic, self.wedge) if v is not None)
        return len(verdicts) == 1 and self.parity is not False and self.identity is not False

    def to_dict(self) -> dict[str, Any]:
        return {
            "trial": self.trial,
            "kind": self.kind,
            "expression": self.expression,
            "oracle": self.oracle,
            "plucker": self.plucker,
            "nguyen": self.nguyen,
            "span": self.span,
            "quadratic": self.quadratic,
            "wedge": self.wedge,
            "parity": self.parity,
            "identity": self.identity,
            "agree": self.agree,
        }


@dataclass(frozen=True)
class TrialReport:
    """Summary of an equivalence sweep.

    Parameters
    ----------
    n, r : int
        Ambient dimension and grade.
    trials : int
        Number of trials run (two instances each).
    seed : int
        Base seed; trial ``i`` derives its generator from ``(seed, i)``.
    bound : int
        Coefficient bound used by the generators.
    instances : int
        Number of instances evaluated.
    agreements : int
        Instances on which all criteria agreed.
    quadratic_checks : int
        Instances additionally cross-checked against the grade-2 quadratic
        relations.
    parity_checks : int
        Instances with a non-scalar square whose parity witness was verified.
    identity_checks : int
        Instances passing the Plücker relations on which the ``BvB``
        identity was verified.
    disagreement : TrialRecord or None
        First instance on which the criteria disagreed, for replay.
    records : tuple of TrialRecord
        Every evaluated instance, in trial order.
    """

    n: int
    r: int
    trials: int
    seed: int
    bound: int
    instances: int
    agreements: int
    quadratic_checks: int = 0
    parity_checks: int = 0
    identity_checks: int = 0
    disagreement: TrialRecord | None = None
    records: tuple[TrialRecord, ...] = field(default=(), repr=False)

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.instances

    def to_dict(self) -> dict[str, Any]:
        """Flat summary (records excluded), stable across runs."""
        return {
            "n": self.n,
            "r": self.r,
            "trials": self.trials,
            "seed": self.seed,
            "bound": self.bound,
            "instances": self.instances,
            "agreements": self.agreements,
            "quadratic_checks": self.quadratic_checks,
            "parity_checks": self.parity_checks,
            "identity_checks": self.identity_checks,
            "verdict": "agreement" if self.all_agree else "disagreement",
            "disagreement": (
                None if self.disagreement is None
                else {**self.disagreement.to_dict(), "n": self.n, "r": self.r,
                      "seed": self.seed, "bound": self.bound}
            ),
        }
