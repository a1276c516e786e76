"""Report assembly and rendering for the CLI.

Each command builds a flat ``key -> value`` mapping. Values are strings,
integers, booleans or ``None``; rationals and multivectors are always
written as strings in the canonical expression notation so that JSON
consumers keep exact values. The same mapping renders as aligned text or as
one JSON document.
"""

from __future__ import annotations

import json
from typing import Any

from bladekit.algebra.blades import BasisBladeIndex, reverse_sign
from bladekit.algebra.multivector import Multivector
from bladekit.cli.expression import format_multivector
from bladekit.core.models import CheckReport, Factorization, RankSpace, TrialReport

Report = dict[str, Any]

_CONDITION_NOTES = {
    "plucker": "residual is (v ^ B) with v = ~e_K << B",
    "square": "residual is B^2 minus its scalar part; K comes from the square's cross terms",
    "sandwich": "residual is the non-vector part of B v B with v = ~e_K << B",
}


def _witness_text(k: BasisBladeIndex | None, n: int) -> str | None:
    return None if k is None else k.label(n)


def _mv_text(b: Multivector | None) -> str | None:
    return None if b is None else format_multivector(b)


def check_fields(
    source: str,
    b: Multivector,
    r: int,
    method: str,
    reports: dict[str, CheckReport],
    verdicts: dict[str, bool] | None = None,
    rank_space_dim: int | None = None,
) -> Report:
    """Fields of a ``check`` report.

    Parameters
    ----------
    source : str
        Input text as given.
    b : Multivector
        Parsed input.
    r : int
        Grade used for the checks.
    method : str
        Requested method (a criterion name or ``all``).
    reports : dict
        Reports of the witness-producing criteria, keyed by name.
    verdicts : dict or None
        Verdicts of the remaining criteria, keyed by name.
    rank_space_dim : int or None
        ``dim V_B`` when the oracle ran.
    """
    n = b.dimension
    verdicts = verdicts or {}
    outcomes = [rep.passed for rep in reports.values()] + list(verdicts.values())
    first_failure = next((rep for rep in reports.values() if not rep.passed), None)
    fields: Report = {
        "input": format_multivector(b),
        "source": source,
        "n": n,
        "r": r,
        "method": method,
        "verdict": _verdict(outcomes),
        "witness": None,
        "residual": None,
        "seed": None,
    }
    if first_failure is not None:
        fields["witness"] = _witness_text(first_failure.witness_k, n)
        fields["residual"] = _mv_text(first_failure.residual)
    for name, rep in reports.items():
        fields[f"{name}_verdict"] = "blade" if rep.passed else "not_a_blade"
        fields[f"{name}_witness"] = _witness_text(rep.witness_k, n)
        fields[f"{name}_residual"] = _mv_text(rep.residual)
        fields[f"{name}_condition"] = rep.condition
    for name, ok in verdicts.items():
        fields[f"{name}_verdict"] = "blade" if ok else "not_a_blade"
    if rank_space_dim is not None:
        fields["oracle_rank_space_dim"] = rank_space_dim
    return fields


def failure_fields(
    failures: list[tuple[BasisBladeIndex, Multivector]], n: int
) -> Report:
    """Every failing Plücker relation as ``plucker_failure<i>: K -> residual``."""
    fields: Report = {"plucker_failures": len(failures)}
    for i, (k, res) in enumerate(failures, start=1):
        fields[f"plucker_failure{i}"] = f"{k.label(n)} -> {format_multivector(res)}"
    return fields


def _verdict(verdicts: list[bool]) -> str:
    if all(verdicts):
        return "blade"
    if not any(verdicts):
        return "not_a_blade"
    return "disagreement"


def sign_notes(reports: dict[str, CheckReport], n: int) -> list[str]:
    """Sign convention notes for ``--verbose`` output."""
    notes = ["coefficients follow B_J = B . ~e_J; probe vectors use the reversed blade ~e_K"]
    for name, rep in reports.items():
        if rep.passed or rep.witness_k is None or rep.condition is None:
            continue
        k = rep.witness_k
        sign = "+" if reverse_sign(k.grade) > 0 else "-"
        notes.append(
            f"{name}: K={k.label(n)}, ~e_K = {sign}e_K; {_CONDITION_NOTES[rep.condition]}"
        )
    return notes


def factor_fields(source: str, b: Multivector, r: int, fac: Factorization) -> Report:
    """Fields of a successful ``factor`` report."""
    n = b.dimension
    fields: Report = {
        "input": format_multivector(b),
        "source": source,
        "n": n,
        "r": r,
        "method": "factor",
        "verdict": "blade",
        "witness": None,
        "residual": None,
        "seed": None,
        "scale": str(fac.scale),
        "pivot": fac.pivot.label(n),
    }
    for i, v in enumerate(fac.vectors, start=1):
        fields[f"v{i}"] = format_multivector(v)
    recon = fac.reconstruct()
    fields["reconstruction"] = format_multivector(recon)
    fields["verified"] = recon == b
    return fields


def not_a_blade_fields(source: str, b: Multivector, r: int, rep: CheckReport) -> Report:
    """Fields of a ``factor`` report for an input that is not a blade."""
    n = b.dimension
    return {
        "input": format_multivector(b),
        "source": source,
        "n": n,
        "r": r,
        "method": "factor",
        "verdict": "not_a_blade",
        "witness": _witness_text(rep.witness_k, n),
        "residual": _mv_text(rep.residual),
        "seed": None,
    }


def rank_fields(
    source: str, b: Multivector, r: int, space: RankSpace, span: int
) -> Report:
    """Fields of a ``rank`` report."""
    n = b.dimension
    fields: Report = {
        "input": format_multivector(b),
        "source": source,
        "n": n,
        "r": r,
        "method": "rank",
        "verdict": "blade" if space.dimension == r else "not_a_blade",
        "witness": None,
        "residual": None,
        "seed": None,
        "rank_space_dim": space.dimension,
    }
    for i, v in enumerate(space.basis, start=1):
        fields[f"basis{i}"] = format_multivector(v)
    fields["span_rank"] = span
    bounds = "holds" if r <= span <= n else "violated"
    fields["span_bounds"] = f"{r} <= {span} <= {n} {bounds}"
    return fields


def trial_fields(report: TrialReport) -> Report:
    """Flat fields of a ``trials`` report, replay data prefixed ``disagreement_``."""
    summary = report.to_dict()
    disagreement = summary.pop("disagreement")
    fields: Report = dict(summary)
    if disagreement is not None:
        for key, value in disagreement.items():
            fields[f"disagreement_{key}"] = value
    return fields


def render_text(fields: Report) -> str:
    """Aligned ``key: value`` lines; ``None`` values are omitted."""
    shown = {k: v for k, v in fields.items() if v is not None}
    width = max((len(k) for k in shown), default=0) + 1
    lines = []
    for key, value in shown.items():
        if isinstance(value, bool):
            value = "yes" if value else "no"
        lines.append(f"{key + ':':<{width}} {value}")
    return "\n".join(lines)


def render_json(fields: Report) -> str:
    """One JSON document with the fields in insertion order."""
    return json.dumps(fields, indent=2)
