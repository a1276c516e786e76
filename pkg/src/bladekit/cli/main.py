"""bladekit CLI entry point.

Provides the ``bladekit`` command with subcommands to test an r-vector for
decomposability, factor a blade, inspect its rank space and run randomized
equivalence sweeps of the criteria.

Exit status: 0 blade (or full agreement), 1 usage or input error, 2 not a
blade, 3 criteria disagree, 4 internal fault.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from typing import TYPE_CHECKING, NoReturn

from bladekit import __version__
from bladekit.core.constants import (
    EXIT_BLADE,
    EXIT_DISAGREEMENT,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_FAULT,
    EXIT_NOT_A_BLADE,
)

if TYPE_CHECKING:
    from bladekit.algebra.multivector import Multivector
    from bladekit.cli.reports import Report


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _add_input_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("expression", help='Multivector expression, or "-" to read stdin')
    p.add_argument("-n", type=int, required=True, help="Ambient dimension (1-64)")
    p.add_argument("--grade", type=int, default=None, help="Grade r (inferred when omitted)")
    p.add_argument("--json", action="store_true", help="Emit one JSON document")


def build_parser() -> argparse.ArgumentParser:
    """Build the CLI argument parser with all subcommands.

    Returns
    -------
    argparse.ArgumentParser
        Configured argument parser.
    """
    from bladekit.oracle.criteria import CRITERIA

    parser = _Parser(
        prog="bladekit",
        description="Exact blade tests and factorization in Euclidean geometric algebra",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    # bladekit check
    check_parser = sub.add_parser("check", help="Decide whether an r-vector is a blade")
    _add_input_arguments(check_parser)
    check_parser.add_argument(
        "--method",
        default="all",
        choices=[*CRITERIA, "all"],
        help="Criterion to apply",
    )
    check_parser.add_argument(
        "--verbose", action="store_true", help="Explain the sign conventions of residuals"
    )
    check_parser.add_argument(
        "--all-failures",
        action="store_true",
        help="List every failing Plücker relation, not just the first",
    )

    # bladekit factor
    factor_parser = sub.add_parser("factor", help="Factor a blade into vectors")
    _add_input_arguments(factor_parser)

    # bladekit rank
    rank_parser = sub.add_parser("rank", help="Rank space and span rank")
    _add_input_arguments(rank_parser)

    # bladekit trials
    trials_parser = sub.add_parser("trials", help="Randomized equivalence sweep")
    trials_parser.add_argument("-n", type=int, default=None, help="Ambient dimension (1-12)")
    trials_parser.add_argument("-r", type=int, default=None, help="Grade")
    trials_parser.add_argument("--trials", type=int, default=None, help="Number of trials")
    trials_parser.add_argument("--seed", type=int, default=None, help="Base seed (uint64)")
    trials_parser.add_argument("--bound", type=int, default=None, help="Coefficient bound")
    trials_parser.add_argument("--config", default=None, help="YAML file with a trials section")
    trials_parser.add_argument("--output", default=None, help="Directory for run artifacts")
    trials_parser.add_argument("--parallel", action="store_true", help="Use worker processes")
    trials_parser.add_argument("--json", action="store_true", help="Emit one JSON document")

    return parser


def _read_input(args: argparse.Namespace) -> tuple[str, Multivector, int]:
    """Parse the expression argument and settle the grade."""
    from bladekit.cli.expression import parse_multivector
    from bladekit.core.errors import GradeError

    source = sys.stdin.read().strip() if args.expression == "-" else args.expression
    b = parse_multivector(source, args.n)
    r = args.grade if args.grade is not None else b.homogeneous_grade()
    if r is None:
        raise GradeError(
            "cannot infer the grade of a zero or mixed-grade input; pass --grade"
        )
    return source, b, r


def _emit(fields: Report, as_json: bool, notes: list[str] | None = None) -> None:
    from bladekit.cli.reports import render_json, render_text

    print(render_json(fields) if as_json else render_text(fields))
    for note in notes or []:
        print(f"note: {note}", file=sys.stderr)


def cmd_check(args: argparse.Namespace) -> int:
    """Apply the requested criteria to one r-vector.

    Parameters
    ----------
    args : argparse.Namespace
        ``expression``, ``n``, ``grade``, ``method``, ``json``, ``verbose``
        and ``all_failures``.

    Returns
    -------
    int
        0 blade, 2 not a blade, 3 if the criteria disagree.
    """
    from bladekit.algebra.multivector import require_rvector
    from bladekit.cli.reports import check_fields, failure_fields, sign_notes
    from bladekit.core.models import CheckReport
    from bladekit.core.protocols import WitnessCriterion
    from bladekit.oracle.blade_oracle import rank_space_dimension
    from bladekit.oracle.criteria import CRITERIA
    from bladekit.plucker.relations import plucker_failures

    source, b, r = _read_input(args)
    require_rvector(b, r)

    names = list(CRITERIA) if args.method == "all" else [args.method]
    reports: dict[str, CheckReport] = {}
    verdicts: dict[str, bool] = {}
    for name in names:
        crit = CRITERIA[name]
        if isinstance(crit, WitnessCriterion):
            reports[name] = crit.check(b, r)
        else:
            verdicts[name] = crit.is_blade(b, r)
    rank_dim = rank_space_dimension(b) if "oracle" in names else None

    fields = check_fields(source, b, r, args.method, reports, verdicts, rank_dim)
    if getattr(args, "all_failures", False):
        fields.update(failure_fields(plucker_failures(b, r), b.dimension))
    notes = sign_notes(reports, b.dimension) if getattr(args, "verbose", False) else None
    _emit(fields, args.json, notes)
    return _verdict_code(fields["verdict"])


def _verdict_code(verdict: str) -> int:
    return {
        "blade": EXIT_BLADE,
        "not_a_blade": EXIT_NOT_A_BLADE,
    }.get(verdict, EXIT_DISAGREEMENT)


def cmd_factor(args: argparse.Namespace) -> int:
    """Factor a blade and echo the verified reconstruction.

    Parameters
    ----------
    args : argparse.Namespace
        ``expression``, ``n``, ``grade``, ``json``.

    Returns
    -------
    int
        0 on success, 2 (with the failing witness) if not a blade.
    """
    from bladekit.cli.reports import factor_fields, not_a_blade_fields
    from bladekit.core.errors import NotABladeError
    from bladekit.plucker.factor import factorize

    source, b, r = _read_input(args)
    try:
        fac = factorize(b, r)
    except NotABladeError as e:
        _emit(not_a_blade_fields(source, b, r, e.report), args.json)
        return EXIT_NOT_A_BLADE
    _emit(factor_fields(source, b, r, fac), args.json)
    return EXIT_BLADE


def cmd_rank(args: argparse.Namespace) -> int:
    """Report ``dim V_B`` with a basis, and the span rank.

    Parameters
    ----------
    args : argparse.Namespace
        ``expression``, ``n``, ``grade``, ``json``.

    Returns
    -------
    int
        0 if ``dim V_B == r``, otherwise 2.
    """
    from bladekit.cli.reports import rank_fields
    from bladekit.plucker.rank import rank_space, span_rank

    source, b, r = _read_input(args)
    space = rank_space(b, r)
    fields = rank_fields(source, b, r, space, span_rank(b, r))
    _emit(fields, args.json)
    return _verdict_code(fields["verdict"])


def _trial_config(args: argparse.Namespace) -> tuple[dict[str, object], str | None]:
    """Merge ``--config`` file values with command-line overrides."""
    from bladekit.io.config_loader import load_config

    values: dict[str, object] = {}
    output_dir = None
    if getattr(args, "config", None):
        cfg = load_config(args.config)
        values = cfg.trials.model_dump()
        output_dir = cfg.project.output_dir
    for key in ("n", "r", "trials", "seed", "bound"):
        value = getattr(args, key, None)
        if value is not None:
            values[key] = value
    output = getattr(args, "output", None)
    return values, output if output else output_dir


def cmd_trials(args: argparse.Namespace) -> int:
    """Run an equivalence sweep of all criteria against the oracle.

    Parameters
    ----------
    args : argparse.Namespace
        ``n``, ``r``, ``trials``, ``seed``, ``bound``, ``json``, and
        optionally ``config``, ``output``, ``parallel``.

    Returns
    -------
    int
        0 on full agreement, 3 on any disagreement.
    """
    from bladekit.cli.reports import trial_fields
    from bladekit.io.config_loader import TrialConfig
    from bladekit.oracle.trials import records_frame, run_equivalence_trials

    values, output_dir = _trial_config(args)
    cfg = TrialConfig.model_validate(values)
    report = run_equivalence_trials(cfg, parallel=getattr(args, "parallel", False))
    fields = trial_fields(report)

    if output_dir:
        from bladekit.io.workspace import RunContext

        ctx = RunContext(output_dir=output_dir, run_id=f"n{cfg.n}_r{cfg.r}_s{cfg.seed}")
        ctx.save_config_snapshot({"trials": cfg.model_dump()})
        ctx.save_records_parquet(records_frame(report))
        ctx.save_report_json(fields)
        print(f"Artifacts saved to: {ctx.run_dir}", file=sys.stderr)

    _emit(fields, args.json)
    return EXIT_BLADE if report.all_agree else EXIT_DISAGREEMENT


def main(argv: list[str] | None = None) -> None:
    """CLI entry point: parse arguments and dispatch to the subcommand handler."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        sys.exit(EXIT_BLADE)

    dispatch = {
        "check": cmd_check,
        "factor": cmd_factor,
        "rank": cmd_rank,
        "trials": cmd_trials,
    }

    handler = dispatch[args.command]
    try:
        code = handler(args)
    except (ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
    except Exception as e:
        print(f"Internal error: {e}", file=sys.stderr)
        traceback.print_exc()
        sys.exit(EXIT_INTERNAL_FAULT)
    sys.exit(code)
