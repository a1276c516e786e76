"""Randomized cross-validation of the decomposability criteria.

Every trial draws one random r-blade and one sparse random r-vector from
its own generator and evaluates every criterion registered in
:data:`~bladekit.oracle.criteria.CRITERIA` on both. Grade-2 instances are
also checked against the quadratic relations and ``B ^ B``; instances with
a non-scalar square must yield a parity witness, and instances passing the
Plücker relations must satisfy the ``BvB`` identity.
"""

from __future__ import annotations

import warnings
from typing import TYPE_CHECKING

import pandas as pd

from bladekit.algebra.multivector import Multivector
from bladekit.core.models import TrialRecord, TrialReport
from bladekit.oracle.criteria import CRITERIA
from bladekit.oracle.sampling import random_blade, random_rvector, trial_rng
from bladekit.plucker.nguyen import blade_vb_identity_residual, parity_witness, square_parity
from bladekit.plucker.relations import (
    plucker_residual,
    quadratic_relations,
    wedge_square,
)

if TYPE_CHECKING:
    from bladekit.io.config_loader import TrialConfig


def evaluate_instance(trial: int, kind: str, b: Multivector, r: int) -> TrialRecord:
    """Run every registered criterion, plus the cross-checks, on one instance."""
    from bladekit.cli.expression import format_multivector

    verdicts = {name: crit.is_blade(b, r) for name, crit in CRITERIA.items()}
    quadratic = wedge = None
    if r == 2:
        quadratic = all(v == 0 for v in quadratic_relations(b).values())
        wedge = wedge_square(b).is_zero()
    parity = None
    if not square_parity(b):
        witness = parity_witness(b, r)
        parity = (
            not verdicts["plucker"]
            and witness is not None
            and not plucker_residual(b, witness).is_zero()
        )
    identity = None
    if verdicts["plucker"]:
        identity = blade_vb_identity_residual(b, r).is_zero()
    return TrialRecord(
        trial=trial,
        kind=kind,
        expression=format_multivector(b),
        oracle=verdicts["oracle"],
        plucker=verdicts["plucker"],
        nguyen=verdicts["nguyen"],
        span=verdicts["span"],
        quadratic=quadratic,
        wedge=wedge,
        parity=parity,
        identity=identity,
    )


def run_trial(n: int, r: int, trial: int, seed: int, bound: int) -> tuple[TrialRecord, TrialRecord]:
    """Draw and evaluate the blade and the r-vector of one trial."""
    rng = trial_rng(seed, trial)
    blade = random_blade(n, r, rng, bound)
    rvector = random_rvector(n, r, rng, bound)
    return (
        evaluate_instance(trial, "blade", blade, r),
        evaluate_instance(trial, "rvector", rvector, r),
    )


class TrialRunner:
    """Runs an equivalence sweep for one :class:`~bladekit.io.config_loader.TrialConfig`.

    Parameters
    ----------
    cfg : TrialConfig
        Validated sweep parameters.
    """

    def __init__(self, cfg: TrialConfig) -> None:
        self.cfg = cfg

    def run(self, parallel: bool = False) -> TrialReport:
        """Evaluate every trial and summarize.

        Parameters
        ----------
        parallel : bool
            Spread trials over worker processes. Each trial seeds its own
            generator, so the report is identical either way.

        Returns
        -------
        TrialReport
            Counts, the first disagreement (if any) and every record.
        """
        pairs = self._run_parallel() if parallel else self._run_sequential()
        records = tuple(rec for pair in pairs for rec in pair)
        return self._summarize(records)

    def _args(self) -> list[tuple[int, int, int, int, int]]:
        c = self.cfg
        return [(c.n, c.r, i, c.seed, c.bound) for i in range(c.trials)]

    def _run_sequential(self) -> list[tuple[TrialRecord, TrialRecord]]:
        return [run_trial(*args) for args in self._args()]

    def _run_parallel(self) -> list[tuple[TrialRecord, TrialRecord]]:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as executor:
            return list(executor.map(_trial_wrapper, self._args()))

    def _summarize(self, records: tuple[TrialRecord, ...]) -> TrialReport:
        c = self.cfg
        disagreements = [rec for rec in records if not rec.agree]
        if disagreements:
            first = disagreements[0]
            warnings.warn(
                f"criteria disagree on trial {first.trial} ({first.kind}): {first.expression}",
                stacklevel=3,
            )
        return TrialReport(
            n=c.n,
            r=c.r,
            trials=c.trials,
            seed=c.seed,
            bound=c.bound,
            instances=len(records),
            agreements=len(records) - len(disagreements),
            quadratic_checks=sum(rec.quadratic is not None for rec in records),
            parity_checks=sum(rec.parity is not None for rec in records),
            identity_checks=sum(rec.identity is not None for rec in records),
            disagreement=disagreements[0] if disagreements else None,
            records=records,
        )


def _trial_wrapper(args: tuple[int, int, int, int, int]) -> tuple[TrialRecord, TrialRecord]:
    """Top-level wrapper for multiprocessing (must be picklable)."""
    return run_trial(*args)


def run_equivalence_trials(cfg: TrialConfig, parallel: bool = False) -> TrialReport:
    """Run the sweep described by *cfg*.

    Examples
    --------
    >>> from bladekit.io.config_loader import TrialConfig
    >>> rep = run_equivalence_trials(TrialConfig(n=3, r=3, trials=5, seed=0))
    >>> rep.instances, rep.all_agree
    (10, True)
    """
    return TrialRunner(cfg).run(parallel=parallel)


def records_frame(report: TrialReport) -> pd.DataFrame:
    """One row per evaluated instance, columns as in :meth:`TrialRecord.to_dict`."""
    return pd.DataFrame([rec.to_dict() for rec in report.records])
