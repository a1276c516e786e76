"""Independent blade oracle, seeded generators and equivalence sweeps."""

from bladekit.oracle.blade_oracle import RankSpaceOracle, blade_oracle, rank_space_dimension
from bladekit.oracle.criteria import CRITERIA
from bladekit.oracle.sampling import (
    DEFAULT_BOUND,
    random_blade,
    random_rational,
    random_rvector,
    random_vector,
    trial_rng,
)
from bladekit.oracle.trials import (
    TrialRunner,
    evaluate_instance,
    records_frame,
    run_equivalence_trials,
    run_trial,
)

__all__ = [
    "CRITERIA",
    "DEFAULT_BOUND",
    "RankSpaceOracle",
    "TrialRunner",
    "blade_oracle",
    "evaluate_instance",
    "random_blade",
    "random_rational",
    "random_rvector",
    "random_vector",
    "rank_space_dimension",
    "records_frame",
    "run_equivalence_trials",
    "run_trial",
    "trial_rng",
]
