"""Core datamodels, constants, errors and protocols for bladekit."""

from bladekit.core.constants import (
    COMPACT_NOTATION_MAX,
    MAX_DIMENSION,
    MAX_TRIAL_DIMENSION,
)
from bladekit.core.errors import (
    DimensionMismatchError,
    DivisibilityError,
    ExpressionSyntaxError,
    FactorizationError,
    GradeError,
    NotABladeError,
)
from bladekit.core.models import (
    CheckReport,
    Factorization,
    RankSpace,
    TrialRecord,
    TrialReport,
)
from bladekit.core.protocols import BladeCriterion, WitnessCriterion

__all__ = [
    "COMPACT_NOTATION_MAX",
    "MAX_DIMENSION",
    "MAX_TRIAL_DIMENSION",
    "BladeCriterion",
    "CheckReport",
    "DimensionMismatchError",
    "DivisibilityError",
    "ExpressionSyntaxError",
    "Factorization",
    "FactorizationError",
    "GradeError",
    "NotABladeError",
    "RankSpace",
    "TrialRecord",
    "TrialReport",
    "WitnessCriterion",
]
