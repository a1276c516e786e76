"""YAML config loading with Pydantic v2 validation.

A sweep is described by a :class:`TrialConfig`; a YAML file wraps it in a
:class:`ProjectConfig` with a ``project`` section for the run name and
output directory::

    project:
      name: g6-grade3
      output_dir: ./runs
    trials:
      n: 6
      r: 3
      trials: 100
      seed: 1
"""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import BaseModel, field_validator, model_validator

from bladekit.core.constants import MAX_TRIAL_DIMENSION
from bladekit.oracle.sampling import DEFAULT_BOUND


class TrialConfig(BaseModel):
    """Parameters of one equivalence sweep.

    Parameters
    ----------
    n : int
        Ambient dimension, ``1 <= n <= 12``.
    r : int
        Grade of the generated instances, ``1 <= r <= n``.
    trials : int
        Number of trials; each draws one blade and one r-vector.
    seed : int
        Unsigned 64-bit base seed.
    bound : int
        Numerators lie in ``[-bound, bound]``, denominators in ``[1, bound]``.
    """

    n: int
    r: int
    trials: int = 100
    seed: int = 0
    bound: int = DEFAULT_BOUND

    @field_validator("n")
    @classmethod
    def validate_n(cls, v: int) -> int:
        if not 1 <= v <= MAX_TRIAL_DIMENSION:
            raise ValueError(f"n must be in [1, {MAX_TRIAL_DIMENSION}]")
        return v

    @field_validator("r")
    @classmethod
    def validate_r(cls, v: int) -> int:
        if v < 1:
            raise ValueError("r must be >= 1")
        return v

    @field_validator("trials")
    @classmethod
    def validate_trials(cls, v: int) -> int:
        if v < 1:
            raise ValueError("trials must be >= 1")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        if not 0 <= v < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        return v

    @field_validator("bound")
    @classmethod
    def validate_bound(cls, v: int) -> int:
        if v < 1:
            raise ValueError("bound must be >= 1")
        return v

    @model_validator(mode="after")
    def validate_grade_fits(self) -> TrialConfig:
        if self.r > self.n:
            raise ValueError(f"r={self.r} exceeds n={self.n}")
        return self


class ProjectSection(BaseModel):
    """Run metadata and output settings."""

    name: str = "bladekit"
    output_dir: str = "./runs"


class ProjectConfig(BaseModel):
    """Top-level configuration file."""

    project: ProjectSection = ProjectSection()
    trials: TrialConfig


def load_config(path: str | Path) -> ProjectConfig:
    """Load and validate a YAML config file.

    Parameters
    ----------
    path : str or Path
        Path to the YAML configuration file.

    Returns
    -------
    ProjectConfig
        Validated configuration.

    Raises
    ------
    pydantic.ValidationError
        If the YAML content fails schema validation.
    """
    with open(path) as f:
        raw = yaml.safe_load(f)
    return ProjectConfig.model_validate(raw)
