"""Tests for trial config loading and validation."""

import tempfile

import pytest
import yaml
from pydantic import ValidationError

from bladekit.io.config_loader import TrialConfig, load_config

VALID_CONFIG = {
    "project": {"name": "g6_grade3", "output_dir": "./runs"},
    "trials": {"n": 6, "r": 3, "trials": 100, "seed": 1, "bound": 4},
}


class TestConfigLoader:
    def test_valid_config_loads(self) -> None:
        with tempfile.NamedTemporaryFile(suffix=".yaml", mode="w", delete=False) as f:
            yaml.dump(VALID_CONFIG, f)
            f.flush()
            cfg = load_config(f.name)
        assert cfg.project.name == "g6_grade3"
        assert cfg.trials.n == 6
        assert cfg.trials.bound == 4

    def test_project_section_optional(self) -> None:
        with tempfile.NamedTemporaryFile(suffix=".yaml", mode="w", delete=False) as f:
            yaml.dump({"trials": {"n": 4, "r": 2}}, f)
            f.flush()
            cfg = load_config(f.name)
        assert cfg.project.output_dir == "./runs"
        assert cfg.trials.trials == 100
        assert cfg.trials.seed == 0
        assert cfg.trials.bound == 3

    def test_missing_trials_section_rejected(self) -> None:
        with tempfile.NamedTemporaryFile(suffix=".yaml", mode="w", delete=False) as f:
            yaml.dump({"project": {"name": "x"}}, f)
            f.flush()
            with pytest.raises(ValidationError):
                load_config(f.name)


class TestTrialConfig:
    def test_grade_exceeds_dimension(self) -> None:
        with pytest.raises(ValidationError):
            TrialConfig(n=3, r=4)

    @pytest.mark.parametrize("n", [0, 13])
    def test_dimension_range(self, n: int) -> None:
        with pytest.raises(ValidationError):
            TrialConfig(n=n, r=1)

    def test_trial_count(self) -> None:
        with pytest.raises(ValidationError):
            TrialConfig(n=3, r=2, trials=0)

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_range(self, seed: int) -> None:
        with pytest.raises(ValidationError):
            TrialConfig(n=3, r=2, seed=seed)

    def test_bound(self) -> None:
        with pytest.raises(ValidationError):
            TrialConfig(n=3, r=2, bound=0)

    def test_validation_error_is_value_error(self) -> None:
        with pytest.raises(ValueError):
            TrialConfig(n=3, r=0)

    def test_largest_values(self) -> None:
        cfg = TrialConfig(n=12, r=12, seed=2**64 - 1)
        assert cfg.seed == 2**64 - 1
