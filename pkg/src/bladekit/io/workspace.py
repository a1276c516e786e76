"""Run context and artifact management."""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import pandas as pd
import yaml


class RunContext:
    """A timestamped output directory for one sweep.

    Parameters
    ----------
    output_dir : str
        Base output directory (default ``"./runs"``).
    run_id : str
        Optional identifier appended to the directory name.
    """

    def __init__(self, output_dir: str = "./runs", run_id: str = "") -> None:
        timestamp = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")
        suffix = f"_{run_id}" if run_id else ""
        self.run_dir = Path(output_dir) / f"run_{timestamp}{suffix}"
        self.run_dir.mkdir(parents=True, exist_ok=True)

    def save_config_snapshot(self, config: dict[str, Any]) -> Path:
        """Write the effective configuration to ``config_snapshot.yaml``."""
        path = self.run_dir / "config_snapshot.yaml"
        with open(path, "w") as f:
            yaml.dump(config, f, default_flow_style=False, sort_keys=False)
        return path

    def save_records_parquet(self, df: pd.DataFrame) -> Path:
        """Write one row per generated instance to ``trials.parquet``."""
        path = self.run_dir / "trials.parquet"
        df.to_parquet(path, index=False)
        return path

    def save_report_json(self, report: dict[str, Any]) -> Path:
        """Write the sweep summary to ``report.json``."""
        path = self.run_dir / "report.json"
        with open(path, "w") as f:
            json.dump(report, f, indent=2)
            f.write("\n")
        return path
