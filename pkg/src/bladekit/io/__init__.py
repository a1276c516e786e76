"""Trial configuration and run artifacts."""

from bladekit.io.config_loader import ProjectConfig, ProjectSection, TrialConfig, load_config
from bladekit.io.workspace import RunContext

__all__ = ["ProjectConfig", "ProjectSection", "RunContext", "TrialConfig", "load_config"]
