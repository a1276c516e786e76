from bladekit.cli.main import main

__all__ = ["main"]
