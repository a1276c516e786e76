"""Allow running as python -m bladekit.cli."""

from bladekit.cli.main import main

if __name__ == "__main__":
    main()
