"""Allow running the CLI as ``python -m qbell``."""

from qbell.cli import entry

if __name__ == "__main__":
    entry()
