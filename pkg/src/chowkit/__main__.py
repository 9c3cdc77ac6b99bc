"""Allow running the CLI as ``python -m chowkit``."""

from .cli import entry_point

entry_point()
