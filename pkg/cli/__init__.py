"""Command-line front end."""

from cli.main import main, run
from cli.report import emit_report

__all__ = ["main", "run", "emit_report"]
