"""Command-line surface: one subcommand per operation, results as key/value lines plus JSON."""

from .context import RunContext
from .output import EXIT_FAIL, EXIT_OK, EXIT_USAGE, CommandResult
from .parser import build_parser
from .runner import run

__all__ = [
    'RunContext',
    'EXIT_FAIL',
    'EXIT_OK',
    'EXIT_USAGE',
    'CommandResult',
    'build_parser',
    'run'
]
