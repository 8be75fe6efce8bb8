"""Run one command line: parse, configure, dispatch, map errors to exit codes."""

import logging
from typing import List, Optional, Tuple

from ..errors import InconsistencyError, IsoHornError
from ..models import ConfigManager
from .context import RunContext
from .output import EXIT_USAGE, CommandResult, write_result
from .parser import build_parser

logger = logging.getLogger("IsoHorn")


def configure(args) -> ConfigManager:
    """Config file, then environment (inside ConfigManager), then flags."""
    config = ConfigManager(args.config)
    for key in ("seed", "prime", "trials", "workers"):
        value = getattr(args, key)
        if value is not None:
            config.set(key, value)
    if args.rational:
        config.set("rational_mode", True)
    if args.log_level:
        config.set("log_level", args.log_level)
    logging.getLogger("IsoHorn").setLevel(getattr(logging, config.log_level, logging.INFO))
    return config


def run(argv: Optional[List[str]] = None) -> Tuple[Optional[CommandResult], int]:
    """Execute one invocation.

    Returns:
        (result, exit code); result is None when argument parsing stopped
        the run (usage errors, --help)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_USAGE
        return None, code

    try:
        ctx = RunContext(configure(args))
        logger.info(f"isohorn {args.command} (seed {ctx.seed}, {ctx.field.describe()})")
        result = args.handler(args, ctx)
    except InconsistencyError as e:
        logger.error(f"{args.command}: {e} {e.details}")
        result = CommandResult(args.command, error=str(e), inconsistent=True,
                               values={"details": e.details})
    except (IsoHornError, ValueError) as e:
        logger.error(f"{args.command}: {e}")
        result = CommandResult(args.command, error=str(e))

    if args.out:
        try:
            write_result(result, args.out)
        except (IOError, OSError) as e:
            result = CommandResult(args.command, error=f"Cannot write {args.out}: {e}")
    logger.info(f"isohorn {args.command}: {result.verdict_label}")
    return result, result.exit_code
