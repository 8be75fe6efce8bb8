"""Main entry point for the isohorn command line."""

import sys
from typing import List, Optional

from isohorn.cli import run
from isohorn.utils import setup_logging

# Set up logging
logger = setup_logging()


def main(argv: Optional[List[str]] = None):
    """Run one subcommand and exit with its code (0 pass, 1 fail, 2 usage error)."""
    logger.debug(f"argv: {sys.argv[1:] if argv is None else argv}")

    result, exit_code = run(argv)

    # Results go to stdout; logs go to stderr and the log file
    if result is not None:
        sys.stdout.write(result.render())
        sys.stdout.flush()

    sys.exit(exit_code)


if __name__ == "__main__":
    main()
