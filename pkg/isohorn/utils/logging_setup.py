"""Logging configuration for IsoHorn."""

import os
import sys
import logging
from typing import Optional


def setup_logging(name: str = "IsoHorn", log_dir: Optional[str] = None,
                  level: str = "INFO") -> logging.Logger:
    """Set up basic logging configuration.

    Log records go to a file and to stderr. Stdout is left to the command
    results.

    Args:
        name: Name of the logger
        log_dir: Directory to store log files. If None, uses APPDATA/IsoHorn
        level: Logging level name

    Returns:
        Configured logger instance

    Example:
        >>> logger = setup_logging()
        >>> logger.info("Run started")
    """
    if log_dir is None:
        appdata = os.getenv("APPDATA")
        if appdata is None:
            appdata = os.path.expanduser("~/.config")
        log_dir = os.path.join(appdata, "IsoHorn")

    handlers = [logging.StreamHandler(sys.stderr)]
    try:
        os.makedirs(log_dir, exist_ok=True)
        handlers.insert(0, logging.FileHandler(os.path.join(log_dir, "isohorn.log"), mode='w'))
    except OSError:
        # Read-only home directories still get stderr logging
        pass

    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format='%(asctime)s [%(levelname)s] %(message)s',
        handlers=handlers
    )

    return logging.getLogger(name)
