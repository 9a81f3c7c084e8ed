"""
Centralized logging configuration.

Log records go to stderr (and optionally a file); stdout is reserved for
command output such as summary lines and tables.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

from .settings import settings

DEFAULT_FORMAT = (
    "%(asctime)s - %(name)s - %(levelname)s - "
    "[%(filename)s:%(lineno)d] - %(message)s"
)


def resolve_level(verbose: bool = False, level: Optional[str] = None) -> str:
    """--verbose wins over the configured level."""
    if verbose:
        return "DEBUG"
    return (level or settings.log_level).upper()


def setup_logging(
    level: str = "INFO",
    log_file: Optional[Path] = None,
    format_string: str = DEFAULT_FORMAT,
    stream=None
) -> logging.Logger:
    """
    Configure the root logger once per process.

    Python warnings (numpy overflow, scipy integration warnings) are routed
    through logging so they share the handlers below.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path for logging
        format_string: Record format
        stream: Console stream (default stderr)

    Returns:
        Configured root logger
    """
    formatter = logging.Formatter(format_string)

    root = logging.getLogger()
    root.setLevel(getattr(logging, level.upper()))
    root.handlers.clear()

    console = logging.StreamHandler(stream or sys.stderr)
    console.setFormatter(formatter)
    root.addHandler(console)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)

    # reinstall: another harness may have swapped warnings.showwarning since the last call
    logging.captureWarnings(False)
    logging.captureWarnings(True)
    return root


def get_logger(name: str) -> logging.Logger:
    """Module logger (call with __name__)."""
    return logging.getLogger(name)
