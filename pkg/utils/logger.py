"""
Logging configuration for the solver and its command-line front end.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

ROOT_LOGGER = "landau"


class ColoredFormatter(logging.Formatter):
    """Console formatter that colours the level name when the stream is a terminal."""

    LEVEL_COLORS = {
        "DEBUG": "\033[2m",       # dim
        "INFO": "\033[34m",       # blue
        "WARNING": "\033[33m",    # yellow
        "ERROR": "\033[1;31m",    # bold red
        "CRITICAL": "\033[1;35m",  # bold magenta
    }
    RESET = "\033[0m"

    def __init__(self, fmt: str, datefmt: Optional[str] = None, use_color: bool = True):
        super().__init__(fmt, datefmt=datefmt)
        self.use_color = use_color

    def format(self, record):
        color = self.LEVEL_COLORS.get(record.levelname)
        if not self.use_color or color is None:
            return super().format(record)

        # Color a copy so other handlers still see the plain level name
        record = logging.makeLogRecord(record.__dict__)
        record.levelname = f"{color}{record.levelname}{self.RESET}"
        return super().format(record)


def setup_logger(
    name: str = ROOT_LOGGER,
    level: str = "INFO",
    log_file: Optional[str] = None,
) -> logging.Logger:
    """
    Set up and configure the logger.

    Args:
        name: Logger name
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path to log file

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))

    # Remove existing handlers
    logger.handlers.clear()

    # Console goes to stderr; stdout is left for command summaries
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG)
    stream_is_tty = hasattr(sys.stderr, "isatty") and sys.stderr.isatty()
    console_format = ColoredFormatter(
        '%(levelname)-8s %(name)s: %(message)s',
        use_color=stream_is_tty,
    )
    console_handler.setFormatter(console_format)
    logger.addHandler(console_handler)

    # File handler (if specified)
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_path)
        file_handler.setLevel(logging.DEBUG)
        file_format = logging.Formatter(
            '%(asctime)s %(levelname)-8s %(name)s [%(module)s:%(lineno)d] %(message)s',
            datefmt='%Y-%m-%dT%H:%M:%S'
        )
        file_handler.setFormatter(file_format)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    """Get a child of the library logger (``landau.<name>``)."""
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
