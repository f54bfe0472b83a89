"""Logging configuration for inducedym."""

import logging
import sys
from pathlib import Path

# A gate value above this share of its limit is reported at WARNING.
NEAR_LIMIT_FRACTION = 0.1


def setup_logging(level: str = "INFO", log_file: str | None = None) -> None:
    """
    Configure logging for the toolkit.

    Records go to stderr; stdout is reserved for command output.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path to a log file, parent directories are created
    """
    log_level = getattr(logging, level.upper(), logging.INFO)

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path, encoding="utf-8"))

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s [%(name)s] %(levelname)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=handlers,
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    """Get a logger for a module. Pass __name__ as the argument."""
    return logging.getLogger(name)


def warn_near_limit(logger: logging.Logger, label: str, value: float, limit: float) -> None:
    """Warn when a tail or residual that passed its gate is still close to the limit."""
    if limit > 0 and NEAR_LIMIT_FRACTION * limit < value <= limit:
        logger.warning("%s %.3g is close to its limit %.3g", label, value, limit)
