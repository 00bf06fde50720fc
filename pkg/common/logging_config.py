import logging
import os
import sys
from typing import Optional

from common.constants import PROJECT_PACKAGES

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
TAGGED_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - [%(run_tag)s] - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class RunTagFilter(logging.Filter):
    """Attach the run tag (seed and command) to every log record."""

    def __init__(self, run_tag: Optional[str] = None):
        super().__init__()
        self.run_tag = run_tag or "-"

    def filter(self, record: logging.LogRecord) -> bool:
        """Set ``record.run_tag`` so formatters can always reference it."""
        record.run_tag = self.run_tag
        return True


def _build_handler(level: int, run_tag: Optional[str]) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    fmt = TAGGED_LOG_FORMAT if run_tag else LOG_FORMAT
    handler.setFormatter(logging.Formatter(fmt, datefmt=DATE_FORMAT))
    handler.addFilter(RunTagFilter(run_tag))
    return handler


def setup_logging(
    component_name: str,
    log_level: Optional[str] = None,
    run_tag: Optional[str] = None
) -> logging.Logger:
    """
    Set up logging for a component and for every project package.

    Results go to stdout, so log records are written to stderr.

    Args:
        component_name: Name of the component (e.g., 'cli')
        log_level: Log level (DEBUG, INFO, WARNING, ERROR). Defaults to LOG_LEVEL env var or INFO
        run_tag: Optional tag (e.g., 'seed=7') included in every log line

    Returns:
        Configured logger instance for the component
    """
    if log_level is None:
        log_level = os.getenv('LOG_LEVEL', 'INFO').upper()

    level = getattr(logging, log_level.upper(), logging.INFO)

    names = [component_name] + [p for p in PROJECT_PACKAGES if p != component_name]
    for name in names:
        logger = logging.getLogger(name)
        logger.setLevel(level)
        if logger.handlers:
            for handler in logger.handlers:
                handler.setLevel(level)
            continue
        logger.addHandler(_build_handler(level, run_tag))
        logger.propagate = False

    return logging.getLogger(component_name)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the given name.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)


def set_run_tag(run_tag: str) -> None:
    """
    Update the handlers of all project packages to include a run tag.

    Args:
        run_tag: Tag to include (e.g., 'seed=7')
    """
    for name in PROJECT_PACKAGES:
        for handler in logging.getLogger(name).handlers:
            handler.setFormatter(logging.Formatter(TAGGED_LOG_FORMAT, datefmt=DATE_FORMAT))
            for f in handler.filters:
                if isinstance(f, RunTagFilter):
                    f.run_tag = run_tag
