"""Logging setup for the command-line front end."""

import logging
import sys

from cohphase.core.config import get_settings


LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(level: str | None = None) -> None:
    """
    Route library log records to the error stream.

    Args:
        level: Log level name; defaults to the LOG_LEVEL setting
    """
    logging.basicConfig(
        level=level or get_settings().LOG_LEVEL,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
