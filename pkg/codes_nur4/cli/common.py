import functools
import logging
import sys

import click

from scripts.errors import Nur4Error

logger = logging.getLogger("nur4")

EXIT_INVALID = 2
EXIT_IO = 3


def handle_errors(func):
    """Turn library errors into exit status 2 and I/O failures into 3."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except Nur4Error as exc:
            logger.debug("%s failed", func.__name__, exc_info=True)
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID)
        except OSError as exc:
            logger.debug("%s failed", func.__name__, exc_info=True)
            click.echo(f"I/O error: {exc}", err=True)
            sys.exit(EXIT_IO)
    return wrapper


def show_progress(disabled):
    return not disabled and sys.stderr.isatty()
