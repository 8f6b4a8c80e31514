# cli/app.py
# Entry point of the command line: python codes_nur4/cli/app.py <command> [options]

import logging
import os
import sys

import click

# --- Dynamically adjust Python's import path ---
current_file_path = os.path.abspath(__file__)
current_directory = os.path.dirname(current_file_path)
project_root = os.path.dirname(current_directory)
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from cli.commands.classify_codes import classify  # noqa: E402
from cli.commands.inspect_code import inspect_code  # noqa: E402
from cli.commands.plot import plot  # noqa: E402
from cli.commands.ring import ring  # noqa: E402
from cli.commands.tables import tables  # noqa: E402


@click.group(name="nur4", context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", count=True, help="-v for progress messages, -vv for debug output.")
def cli(verbose):
    """Classify linear codes over the non-unital ring E of order 4."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s",
                        stream=sys.stderr, force=True)


cli.add_command(ring)
cli.add_command(inspect_code, name="inspect")
cli.add_command(classify)
cli.add_command(tables)
cli.add_command(plot)


def main():
    cli(prog_name="nur4")


if __name__ == "__main__":
    main()
