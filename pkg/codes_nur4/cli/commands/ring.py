import click

from scripts import ring_core


@click.group()
def ring():
    """The ring E itself."""


@ring.command("tables")
def ring_tables():
    """Print the addition and multiplication tables (rows and columns 0, a, b, c)."""
    click.echo(ring_core.format_tables())
