"""Command for counting extensions of free partial groups."""

import click

from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.extensions.classification import count_free_extensions
from parcoh.reports import Report


@click.command(name="count-free")
@click.option("--x", "x", type=click.IntRange(min=0), required=True)
@click.option("--y", "y", type=click.IntRange(min=0), required=True)
@click.option("--max-degree", type=click.IntRange(min=2), default=3, show_default=True)
@format_option
@handles_errors
def count_free(x: int, y: int, max_degree: int, fmt: str) -> None:
    """Count extensions of the free partial group on X generators by the
    one on Y generators."""
    count = count_free_extensions(x, y, max_degree)
    emit(Report(command="count-free").add(str(count), count=count, x=x, y=y), fmt)
