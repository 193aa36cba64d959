"""Command for validating input files."""

import click

from parcoh.cohomology.actions import validate_action
from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.core.validation import validate as validate_table
from parcoh.extensions.twisting import validate_twisting_pair
from parcoh.formats.codec import load_action, load_partial_group, load_twisting_pair
from parcoh.reports import validation_report

KINDS = ("partial-group", "action", "twisting-pair")


@click.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--kind",
    type=click.Choice(KINDS),
    default="partial-group",
    show_default=True,
    help="What the file describes",
)
@format_option
@handles_errors
def validate(path: str, kind: str, fmt: str) -> None:
    """Check a file against the axioms of its kind."""
    if kind == "action":
        action = load_action(path)
        table_report = validate_table(action.table)
        report = validate_action(action)
        report.violations[:0] = table_report.violations
    elif kind == "twisting-pair":
        report = validate_twisting_pair(load_twisting_pair(path))
    else:
        report = validate_table(load_partial_group(path))
    emit(validation_report("validate", report), fmt)
