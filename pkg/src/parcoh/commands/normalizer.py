"""Command for the normalizer and center of a partial group."""

import click

from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.formats.codec import load_partial_group
from parcoh.homotopy.homotopies import center
from parcoh.homotopy.homotopies import normalizer as normalizer_of
from parcoh.reports import Report, format_elements, format_map


@click.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@format_option
@handles_errors
def normalizer(path: str, fmt: str) -> None:
    """List the normalizer N and center Z, up to the truncation degree."""
    table = load_partial_group(path)
    normal = normalizer_of(table)
    central = center(table, normal)
    n_names = [table.names[x] for x in normal]
    z_names = [table.names[x] for x in central]
    report = Report(command="normalizer")
    report.add(
        f"N = {format_elements(n_names)} (|N| = {len(n_names)})", normalizer=n_names
    )
    report.add(f"Z = {format_elements(z_names)} (|Z| = {len(z_names)})", center=z_names)
    for eta, c in normal.items():
        report.lines.append(f"  c_{table.names[eta]}: {format_map(c)}")
    report.data["conjugations"] = {
        table.names[eta]: c.name_map() for eta, c in normal.items()
    }
    report.add(f"up to degree {table.max_degree}", max_degree=table.max_degree)
    emit(report, fmt)
