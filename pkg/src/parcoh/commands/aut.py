"""Command for automorphisms and outer automorphisms."""

from typing import Optional

import click

from parcoh.commands.common import (
    CommandContext,
    emit,
    format_option,
    handles_errors,
    pass_context,
)
from parcoh.formats.codec import load_partial_group
from parcoh.homotopy.automorphisms import outer_classes
from parcoh.reports import Report, format_map


@click.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--bound",
    type=click.IntRange(min=1),
    help="Largest table searched (default PARCOH_SEARCH_BOUND)",
)
@format_option
@handles_errors
@pass_context
def aut(context: CommandContext, path: str, bound: Optional[int], fmt: str) -> None:
    """List Aut and its homotopy classes Out, up to the truncation degree."""
    if bound is None:
        bound = context.config.settings.search_bound
    table = load_partial_group(path)
    outer = outer_classes(table, bound)
    report = Report(command="aut")
    report.add(
        f"|Aut| = {len(outer.automorphisms)}, |Out| = {len(outer.classes)}, "
        f"|N| = {len(outer.normalizer)}, |Z| = {len(outer.center)} "
        f"(up to degree {table.max_degree})",
        aut=len(outer.automorphisms),
        out=len(outer.classes),
        max_degree=table.max_degree,
        bound=bound,
    )
    for i, members in enumerate(outer.classes):
        report.lines.append(f"class {i}:")
        report.lines.extend(f"  {format_map(f)}" for f in members)
    report.data["classes"] = [[f.name_map() for f in m] for m in outer.classes]
    emit(report, fmt)
