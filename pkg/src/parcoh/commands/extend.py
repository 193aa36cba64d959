"""Command for building the extension of a twisting pair."""

from typing import Optional

import click

from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.errors import InvalidTwistingPairError
from parcoh.extensions.twisted_product import twisted_product
from parcoh.formats.codec import dump_extension, load_twisting_pair
from parcoh.reports import Report, validation_lines, validation_report


@click.command()
@click.argument("pair_path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "-o",
    "--output",
    required=True,
    type=click.Path(dir_okay=False),
    help="Total table file; the projection goes to <name>.projection.json",
)
@click.option("--max-degree", type=click.IntRange(min=2), help="Truncation degree N")
@format_option
@handles_errors
def extend(pair_path: str, output: str, max_degree: Optional[int], fmt: str) -> None:
    """Validate a twisting pair and write its twisted product."""
    pair = load_twisting_pair(pair_path)
    try:
        extension = twisted_product(pair, max_degree)
    except InvalidTwistingPairError as error:
        emit(validation_report("extend", error.report), fmt)
        return
    sidecar = dump_extension(extension, output)
    trivial = extension.check_local_triviality()
    total = extension.total
    report = Report(command="extend", ok=trivial.ok)
    report.add(
        f"total: {total.order} elements, |D_2| = {len(total.domain[2])}, "
        f"valid up to degree {total.max_degree}",
        elements=total.order,
        d2=len(total.domain[2]),
        max_degree=total.max_degree,
    )
    report.lines.extend(validation_lines(trivial))
    report.add(f"wrote {output} and {sidecar}", output=output, projection=str(sidecar))
    report.data["local_triviality"] = trivial.to_dict()
    emit(report, fmt)
