"""Commands for building partial group tables."""

from typing import Optional, Tuple

import click
from loguru import logger

from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.constructions.builders import bar as bar_construction
from parcoh.constructions.builders import free_partial_group
from parcoh.constructions.builders import product as product_of
from parcoh.core.table import PartialGroupTable
from parcoh.extensions.twisted_product import twisted_product
from parcoh.formats.codec import (
    dump_extension,
    dump_partial_group,
    load_group,
    load_partial_group,
    load_twisting_pair,
    partial_group_to_model,
)
from parcoh.reports import Report

output_option = click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False),
    help="File to write; the table is printed as JSON when omitted",
)
degree_option = click.option(
    "--max-degree", type=click.IntRange(min=2), help="Truncation degree N"
)
schema_option = click.option(
    "--schema/--no-schema", default=False, help="Also write a .schema.json file"
)


def _summary(kind: str, table: PartialGroupTable, output: Optional[str]) -> Report:
    report = Report(command=f"build {kind}")
    report.add(
        f"{kind}: {table.order} elements, |D_2| = {len(table.domain[2])}, "
        f"truncated at degree {table.max_degree}",
        elements=table.order,
        d2=len(table.domain[2]),
        max_degree=table.max_degree,
    )
    if output:
        report.add(f"wrote {output}", output=output)
    return report


def _write(
    kind: str, table: PartialGroupTable, output: Optional[str], schema: bool, fmt: str
) -> None:
    if output is None:
        click.echo(partial_group_to_model(table).model_dump_json(indent=2))
        return
    dump_partial_group(table, output, write_schema=schema)
    logger.info(f"wrote {kind} table to {output}")
    emit(_summary(kind, table, output), fmt)


@click.group()
def build() -> None:
    """Build a partial group table and write it as a file."""


@build.command()
@click.option(
    "--group",
    "group_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Multiplication-table file of a finite group",
)
@degree_option
@output_option
@schema_option
@format_option
@handles_errors
def bar(
    group_path: str,
    max_degree: Optional[int],
    output: Optional[str],
    schema: bool,
    fmt: str,
) -> None:
    """The bar construction of a finite group."""
    table = bar_construction(load_group(group_path), max_degree)
    _write("bar", table, output, schema, fmt)


@build.command()
@click.option(
    "--generators",
    multiple=True,
    help="Generator names, repeated or comma-separated",
)
@degree_option
@output_option
@schema_option
@format_option
@handles_errors
def free(
    generators: Tuple[str, ...],
    max_degree: Optional[int],
    output: Optional[str],
    schema: bool,
    fmt: str,
) -> None:
    """The free partial group on a set of generators."""
    names = [x.strip() for item in generators for x in item.split(",") if x.strip()]
    _write("free", free_partial_group(names, max_degree), output, schema, fmt)


@build.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@output_option
@schema_option
@format_option
@handles_errors
def product(
    first: str, second: str, output: Optional[str], schema: bool, fmt: str
) -> None:
    """The cartesian product of two partial groups."""
    table = product_of(load_partial_group(first), load_partial_group(second))
    _write("product", table, output, schema, fmt)


@build.command()
@click.argument("pair_path", type=click.Path(exists=True, dir_okay=False))
@degree_option
@output_option
@schema_option
@format_option
@handles_errors
def twisted(
    pair_path: str,
    max_degree: Optional[int],
    output: Optional[str],
    schema: bool,
    fmt: str,
) -> None:
    """The twisted product of a twisting pair."""
    extension = twisted_product(load_twisting_pair(pair_path), max_degree)
    if output is None:
        _write("twisted", extension.total, None, schema, fmt)
        return
    sidecar = dump_extension(extension, output, write_schema=schema)
    report = _summary("twisted", extension.total, output)
    report.add(f"wrote {sidecar}", projection=str(sidecar))
    emit(report, fmt)
