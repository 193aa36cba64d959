"""Command for classifying group extensions."""

from typing import Optional

import click

from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.extensions.classification import classify_group_extensions
from parcoh.formats.codec import load_group, load_group_action
from parcoh.reports import Report


@click.command()
@click.option(
    "--kernel",
    "kernel_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Group file of the kernel K",
)
@click.option(
    "--quotient",
    "quotient_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Group file of the quotient H",
)
@click.option(
    "--alpha",
    "alpha_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Automorphisms of K per element of H; trivial if omitted",
)
@click.option("--max-degree", type=click.IntRange(min=3), default=3, show_default=True)
@format_option
@handles_errors
def classify(
    kernel_path: str,
    quotient_path: str,
    alpha_path: Optional[str],
    max_degree: int,
    fmt: str,
) -> None:
    """Classify extensions of H by K with a given outer action."""
    K, H = load_group(kernel_path), load_group(quotient_path)
    alpha = load_group_action(alpha_path, K, H) if alpha_path else None
    result = classify_group_extensions(K, H, alpha, max_degree)
    report = Report(command="classify", ok=result.found)
    report.add(
        result.message,
        count=result.count,
        h2=list(result.h2.invariant_factors),
        solutions=result.solutions,
        exhausted=result.exhausted,
        totals=result.totals,
        unidentified=result.unidentified,
    )
    for i, name in enumerate(result.totals):
        report.lines.append(f"  class {i}: total {name or 'unidentified'}")
    emit(report, fmt)
