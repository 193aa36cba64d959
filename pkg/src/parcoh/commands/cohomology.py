"""Command for cohomology of a partial group with coefficients."""

import click

from parcoh.cohomology.actions import local_system_from_action, validate_action
from parcoh.cohomology.complexes import cohomology_group, normalized_cohomology_group
from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.formats.codec import load_action
from parcoh.linalg.abelian import iso_class_equal
from parcoh.reports import Report, validation_report

THEORIES = ("action", "local", "both")


@click.command()
@click.argument("action_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--degree", "n", type=click.IntRange(min=0), required=True)
@click.option(
    "--theory",
    type=click.Choice(THEORIES),
    default="action",
    show_default=True,
    help="Action complex, normalized local-coefficient complex, or both",
)
@format_option
@handles_errors
def cohomology(action_path: str, n: int, theory: str, fmt: str) -> None:
    """Compute H^n of the partial group in ACTION_PATH."""
    action = load_action(action_path)
    check = validate_action(action)
    if not check.ok:
        emit(validation_report("cohomology", check), fmt)
        return

    report = Report(command="cohomology")
    report.data.update(degree=n, max_degree=action.table.max_degree)
    groups = {}
    if theory in ("action", "both"):
        groups["action"] = cohomology_group(action, n)
    if theory in ("local", "both"):
        groups["local"] = normalized_cohomology_group(
            local_system_from_action(action), n
        )
    for name, group in groups.items():
        label = f"H^{n} = {group}"
        if theory == "both":
            label += f" ({name})"
        report.add(label)
    report.data["groups"] = {
        name: list(group.invariant_factors) for name, group in groups.items()
    }
    if theory == "both":
        agree = iso_class_equal(groups["action"], groups["local"])
        report.ok = agree
        report.add("theories agree" if agree else "theories DISAGREE", agree=agree)
    emit(report, fmt)
