"""Command for checking homotopies between maps of partial groups."""

from typing import Optional

import click

from parcoh.commands.common import emit, format_option, handles_errors
from parcoh.errors import StructuralError
from parcoh.formats.codec import load_element_map
from parcoh.homotopy.homotopies import check_homotopy, homotopy_degree
from parcoh.homotopy.morphisms import is_homomorphism, same_table
from parcoh.reports import Report


@click.command()
@click.argument("f_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("g_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--eta", help="Target element to test; all are tried if omitted")
@format_option
@handles_errors
def homotopy(f_path: str, g_path: str, eta: Optional[str], fmt: str) -> None:
    """Decide whether eta defines a homotopy f <-eta- g."""
    f, g = load_element_map(f_path), load_element_map(g_path)
    if not (same_table(f.source, g.source) and same_table(f.target, g.target)):
        raise StructuralError("the two maps must share source and target")
    report = Report(command="homotopy")
    for name, h in (("f", f), ("g", g)):
        check = is_homomorphism(h)
        if not check:
            report.ok = False
            report.add(
                f"{name} is not a homomorphism: {check.reason} at {check.witness}",
                **{f"{name}_homomorphism": False},
            )
    if not report.ok:
        emit(report, fmt)
        return

    target = f.target
    candidates = [target.index(eta)] if eta is not None else list(target.elements)
    found = [target.names[e] for e in candidates if check_homotopy(f, g, e)]
    degree = homotopy_degree(f)
    report.data.update(witnesses=found, degree=degree)
    if eta is not None:
        report.ok = bool(found)
        verdict = "defines" if found else "does not define"
        report.lines.append(f"{eta} {verdict} a homotopy f <- g up to degree {degree}")
    elif found:
        report.lines.append(f"homotopies f <- g via {', '.join(found)}")
        report.lines.append(f"up to degree {degree}")
    else:
        report.ok = False
        report.lines.append(f"no homotopy f <- g up to degree {degree}")
    emit(report, fmt)
