"""Text and JSON rendering of command results.

A :class:`Report` carries the same content twice: as lines for people and
as a dict for scripts. Both renderings are deterministic.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

from parcoh.core.validation import ValidationReport
from parcoh.homotopy.morphisms import PGHom

TEXT = "text"
JSON = "json"
FORMATS = (TEXT, JSON)


@dataclass
class Report:
    """The result of one command.

    Attributes:
        command: The command that produced it.
        ok: False when the result is a mathematical failure (exit 1).
        lines: Human-readable text.
        data: Machine-readable content.
    """

    command: str
    ok: bool = True
    lines: List[str] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def add(self, line: str, **data: Any) -> "Report":
        self.lines.append(line)
        self.data.update(data)
        return self

    def render(self, fmt: str = TEXT) -> str:
        if fmt == JSON:
            payload = {"command": self.command, "ok": self.ok, **self.data}
            return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
        return "\n".join(self.lines)


def format_map(f: PGHom) -> str:
    """``a->b, c->d`` over the non-unit source elements."""
    names = f.name_map()
    return ", ".join(f"{x}->{y}" for x, y in names.items() if x != "1") or "1->1"


def format_elements(names: Iterable[str]) -> str:
    return "{" + ", ".join(names) + "}"


def validation_lines(report: ValidationReport) -> List[str]:
    lines = [report.summary()]
    for v in report.violations:
        witness = "(" + ", ".join(map(str, v.witness)) + ")"
        lines.append(f"  {v.kind}: {witness} {v.detail}".rstrip())
    return lines


def validation_report(command: str, report: ValidationReport) -> Report:
    return Report(
        command=command,
        ok=report.ok,
        lines=validation_lines(report),
        data={"validation": report.to_dict()},
    )
