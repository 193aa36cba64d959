"""Axiom checks for partial group tables.

Every check is performed up to the truncation degree N. Violations are
collected, not raised, so a report can list all of them with witnesses.
"""

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from parcoh.core.simplicial import contract, invert_word
from parcoh.core.table import UNIT, PartialGroupTable, Word
from parcoh.errors import DomainError


class ViolationKind(StrEnum):
    """The partial group invariants a table can violate."""

    INVOLUTION = "involution"
    UNIT_LAW = "unit-law"
    INVERSE_PAIR = "inverse-pair"
    SUBWORD_CLOSURE = "subword-closure"
    CONTRACTION_CLOSURE = "contraction-closure"
    PRODUCT_COHERENCE = "product-coherence"
    UNIT_INSERTION = "unit-insertion"
    INVERSION_CLOSURE = "inversion-closure"
    CANCELLATION = "cancellation"
    DEGENERACY = "degeneracy"


@dataclass(frozen=True)
class Violation:
    """One failed condition with the word that exhibits it."""

    kind: str
    witness: Tuple[Any, ...]
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "witness": list(self.witness), "detail": self.detail}


@dataclass
class ValidationReport:
    """Outcome of a validation run.

    An empty violation list means the subject satisfies every checked
    condition up to degree ``max_degree``.
    """

    subject: str
    max_degree: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness: Tuple[Any, ...], detail: str = "") -> None:
        violation = Violation(str(kind), tuple(witness), detail)
        if violation not in self.violations:
            self.violations.append(violation)

    def kinds(self) -> List[str]:
        return sorted({v.kind for v in self.violations})

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject} valid up to degree {self.max_degree}"
        return (
            f"{self.subject}: {len(self.violations)} violation(s) "
            f"({', '.join(self.kinds())}) up to degree {self.max_degree}"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "max_degree": self.max_degree,
            "valid": self.ok,
            "violations": [v.to_dict() for v in self.violations],
        }


def _safe_product(table: PartialGroupTable, word: Word) -> Optional[int]:
    try:
        return table.product_of(word)
    except DomainError:
        return None


def validate(
    table: PartialGroupTable, subject: str = "partial group"
) -> ValidationReport:
    """Check every partial group invariant of ``table`` up to its degree N.

    Structural problems (bad indices, missing products) are rejected when the
    table is constructed, so this only reports axiom violations.
    """
    report = ValidationReport(subject=subject, max_degree=table.max_degree)
    names = table.name_word
    N = table.max_degree

    _check_inversion_and_units(table, report)

    for n in range(2, N + 1):
        for w in table.words(n):
            # subwords of length n - 1 suffice: closure propagates downwards
            for sub in (w[1:], w[:-1]):
                if not table.contains(sub):
                    report.add(
                        ViolationKind.SUBWORD_CLOSURE,
                        names(w),
                        f"subword {names(sub)} is not in the domain",
                    )
            value = _safe_product(table, w)
            if value is None:
                report.add(
                    ViolationKind.CONTRACTION_CLOSURE,
                    names(w),
                    "left-fold product is undefined",
                )
                continue
            for i in range(1, n):
                if (w[i - 1], w[i]) not in table.prod:
                    report.add(
                        ViolationKind.SUBWORD_CLOSURE,
                        names(w),
                        f"pair at position {i} is not in D_2",
                    )
                    continue
                shorter = contract(table, w, i)
                if not table.contains(shorter):
                    report.add(
                        ViolationKind.CONTRACTION_CLOSURE,
                        names(w),
                        f"contracting position {i} gives {names(shorter)}",
                    )
                elif _safe_product(table, shorter) != value:
                    report.add(
                        ViolationKind.PRODUCT_COHERENCE,
                        names(w),
                        f"contracting position {i} changes the product",
                    )
            for k, x in enumerate(w):
                if x == UNIT and not table.contains(w[:k] + w[k + 1 :]):
                    report.add(
                        ViolationKind.DEGENERACY,
                        names(w),
                        f"dropping the unit at position {k + 1} leaves the domain",
                    )

    for n in range(0, N):
        for w in table.words(n):
            value = _safe_product(table, w)
            for i in range(n + 1):
                longer = w[:i] + (UNIT,) + w[i:]
                if not table.contains(longer):
                    report.add(
                        ViolationKind.UNIT_INSERTION,
                        names(w),
                        f"inserting 1 after position {i} leaves the domain",
                    )
                elif value is not None and _safe_product(table, longer) != value:
                    report.add(
                        ViolationKind.UNIT_INSERTION,
                        names(w),
                        f"inserting 1 after position {i} changes the product",
                    )

    for n in range(1, N // 2 + 1):
        for w in table.words(n):
            doubled = invert_word(table, w) + w
            if not table.contains(doubled):
                report.add(
                    ViolationKind.INVERSION_CLOSURE,
                    names(w),
                    f"{names(doubled)} is not in the domain",
                )
            elif _safe_product(table, doubled) != UNIT:
                report.add(
                    ViolationKind.INVERSION_CLOSURE,
                    names(w),
                    f"product of {names(doubled)} is not 1",
                )

    _check_cancellation(table, report)

    if report.ok:
        logger.debug(f"{subject}: valid up to degree {N}")
    else:
        logger.debug(report.summary())
    return report


def _check_inversion_and_units(
    table: PartialGroupTable, report: ValidationReport
) -> None:
    names = table.names
    if table.inv[UNIT] != UNIT:
        report.add(ViolationKind.INVOLUTION, ("1",), "the unit is not self-inverse")
    for x in table.elements:
        if table.inv[table.inv[x]] != x:
            report.add(ViolationKind.INVOLUTION, (names[x],), "inv(inv(x)) != x")
        for pair in ((UNIT, x), (x, UNIT)):
            if pair not in table.prod:
                report.add(
                    ViolationKind.UNIT_LAW,
                    table.name_word(pair),
                    "unit pair is not in D_2",
                )
            elif table.prod[pair] != x:
                report.add(
                    ViolationKind.UNIT_LAW,
                    table.name_word(pair),
                    f"product is {names[table.prod[pair]]}, expected {names[x]}",
                )
        pair = (table.inv[x], x)
        if pair not in table.prod:
            report.add(
                ViolationKind.INVERSE_PAIR,
                table.name_word(pair),
                "(x^-1, x) is not in D_2",
            )
        elif table.prod[pair] != UNIT:
            report.add(
                ViolationKind.INVERSE_PAIR,
                table.name_word(pair),
                "product of (x^-1, x) is not 1",
            )


def _check_cancellation(table: PartialGroupTable, report: ValidationReport) -> None:
    left: Dict[Tuple[int, int], int] = {}
    right: Dict[Tuple[int, int], int] = {}
    for (a, b), value in sorted(table.prod.items()):
        other = left.setdefault((a, value), b)
        if other != b:
            report.add(
                ViolationKind.CANCELLATION,
                table.name_word((a, other, b)),
                "a*b = a*c with b != c",
            )
        other = right.setdefault((b, value), a)
        if other != a:
            report.add(
                ViolationKind.CANCELLATION,
                table.name_word((other, a, b)),
                "b*a = c*a with b != c",
            )
