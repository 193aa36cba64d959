"""Finite partial groups and their simplicial operators."""

from parcoh.core.simplicial import (
    contract,
    degeneracy,
    face,
    invert_word,
    nondegenerate,
    opposite,
    pi,
    simplices,
)
from parcoh.core.table import (
    EMPTY_WORD,
    UNIT,
    Element,
    PartialGroupTable,
    Simplex,
    Word,
    degenerate,
    make_table,
    tables_equal,
)
from parcoh.core.validation import (
    ValidationReport,
    Violation,
    ViolationKind,
    validate,
)

__all__ = [
    "EMPTY_WORD",
    "UNIT",
    "Element",
    "PartialGroupTable",
    "Simplex",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "Word",
    "contract",
    "degeneracy",
    "degenerate",
    "face",
    "invert_word",
    "make_table",
    "nondegenerate",
    "opposite",
    "pi",
    "simplices",
    "tables_equal",
    "validate",
]
