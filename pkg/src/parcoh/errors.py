"""Exception hierarchy for parcoh.

Axiom violations are not exceptions; they are collected in a
:class:`parcoh.core.validation.ValidationReport`. Exceptions are reserved for
malformed input and for operations that cannot be carried out.
"""

from typing import Any, Optional, Sequence


class ParcohError(Exception):
    """Base class for all parcoh errors."""


class StructuralError(ParcohError):
    """Input is malformed: bad indices, missing entries, unreadable files."""


class InvalidGroupError(StructuralError):
    """A finite group table fails the group laws."""


class DomainError(ParcohError):
    """A word is not in the domain of the product."""

    def __init__(self, word: Sequence[Any], message: Optional[str] = None):
        self.word = tuple(word)
        super().__init__(message or f"word {self.word} is not in the domain")


class TruncationError(ParcohError):
    """An operation would need simplices above the truncation degree."""

    def __init__(self, degree: int, max_degree: int, what: str = "operation"):
        self.degree = degree
        self.max_degree = max_degree
        super().__init__(
            f"{what} needs degree {degree} but the table is truncated at "
            f"degree {max_degree}"
        )


class ComplexError(ParcohError):
    """Two consecutive maps do not compose to zero."""

    def __init__(self, generator: int, message: Optional[str] = None):
        self.generator = generator
        super().__init__(
            message or f"composite is nonzero on source generator {generator}"
        )


class NormalizationError(ParcohError):
    """The coboundary of a cochain is not normalized."""

    def __init__(self, witness: Sequence[int], message: Optional[str] = None):
        self.witness = tuple(witness)
        super().__init__(
            message
            or f"coboundary is nonzero on the degenerate word {self.witness}"
        )


class SearchBoundExceeded(ParcohError):
    """A brute-force search was refused because it exceeds its bound."""

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(
            f"{what}: size {size} exceeds the search bound {bound} "
            "(raise PARCOH_SEARCH_BOUND to allow it)"
        )


class InvalidTwistingPairError(ParcohError):
    """A twisting pair fails its conditions."""

    def __init__(self, report: Any):
        self.report = report
        super().__init__(f"invalid twisting pair: {report.summary()}")


class InvariantError(ParcohError):
    """A structural consequence of the theory failed on a computed object."""
