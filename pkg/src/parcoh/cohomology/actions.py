"""Coefficient data: actions, local systems and cochains.

Coefficients are a cyclic sum ``G`` in the presentation the user gave; every
automorphism is an :class:`AbHom` on that presentation.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from parcoh.core.table import UNIT, Element, PartialGroupTable, Word
from parcoh.core.validation import ValidationReport
from parcoh.errors import StructuralError
from parcoh.homotopy.morphisms import PGHom
from parcoh.linalg.abelian import (
    AbelianPresentation,
    AbHom,
    Carrier,
    CyclicSum,
    FinAbGroup,
    abelian_group_from_table,
)

Vector = Tuple[int, ...]
Coefficients = Union[Carrier, Sequence[int]]


def _as_sum(coeffs: Coefficients) -> CyclicSum:
    """Coefficients as a cyclic sum; a plain sequence is read as moduli."""
    if isinstance(coeffs, FinAbGroup):
        return coeffs.as_cyclic_sum()
    if isinstance(coeffs, CyclicSum):
        return coeffs
    return CyclicSum(tuple(coeffs))


def _check_maps(
    table: PartialGroupTable, coeffs: CyclicSum, maps: Sequence[AbHom], what: str
) -> Tuple[AbHom, ...]:
    maps = tuple(maps)
    if len(maps) != table.order:
        raise StructuralError(
            f"{what} has {len(maps)} entries for {table.order} elements"
        )
    for x, m in enumerate(maps):
        if m.source != coeffs or m.target != coeffs:
            raise StructuralError(
                f"{what} at {table.names[x]} is not an endomorphism of "
                f"{list(coeffs.moduli)}"
            )
    return maps


@dataclass(frozen=True, eq=False)
class PGAction:
    """An action of a partial group on an abelian group.

    Attributes:
        table: The acting partial group.
        coeffs: The coefficient group ``G``.
        phi: ``phi[x]`` is the automorphism by which ``x`` acts.
    """

    table: PartialGroupTable
    coeffs: CyclicSum
    phi: Tuple[AbHom, ...]

    def __post_init__(self) -> None:
        coeffs = _as_sum(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(
            self, "phi", _check_maps(self.table, coeffs, self.phi, "action")
        )

    @property
    def rank(self) -> int:
        return self.coeffs.rank

    def is_trivial(self) -> bool:
        identity = AbHom.identity(self.coeffs)
        return all(m.equals(identity) for m in self.phi)


@dataclass(frozen=True, eq=False)
class LocalSystem:
    """A local coefficient system on a reduced simplicial set.

    One group ``G`` at the single vertex and an automorphism ``A[x]`` per
    edge, contravariant: ``A(x_1 x_2) = A(x_2) ∘ A(x_1)``.
    """

    table: PartialGroupTable
    coeffs: CyclicSum
    A: Tuple[AbHom, ...]

    def __post_init__(self) -> None:
        coeffs = _as_sum(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(
            self, "A", _check_maps(self.table, coeffs, self.A, "local system")
        )


def trivial_action(table: PartialGroupTable, coeffs: Coefficients) -> PGAction:
    coeffs = _as_sum(coeffs)
    identity = AbHom.identity(coeffs)
    return PGAction(table, coeffs, tuple(identity for _ in table.elements))


def action_from_matrices(
    table: PartialGroupTable,
    coeffs: Coefficients,
    matrices: Mapping[Element, Sequence[Sequence[int]]],
) -> PGAction:
    """Elements missing from ``matrices`` act trivially."""
    coeffs = _as_sum(coeffs)
    phi = []
    for x in table.elements:
        if x in matrices:
            phi.append(AbHom(coeffs, coeffs, tuple(map(tuple, matrices[x]))))
        else:
            phi.append(AbHom.identity(coeffs))
    return PGAction(table, coeffs, tuple(phi))


def validate_action(action: PGAction) -> ValidationReport:
    """Check the action is a homomorphism into ``Aut(G)``.

    Reports ill-defined matrices, ``phi(1) != Id``, ``phi(x^-1) phi(x) != Id``
    and ``phi(x_1 x_2) != phi(x_1) phi(x_2)`` on length-two domain words.
    """
    table = action.table
    report = ValidationReport(subject="action", max_degree=table.max_degree)
    identity = AbHom.identity(action.coeffs)
    for x, m in enumerate(action.phi):
        if not m.is_well_defined():
            report.add("action-well-defined", (table.names[x],), "matrix ignores G")
    if not action.phi[UNIT].equals(identity):
        report.add("action-unit", ("1",), "the unit does not act trivially")
    for x in table.elements:
        if not action.phi[table.inv[x]].compose(action.phi[x]).equals(identity):
            report.add(
                "action-inverse", (table.names[x],), "phi(x^-1) phi(x) is not Id"
            )
    for (a, b), c in sorted(table.prod.items()):
        if not action.phi[c].equals(action.phi[a].compose(action.phi[b])):
            report.add(
                "action-product",
                table.name_word((a, b)),
                "phi(ab) != phi(a) phi(b)",
            )
    return report


def validate_local_system(system: LocalSystem) -> ValidationReport:
    table = system.table
    report = ValidationReport(subject="local system", max_degree=table.max_degree)
    identity = AbHom.identity(system.coeffs)
    if not system.A[UNIT].equals(identity):
        report.add("local-unit", ("1",), "A(1) is not Id")
    for (a, b), c in sorted(table.prod.items()):
        if not system.A[c].equals(system.A[b].compose(system.A[a])):
            report.add(
                "local-functoriality",
                table.name_word((a, b)),
                "A(ab) != A(b) A(a)",
            )
    return report


def local_system_from_action(action: PGAction) -> LocalSystem:
    """``A(x) = phi(x)^-1``, read off as ``phi(x^-1)``.

    For a valid action the two agree; no inversion of matrices is needed, so
    infinite coefficient groups are supported.
    """
    table = action.table
    return LocalSystem(
        table, action.coeffs, tuple(action.phi[table.inv[x]] for x in table.elements)
    )


def induced_center_action(
    base: PartialGroupTable,
    fiber: PartialGroupTable,
    center: Sequence[Element],
    t: Sequence[PGHom],
) -> Tuple[PGAction, AbelianPresentation]:
    """The action of ``base`` on ``Z(fiber)`` obtained by restricting ``t``.

    Args:
        base: The acting partial group.
        fiber: The partial group whose center is the coefficient group.
        center: The elements of ``Z(fiber)``.
        t: One automorphism of ``fiber`` per base element.

    Returns:
        The action on the invariant-factor form of the center and the
        presentation giving coordinates of center elements.
    """
    presentation = abelian_group_from_table(center, fiber.prod2)
    coeffs = presentation.group.as_cyclic_sum()
    phi: List[AbHom] = []
    for g in base.elements:
        images = [presentation.coordinates[t[g](z)] for z in presentation.generators]
        matrix = tuple(
            tuple(images[j][i] for j in range(coeffs.rank)) for i in range(coeffs.rank)
        )
        phi.append(AbHom(coeffs, coeffs, matrix))
    logger.debug(f"center of the fiber is {presentation.group}")
    return PGAction(base, coeffs, tuple(phi)), presentation


@dataclass(frozen=True, eq=False)
class Cochain:
    """A function from the degree-n domain words to ``G``.

    ``values`` follows ``table.words(degree)``; each value is a reduced
    coordinate vector.
    """

    table: PartialGroupTable
    coeffs: CyclicSum
    degree: int
    values: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        coeffs = _as_sum(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        words = self.table.words(self.degree)
        values = tuple(coeffs.reduce(v) for v in self.values)
        if len(values) != len(words) or any(
            len(v) != coeffs.rank for v in self.values
        ):
            raise StructuralError(
                f"a degree-{self.degree} cochain needs {len(words)} values of "
                f"rank {coeffs.rank}"
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def zero(
        cls, table: PartialGroupTable, coeffs: Coefficients, degree: int
    ) -> "Cochain":
        coeffs = _as_sum(coeffs)
        return cls(
            table, coeffs, degree, tuple(coeffs.zero() for _ in table.words(degree))
        )

    @classmethod
    def from_function(
        cls,
        table: PartialGroupTable,
        coeffs: Coefficients,
        degree: int,
        function,
    ) -> "Cochain":
        return cls(
            table,
            _as_sum(coeffs),
            degree,
            tuple(tuple(function(w)) for w in table.words(degree)),
        )

    @classmethod
    def from_vector(
        cls,
        table: PartialGroupTable,
        coeffs: Coefficients,
        degree: int,
        vector: Sequence[int],
    ) -> "Cochain":
        """Split a flat coordinate vector into one value per word."""
        coeffs = _as_sum(coeffs)
        r = coeffs.rank
        count = len(table.words(degree))
        if len(vector) != r * count:
            raise StructuralError("vector length does not match the cochain group")
        return cls(
            table,
            coeffs,
            degree,
            tuple(tuple(vector[i * r : (i + 1) * r]) for i in range(count)),
        )

    def _index(self) -> Dict[Word, int]:
        return {w: i for i, w in enumerate(self.table.words(self.degree))}

    def value(self, word: Iterable[Element]) -> Vector:
        word = tuple(word)
        index = self._index().get(word)
        if index is None:
            raise StructuralError(
                f"{self.table.name_word(word)} is not a degree-{self.degree} word"
            )
        return self.values[index]

    def as_dict(self) -> Dict[Word, Vector]:
        return dict(zip(self.table.words(self.degree), self.values))

    def to_vector(self) -> Vector:
        return tuple(x for v in self.values for x in v)

    def _combine(self, other: "Cochain", sign: int) -> "Cochain":
        if other.table is not self.table or other.degree != self.degree:
            raise StructuralError("cochains live on different complexes")
        return Cochain(
            self.table,
            self.coeffs,
            self.degree,
            tuple(
                tuple(x + sign * y for x, y in zip(a, b))
                for a, b in zip(self.values, other.values)
            ),
        )

    def __add__(self, other: "Cochain") -> "Cochain":
        return self._combine(other, 1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self._combine(other, -1)

    def __neg__(self) -> "Cochain":
        return Cochain.zero(self.table, self.coeffs, self.degree) - self

    def scaled(self, k: int) -> "Cochain":
        return Cochain(
            self.table,
            self.coeffs,
            self.degree,
            tuple(tuple(k * x for x in v) for v in self.values),
        )

    def is_zero(self) -> bool:
        return all(not any(v) for v in self.values)

    def is_normalized(self, i: Optional[int] = None) -> bool:
        """Vanishing on ``s_j`` of every word for ``j < i``.

        With ``i`` omitted (or equal to the degree) this is vanishing on all
        degenerate words.
        """
        limit = self.degree if i is None else i
        for w, v in zip(self.table.words(self.degree), self.values):
            if any(v) and UNIT in w[:limit]:
                return False
        return True

    def degenerate_support(self) -> Optional[Word]:
        """The first degenerate word with a nonzero value, if any."""
        for w, v in zip(self.table.words(self.degree), self.values):
            if any(v) and UNIT in w:
                return w
        return None
