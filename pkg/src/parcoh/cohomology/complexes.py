"""The cochain complexes and their cohomology.

The action complex has ``C^n = G^{D_n}`` with

    (δψ)(x_1, ..., x_n) = phi(x_1) ψ(d_0 x) + Σ_{i=1..n} (-1)^i ψ(d_i x).

The normalized complex of a local system keeps only the nondegenerate words
and uses ``A(x_1)^-1`` in place of ``phi(x_1)``; faces that land on a
degenerate word contribute nothing.
"""

from typing import Dict, List, Sequence, Tuple

from loguru import logger

from parcoh.cohomology.actions import (
    Cochain,
    LocalSystem,
    PGAction,
    local_system_from_action,
)
from parcoh.core.simplicial import face, nondegenerate
from parcoh.core.table import UNIT, PartialGroupTable, Word
from parcoh.errors import TruncationError
from parcoh.linalg.abelian import AbHom, CyclicSum, FinAbGroup, iso_class_equal
from parcoh.linalg.homology import homology, kernel_lattice


def cochain_group(action: PGAction, n: int) -> CyclicSum:
    """``C^n``: one copy of ``G`` per degree-n word, in word order."""
    return action.coeffs.repeat(len(action.table.words(n)))


def _assemble(
    coeffs: CyclicSum,
    rows: Sequence[Word],
    columns: Sequence[Word],
    terms,
) -> AbHom:
    """Block matrix with one ``r x r`` block per (row word, column word).

    ``terms(w)`` yields ``(column word, block)`` pairs; blocks landing on
    the same column word add up.
    """
    r = coeffs.rank
    index: Dict[Word, int] = {w: i for i, w in enumerate(columns)}
    matrix: List[List[int]] = [[0] * (r * len(columns)) for _ in range(r * len(rows))]
    for i, w in enumerate(rows):
        for column_word, block in terms(w):
            j = index.get(column_word)
            if j is None:
                continue
            for a in range(r):
                row = matrix[i * r + a]
                for b in range(r):
                    row[j * r + b] += block[a][b]
    return AbHom(
        coeffs.repeat(len(columns)),
        coeffs.repeat(len(rows)),
        tuple(tuple(row) for row in matrix),
    )


def _signed_identity(r: int, sign: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(sign if a == b else 0 for b in range(r)) for a in range(r))


def coboundary(action: PGAction, n: int) -> AbHom:
    """``δ^{n-1}: C^{n-1} -> C^n`` as a block matrix.

    Raises:
        TruncationError: ``n`` exceeds the truncation degree.
    """
    table = action.table
    if n < 1:
        raise ValueError(f"coboundary into degree {n} is undefined")
    if n > table.max_degree:
        raise TruncationError(n, table.max_degree, f"coboundary into degree {n}")
    r = action.rank

    def terms(w: Word):
        yield w[1:], action.phi[w[0]].matrix
        for i in range(1, n + 1):
            yield face(table, w, i), _signed_identity(r, (-1) ** i)

    return _assemble(action.coeffs, table.words(n), table.words(n - 1), terms)


def apply_coboundary(action: PGAction, psi: Cochain) -> Cochain:
    """``δψ`` evaluated directly, without building the matrix."""
    table = action.table
    n = psi.degree + 1
    if n > table.max_degree:
        raise TruncationError(n, table.max_degree, f"coboundary into degree {n}")
    values = psi.as_dict()
    coeffs = action.coeffs

    def evaluate(w: Word) -> List[int]:
        out = list(action.phi[w[0]].apply(values[w[1:]]))
        for i in range(1, n + 1):
            sign = (-1) ** i
            for a, x in enumerate(values[face(table, w, i)]):
                out[a] += sign * x
        return out

    return Cochain.from_function(table, coeffs, n, evaluate)


def _require_degree(table: PartialGroupTable, n: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what} in negative degree {n}")
    if n + 1 > table.max_degree:
        raise TruncationError(n + 1, table.max_degree, what)


def cohomology_group(action: PGAction, n: int) -> FinAbGroup:
    """``H^n`` of the action complex.

    Raises:
        TruncationError: the table is truncated below degree ``n + 1``.
    """
    table = action.table
    _require_degree(table, n, f"H^{n}")
    d_in = (
        coboundary(action, n)
        if n >= 1
        else AbHom.zero(CyclicSum(()), cochain_group(action, 0))
    )
    group = homology(d_in, coboundary(action, n + 1))
    logger.info(f"H^{n} = {group} (action complex, up to degree {table.max_degree})")
    return group


def cocycle_basis(action: PGAction, n: int) -> List[Cochain]:
    """Cochains spanning ``Z^n`` together with the relations of ``C^n``."""
    _require_degree(action.table, n, f"Z^{n}")
    basis = kernel_lattice(coboundary(action, n + 1))
    return [
        Cochain.from_vector(action.table, action.coeffs, n, vector) for vector in basis
    ]


def local_cochain_words(table: PartialGroupTable, n: int) -> Tuple[Word, ...]:
    """Basis words of the normalized ``C^n``: the nondegenerate words."""
    return nondegenerate(table, n)


def local_coboundary(system: LocalSystem, n: int) -> AbHom:
    """``δ^{n-1}`` of the normalized complex with local coefficients.

    The first term is ``A(u_1)^-1 ψ(d_0 x)`` where ``u_1`` is the first edge
    ``x_1``; ``A(x)^-1`` is ``A(x^-1)`` by functoriality.
    """
    table = system.table
    if n < 1:
        raise ValueError(f"coboundary into degree {n} is undefined")
    if n > table.max_degree:
        raise TruncationError(n, table.max_degree, f"coboundary into degree {n}")
    r = system.coeffs.rank

    def terms(w: Word):
        yield w[1:], system.A[table.inv[w[0]]].matrix
        for i in range(1, n + 1):
            image = face(table, w, i)
            if UNIT not in image:
                yield image, _signed_identity(r, (-1) ** i)

    return _assemble(
        system.coeffs,
        local_cochain_words(table, n),
        local_cochain_words(table, n - 1),
        terms,
    )


def normalized_cohomology_group(system: LocalSystem, n: int) -> FinAbGroup:
    """``H^n`` of the normalized complex with local coefficients."""
    table = system.table
    _require_degree(table, n, f"H^{n}")
    d_in = (
        local_coboundary(system, n)
        if n >= 1
        else AbHom.zero(
            CyclicSum(()), system.coeffs.repeat(len(local_cochain_words(table, 0)))
        )
    )
    group = homology(d_in, local_coboundary(system, n + 1))
    logger.info(
        f"H^{n} = {group} (local coefficients, up to degree {table.max_degree})"
    )
    return group


def compare_theories(action: PGAction, n: int) -> bool:
    """Whether both theories give isomorphic ``H^n`` for this action."""
    plain = cohomology_group(action, n)
    local = normalized_cohomology_group(local_system_from_action(action), n)
    agree = iso_class_equal(plain, local)
    if not agree:
        logger.warning(f"H^{n} differs between the theories: {plain} vs {local}")
    return agree
