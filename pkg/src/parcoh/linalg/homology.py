"""Homology of a two-step complex of cyclic sums.

For ``A --d_in--> C --d_out--> B`` the work happens in the free lift
``Z^rank(C)``:

1. ``K`` is the lattice of ``v`` with ``d_out v`` in the relations of ``B``;
   it contains the relations of ``C``.
2. The columns of ``d_in`` together with the relations of ``C`` span the
   lattice ``I``, which must lie in ``K``.
3. ``ker / im = K / I``: write the generators of ``I`` in a basis of ``K``
   and take invariant factors.
"""

from math import gcd
from typing import List, Sequence, Tuple

from loguru import logger

from parcoh.errors import ComplexError, StructuralError
from parcoh.linalg.abelian import AbHom, FinAbGroup
from parcoh.linalg.snf import Matrix, snf

Vector = List[int]


def _combine(
    basis: List[Vector], i: int, j: int, a: int, b: int, c: int, d: int
) -> None:
    """``(b_i, b_j) <- (a b_i + b b_j, c b_i + d b_j)``"""
    bi, bj = basis[i], basis[j]
    basis[i] = [a * x + b * y for x, y in zip(bi, bj)]
    basis[j] = [c * x + d * y for x, y in zip(bi, bj)]


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """``(g, s, t)`` with ``s a + t b = g = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _restrict(basis: List[Vector], row: Sequence[int], modulus: int) -> List[Vector]:
    """Sublattice of ``span(basis)`` where ``row . v = 0 mod modulus``."""
    values = [sum(r * x for r, x in zip(row, v) if r) for v in basis]
    if modulus:
        values = [x % modulus for x in values]
    pivot = None
    for j, value in enumerate(values):
        if value == 0:
            continue
        if pivot is None:
            pivot = j
            continue
        # unimodular change of basis moving the gcd onto the pivot vector
        g, s, t = _ext_gcd(values[pivot], value)
        p, q = values[pivot] // g, value // g
        _combine(basis, pivot, j, s, t, -q, p)
        values[pivot], values[j] = g, 0
    if pivot is None:
        return basis
    g = values[pivot]
    if modulus == 0:
        return basis[:pivot] + basis[pivot + 1 :]
    scale = modulus // gcd(g, modulus)
    basis[pivot] = [scale * x for x in basis[pivot]]
    return basis


def kernel_lattice(hom: AbHom) -> Matrix:
    """A basis (as rows) of ``{v in Z^rank(source) : hom(v) = 0}``.

    The lattice contains the relations of the source, so for a finite source
    it has full rank.
    """
    n = hom.source.rank
    basis: List[Vector] = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for row, modulus in zip(hom.matrix, hom.target.moduli):
        basis = _restrict(basis, row, modulus)
    return basis


def _check_composite(d_in: AbHom, d_out: AbHom) -> None:
    for j in range(d_in.source.rank):
        column = [row[j] for row in d_in.matrix]
        if any(d_out.apply(column)):
            raise ComplexError(j)


def _coordinates(basis: Matrix, rank: int, vectors: Sequence[Vector]) -> Matrix:
    """Coordinates of ``vectors`` in the lattice basis, as columns.

    With ``B`` the basis vectors as columns, ``U B V = D`` turns ``B x = y``
    into ``D (V^-1 x) = U y``.
    """
    k = len(basis)
    B = [[basis[c][r] for c in range(k)] for r in range(rank)]
    result = snf(B, cols=k)
    diagonal = result.diagonal
    columns: Matrix = []
    outside = "image generator lies outside the kernel"
    for index, y in enumerate(vectors):
        s = [sum(u * x for u, x in zip(row, y) if u) for row in result.U]
        z = [0] * k
        for i, value in enumerate(s):
            d = diagonal[i] if i < len(diagonal) else 0
            if d == 0:
                if value:
                    raise ComplexError(index, outside)
                continue
            if value % d:
                raise ComplexError(index, outside)
            z[i] = value // d
        columns.append([sum(v * w for v, w in zip(row, z) if v) for row in result.V])
    return [[col[i] for col in columns] for i in range(k)]


def homology(d_in: AbHom, d_out: AbHom) -> FinAbGroup:
    """``ker(d_out) / im(d_in)`` as invariant factors.

    Raises:
        StructuralError: the maps do not meet in a common middle group.
        ComplexError: ``d_out ∘ d_in`` is nonzero; carries the first source
            generator on which it fails.
    """
    if d_in.target != d_out.source:
        raise StructuralError("d_in must land in the source of d_out")
    middle = d_in.target
    _check_composite(d_in, d_out)
    basis = kernel_lattice(d_out)
    k = len(basis)
    r = middle.rank
    generators: List[Vector] = [
        [row[j] for row in d_in.matrix] for j in range(d_in.source.rank)
    ]
    for i, m in enumerate(middle.moduli):
        if m:
            generators.append([m if c == i else 0 for c in range(r)])
    X = _coordinates(basis, r, generators) if generators else [[] for _ in range(k)]
    result = snf(X, cols=len(generators))
    diagonal = list(result.diagonal) + [0] * (k - len(result.diagonal))
    group = FinAbGroup(tuple(d for d in diagonal if d != 1))
    logger.debug(
        f"homology: middle rank {r}, kernel rank {k}, "
        f"{len(generators)} image generators -> {group}"
    )
    return group
