"""Simplicial operators on a partial group table.

An n-simplex is its word of n edges, so faces and degeneracies act on words:
``d_0`` drops the first entry, ``d_n`` the last, ``d_i`` for ``0 < i < n``
multiplies entries ``i`` and ``i+1``; ``s_i`` inserts the unit after position
``i``.
"""

from typing import List, Tuple

from parcoh.core.table import (
    UNIT,
    Element,
    PartialGroupTable,
    Simplex,
    Word,
    degenerate,
    make_table,
)
from parcoh.errors import DomainError, TruncationError


def _require(table: PartialGroupTable, word: Word) -> None:
    if len(word) > table.max_degree:
        raise TruncationError(len(word), table.max_degree, "word")
    if not table.contains(word):
        raise DomainError(table.name_word(word))


def pi(table: PartialGroupTable, word: Word) -> Element:
    """Extended product of a domain word.

    Computed by repeatedly contracting the leftmost pair; ``pi(()) == 1`` and
    a one-letter word is its own product.

    Raises:
        DomainError: ``word`` is not in the domain.
    """
    word = tuple(word)
    _require(table, word)
    return table.product_of(word)


def contract(table: PartialGroupTable, word: Word, i: int) -> Word:
    """Replace the pair at positions ``i, i+1`` (1-based) by its product."""
    a, b = word[i - 1], word[i]
    return word[: i - 1] + (table.prod2(a, b),) + word[i + 1 :]


def face(table: PartialGroupTable, word: Word, i: int) -> Word:
    """The face ``d_i`` of an n-simplex, ``0 <= i <= n``."""
    word = tuple(word)
    n = len(word)
    if n < 1 or not 0 <= i <= n:
        raise IndexError(f"face d_{i} is undefined on a word of length {n}")
    _require(table, word)
    if i == 0:
        return word[1:]
    if i == n:
        return word[:-1]
    return contract(table, word, i)


def degeneracy(table: PartialGroupTable, word: Word, i: int) -> Word:
    """The degeneracy ``s_i``, inserting the unit after position ``i``.

    Raises:
        TruncationError: the result would be longer than the truncation degree.
    """
    word = tuple(word)
    n = len(word)
    if not 0 <= i <= n:
        raise IndexError(f"degeneracy s_{i} is undefined on a word of length {n}")
    if n + 1 > table.max_degree:
        raise TruncationError(n + 1, table.max_degree, f"degeneracy s_{i}")
    _require(table, word)
    return word[:i] + (UNIT,) + word[i:]


def simplices(table: PartialGroupTable, n: int) -> List[Simplex]:
    """All n-simplices in lexicographic order of element ids.

    Raises:
        TruncationError: ``n`` exceeds the truncation degree.
    """
    return [Simplex(w, degenerate(w)) for w in table.words(n)]


def nondegenerate(table: PartialGroupTable, n: int) -> Tuple[Word, ...]:
    return tuple(w for w in table.words(n) if not degenerate(w))


def invert_word(table: PartialGroupTable, word: Word) -> Word:
    """``(x_1, ..., x_n) -> (x_n^-1, ..., x_1^-1)``; defined on all words."""
    return tuple(table.inv[x] for x in reversed(tuple(word)))


def opposite(table: PartialGroupTable) -> PartialGroupTable:
    """The opposite partial group: words reversed, ``a *op b = b * a``."""
    domain = {
        n: [tuple(reversed(w)) for w in table.domain[n]]
        for n in range(2, table.max_degree + 1)
    }
    prod = {(b, a): value for (a, b), value in table.prod.items()}
    return make_table(table.names, table.inv, table.max_degree, domain, prod)
