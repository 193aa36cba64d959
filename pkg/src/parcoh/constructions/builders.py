"""Builders for the standard partial groups.

- :func:`bar`: every word over a finite group is composable.
- :func:`free_partial_group`: only unit-padded alternating words on a single
  generator are composable.
- :func:`product`: componentwise cartesian product.
"""

import itertools
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from loguru import logger

from parcoh.config import load_config
from parcoh.constructions.groups import FiniteGroupTable
from parcoh.core.table import UNIT, PartialGroupTable, Word, make_table, tables_equal
from parcoh.errors import StructuralError

INVERSE_PREFIX = "~"


def _degree(max_degree: Optional[int]) -> int:
    if max_degree is None:
        return load_config().settings.default_max_degree
    if max_degree < 2:
        raise StructuralError(f"truncation degree must be at least 2, got {max_degree}")
    return max_degree


def bar(group: FiniteGroupTable, max_degree: Optional[int] = None) -> PartialGroupTable:
    """The bar construction BG: all words are in the domain.

    Elements keep the group's order except that the unit moves to id 0 and is
    renamed ``"1"``.
    """
    N = _degree(max_degree)
    order = [group.unit] + [a for a in range(group.order) if a != group.unit]
    position = bar_ids(group)
    names = ["1"] + [group.names[a] for a in order[1:]]
    if "1" in names[1:]:
        raise StructuralError("only the unit may be named '1'")
    k = group.order
    inv = [position[group.inverse[a]] for a in order]
    prod = {
        (i, j): position[group.mul[order[i]][order[j]]]
        for i in range(k)
        for j in range(k)
    }
    domain = {n: list(itertools.product(range(k), repeat=n)) for n in range(2, N + 1)}
    logger.debug(f"bar construction of a group of order {k} up to degree {N}")
    return make_table(names, inv, N, domain, prod)


def bar_ids(group: FiniteGroupTable) -> Tuple[int, ...]:
    """Id in ``bar(group)`` of each group element."""
    others = [a for a in range(group.order) if a != group.unit]
    position = {a: i for i, a in enumerate([group.unit] + others)}
    return tuple(position[a] for a in range(group.order))


def _alternating_words(n: int, x: int, x_inv: int) -> Iterable[Word]:
    for word in itertools.product((UNIT, x, x_inv), repeat=n):
        letters = [y for y in word if y != UNIT]
        if all(a != b for a, b in zip(letters, letters[1:])):
            yield word


def _free_product(a: int, b: int) -> int:
    """Product on a pair built on one generator, by the counting rule."""
    if a == UNIT:
        return b
    if b == UNIT:
        return a
    # a and b alternate, so they are x and x~ in some order
    return UNIT


def free_partial_group(
    generators: Sequence[str], max_degree: Optional[int] = None
) -> PartialGroupTable:
    """The free partial group on the pointed set ``{1} + generators``.

    Elements are ``1``, then ``x, ~x`` for each generator ``x`` in order. A
    word is in the domain iff, once its units are removed, it alternates
    between ``x`` and ``~x`` for a single generator ``x``; the all-units
    words are built on no generator and always belong to the domain.
    """
    N = _degree(max_degree)
    generators = list(generators)
    if len(set(generators)) != len(generators):
        raise StructuralError("generator names must be distinct")
    for x in generators:
        if not x or x == "1" or x.startswith(INVERSE_PREFIX):
            raise StructuralError(f"invalid generator name {x!r}")
    names: List[str] = ["1"]
    inv: List[int] = [UNIT]
    for x in generators:
        i = len(names)
        names += [x, INVERSE_PREFIX + x]
        inv += [i + 1, i]

    domain: Dict[int, Set[Word]] = {}
    for n in range(2, N + 1):
        words: Set[Word] = {(UNIT,) * n}
        for i in range(len(generators)):
            words.update(_alternating_words(n, 1 + 2 * i, 2 + 2 * i))
        domain[n] = words
    prod = {(a, b): _free_product(a, b) for a, b in domain[2]}
    logger.debug(
        f"free partial group on {len(generators)} generator(s) up to degree {N}: "
        f"|D_2| = {len(domain[2])}"
    )
    return make_table(names, inv, N, domain, prod)


def free_product_of_word(word: Word) -> int:
    """Product of a free-partial-group word by counting ``x`` against ``~x``.

    Used to cross-check the left-fold product. Generator ``x`` has the odd id
    and ``~x`` the following even id.
    """
    letters = [y for y in word if y != UNIT]
    if not letters:
        return UNIT
    base = letters[0] if letters[0] % 2 == 1 else letters[0] - 1
    surplus = sum(1 if y == base else -1 for y in letters)
    if surplus > 0:
        return base
    if surplus < 0:
        return base + 1
    return UNIT


def pair_name(a: str, b: str) -> str:
    return "1" if a == "1" and b == "1" else f"({a},{b})"


def product(a: PartialGroupTable, b: PartialGroupTable) -> PartialGroupTable:
    """Cartesian product, truncated at ``min(N_a, N_b)``.

    The pair ``(x, y)`` gets id ``x * |b| + y``, so ``(1, 1)`` is id 0.
    """
    N = min(a.max_degree, b.max_degree)
    kb = b.order

    def encode(x: int, y: int) -> int:
        return x * kb + y

    names = [pair_name(x, y) for x, y in itertools.product(a.names, b.names)]
    inv = [
        encode(a.inv[x], b.inv[y])
        for x, y in itertools.product(a.elements, b.elements)
    ]
    domain: Dict[int, List[Word]] = {}
    for n in range(2, N + 1):
        domain[n] = [
            tuple(encode(x, y) for x, y in zip(u, v))
            for u in a.words(n)
            for v in b.words(n)
        ]
    prod: Dict[Tuple[int, int], int] = {}
    for (x1, x2), x in a.prod.items():
        for (y1, y2), y in b.prod.items():
            prod[(encode(x1, y1), encode(x2, y2))] = encode(x, y)
    logger.debug(f"product of tables of orders {a.order} and {kb} up to degree {N}")
    return make_table(names, inv, N, domain, prod)


def as_free_generators(table: PartialGroupTable) -> Optional[List[str]]:
    """The generator names if ``table`` is exactly a free partial group.

    The table must use the layout of :func:`free_partial_group`, element
    names included.
    """
    names = table.names
    if len(names) % 2 != 1:
        return None
    generators = list(names[1::2])
    if list(names[2::2]) != [INVERSE_PREFIX + x for x in generators]:
        return None
    try:
        expected = free_partial_group(generators, table.max_degree)
    except StructuralError:
        return None
    return generators if tables_equal(table, expected) else None
