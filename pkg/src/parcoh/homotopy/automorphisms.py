"""Brute-force isomorphism and automorphism search, and outer classes.

The search assigns images element by element in id order, pairing each
element with its inverse and pruning on the length-two domain. Surviving
bijections are checked in full in both directions.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from loguru import logger

from parcoh.config import load_config
from parcoh.core.table import UNIT, Element, PartialGroupTable
from parcoh.errors import InvariantError, SearchBoundExceeded
from parcoh.homotopy.homotopies import center, normalizer
from parcoh.homotopy.morphisms import PGHom, compose, inverse_hom, is_homomorphism


def _bound(bound: Optional[int]) -> int:
    return load_config().settings.search_bound if bound is None else bound


def _same_shape(a: PartialGroupTable, b: PartialGroupTable) -> bool:
    if a.order != b.order or a.max_degree != b.max_degree:
        return False
    return all(
        len(a.domain[n]) == len(b.domain[n]) for n in range(2, a.max_degree + 1)
    )


def isomorphisms(
    source: PartialGroupTable,
    target: PartialGroupTable,
    bound: Optional[int] = None,
) -> Iterator[PGHom]:
    """All isomorphisms ``source -> target`` in lexicographic order of maps.

    Raises:
        SearchBoundExceeded: ``source`` has more than ``bound`` elements
            (default ``PARCOH_SEARCH_BOUND``).
    """
    limit = _bound(bound)
    if source.order > limit:
        raise SearchBoundExceeded("isomorphism search", source.order, limit)
    if not _same_shape(source, target):
        return
    k = source.order
    pairs_at: Dict[Element, List[Tuple[Element, Element]]] = {
        x: [] for x in range(k)
    }
    for a, b in source.prod:
        pairs_at[a].append((a, b))
        if b != a:
            pairs_at[b].append((a, b))

    images: List[Optional[Element]] = [None] * k
    used = [False] * k
    images[UNIT] = UNIT
    used[UNIT] = True

    def consistent(x: Element) -> bool:
        for a, b in pairs_at[x]:
            fa, fb = images[a], images[b]
            if fa is None or fb is None:
                continue
            if (fa, fb) not in target.prod:
                return False
            fc = images[source.prod[(a, b)]]
            if fc is not None and fc != target.prod[(fa, fb)]:
                return False
        return True

    def assign(x: Element, y: Element) -> Optional[List[Element]]:
        """Set ``x -> y`` and ``x^-1 -> y^-1``; return the newly set ids."""
        xi, yi = source.inv[x], target.inv[y]
        if (xi == x) != (yi == y):
            return None
        if used[y] or (xi != x and (used[yi] or images[xi] is not None)):
            return None
        changed = [x] if xi == x else [x, xi]
        images[x], used[y] = y, True
        if xi != x:
            images[xi], used[yi] = yi, True
        if all(consistent(z) for z in changed):
            return changed
        unassign(changed)
        return None

    def unassign(changed: List[Element]) -> None:
        for z in changed:
            used[images[z]] = False
            images[z] = None

    def search(x: Element) -> Iterator[PGHom]:
        while x < k and images[x] is not None:
            x += 1
        if x == k:
            f = PGHom(source, target, tuple(images))
            if is_homomorphism(f) and is_homomorphism(inverse_hom(f)):
                yield f
            return
        for y in range(1, k):
            changed = assign(x, y)
            if changed is None:
                continue
            yield from search(x + 1)
            unassign(changed)

    yield from search(1)


def find_isomorphism(
    source: PartialGroupTable, target: PartialGroupTable, bound: Optional[int] = None
) -> Optional[PGHom]:
    return next(isomorphisms(source, target, bound), None)


def automorphisms(
    table: PartialGroupTable, bound: Optional[int] = None
) -> List[PGHom]:
    """Every automorphism of ``table`` (up to its truncation degree)."""
    found = list(isomorphisms(table, table, bound))
    logger.debug(
        f"found {len(found)} automorphism(s) of a table of order {table.order}"
    )
    return found


@dataclass
class OuterClasses:
    """Automorphisms grouped by homotopy class.

    Attributes:
        classes: Each class lists its automorphisms in search order; classes
            are ordered by their first member.
        automorphisms: All automorphisms.
        normalizer: The normalizer with its conjugations.
        center: The center.
    """

    classes: List[List[PGHom]]
    automorphisms: List[PGHom]
    normalizer: Dict[Element, PGHom]
    center: Tuple[Element, ...]

    @property
    def representatives(self) -> List[PGHom]:
        return [members[0] for members in self.classes]

    def class_of(self, f: PGHom) -> int:
        for i, members in enumerate(self.classes):
            if any(g.map1 == f.map1 for g in members):
                return i
        raise KeyError(f.map1)


def outer_classes(
    table: PartialGroupTable, bound: Optional[int] = None
) -> OuterClasses:
    """Partition the automorphisms by ``f ~ c_eta ∘ f`` for ``eta`` in N.

    The inner automorphisms are the conjugations by normalizer elements, so
    the classes are computed from the normalizer instead of searching
    homotopies between every pair.

    Raises:
        InvariantError: ``|Aut| * |Z| != |N| * |Out|``.
    """
    auts = automorphisms(table, bound)
    normal = normalizer(table)
    central = center(table, normal)
    position = {f.map1: i for i, f in enumerate(auts)}
    assigned: Dict[int, int] = {}
    classes: List[List[PGHom]] = []
    for i, f in enumerate(auts):
        if i in assigned:
            continue
        images = {compose(c, f).map1 for c in normal.values()}
        members = sorted(position[m] for m in images if m in position)
        for j in members:
            assigned[j] = len(classes)
        classes.append([auts[j] for j in members])
    if len(auts) * len(central) != len(normal) * len(classes):
        logger.error(
            f"|Aut|={len(auts)} |Z|={len(central)} |N|={len(normal)} "
            f"|Out|={len(classes)}"
        )
        raise InvariantError("the sequence Z -> N -> Aut -> Out is not exact")
    logger.debug(
        f"|Aut|={len(auts)}, |N|={len(normal)}, |Z|={len(central)}, "
        f"|Out|={len(classes)}"
    )
    return OuterClasses(classes, auts, normal, central)
