"""Equivalence of extensions with the same base and fiber.

An equivalence fixes the fiber pointwise and commutes with the projections.
Since ``(x, g) = (x, 1) . (1, g)`` in every twisted product, such a map is
determined by the images ``(y_g, g)`` of ``(1, g)`` and has the form
``(x, g) -> (x . y_g, g)`` with ``y_1 = 1``. The search backtracks over the
``y_g`` in base id order, pruning on the length-two domain.
"""

from typing import Dict, List, Optional, Tuple

from loguru import logger

from parcoh.config import load_config
from parcoh.core.table import UNIT, Element
from parcoh.errors import SearchBoundExceeded, StructuralError
from parcoh.extensions.twisted_product import ExtensionTable
from parcoh.homotopy.morphisms import PGHom, inverse_hom, is_homomorphism, same_table

Pair = Tuple[Element, Element]


def _check_comparable(e1: ExtensionTable, e2: ExtensionTable) -> None:
    if not same_table(e1.base, e2.base) or not same_table(e1.fiber, e2.fiber):
        raise StructuralError("extensions must share base and fiber")
    if e1.total.max_degree != e2.total.max_degree:
        raise StructuralError("extensions are truncated at different degrees")


def find_equivalence(
    e1: ExtensionTable, e2: ExtensionTable, bound: Optional[int] = None
) -> Optional[PGHom]:
    """An equivalence ``e1 -> e2``, or ``None`` if there is none.

    Raises:
        StructuralError: base or fiber differ.
        SearchBoundExceeded: ``|M|^(|H|-1)`` exceeds ``bound`` (default
            ``PARCOH_EQUIVALENCE_BOUND``).
    """
    _check_comparable(e1, e2)
    limit = load_config().settings.equivalence_bound if bound is None else bound
    base, fiber = e1.base, e1.fiber
    size = fiber.order ** (base.order - 1)
    if size > limit:
        raise SearchBoundExceeded("extension equivalence", size, limit)

    kh = base.order
    # x . y must exist for every fiber element x
    candidates = [
        y for y in fiber.elements if all((x, y) in fiber.prod for x in fiber.elements)
    ]
    over: Dict[Pair, List[Pair]] = {}
    for a, b in e1.total.domain[2]:
        over.setdefault((a % kh, b % kh), []).append((a, b))
    # a base pair is checked once all of g, h and gh carry a y value
    ready: Dict[Element, List[Pair]] = {g: [] for g in base.elements}
    for g, h in over:
        ready[max(g, h, base.prod2(g, h))].append((g, h))

    ys: List[Optional[Element]] = [None] * kh

    def image(e: Element) -> Element:
        x, g = divmod(e, kh)
        return fiber.prod[(x, ys[g])] * kh + g

    def consistent(g: Element) -> bool:
        for p in ready[g]:
            for a, b in over[p]:
                pair = (image(a), image(b))
                if pair not in e2.total.prod:
                    return False
                if e2.total.prod[pair] != image(e1.total.prod[(a, b)]):
                    return False
        return True

    def search(g: Element) -> Optional[PGHom]:
        if g == kh:
            psi = PGHom(e1.total, e2.total, tuple(image(e) for e in e1.total.elements))
            if len(set(psi.map1)) != psi.source.order:
                return None
            if is_homomorphism(psi) and is_homomorphism(inverse_hom(psi)):
                return psi
            return None
        for y in candidates if g != UNIT else (UNIT,):
            ys[g] = y
            if consistent(g):
                found = search(g + 1)
                if found is not None:
                    return found
        ys[g] = None
        return None

    if UNIT not in candidates:
        return None
    psi = search(UNIT)
    logger.debug(
        f"extension equivalence {'found' if psi is not None else 'not found'} "
        f"among at most {size} candidate(s)"
    )
    return psi


def extension_equivalent(
    e1: ExtensionTable, e2: ExtensionTable, bound: Optional[int] = None
) -> bool:
    return find_equivalence(e1, e2, bound) is not None
