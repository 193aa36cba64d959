"""Enumerating and classifying extensions at desk scale.

Two searches live here:

- extensions of a free base, one per pointed map from the generators to
  ``Out(fiber)``; every such map lifts to a multiplicative ``t`` with
  ``eta = 1``;
- extensions of finite groups, ``bar(H)`` by ``bar(K)``, with ``t`` fixed by
  the given lift of the outer action and ``eta`` found by backtracking.

Neither search computes an obstruction class. When no twisting pair turns
up within the bounds that is reported, never taken as proof of absence.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from parcoh.cohomology.actions import induced_center_action
from parcoh.cohomology.complexes import cohomology_group
from parcoh.config import load_config
from parcoh.constructions.builders import (
    as_free_generators,
    bar,
    bar_ids,
    free_partial_group,
)
from parcoh.constructions.groups import (
    FiniteGroupTable,
    catalog_is_complete,
    is_group_homomorphism,
    small_group_catalog,
)
from parcoh.core.table import UNIT, Element, PartialGroupTable
from parcoh.errors import InvariantError, SearchBoundExceeded, StructuralError
from parcoh.extensions.equivalence import extension_equivalent
from parcoh.extensions.twisted_product import ExtensionTable, twisted_product
from parcoh.extensions.twisting import (
    TwistingPair,
    pair_with_eta,
    validate_twisting_pair,
)
from parcoh.homotopy.automorphisms import find_isomorphism, outer_classes
from parcoh.homotopy.homotopies import center, check_homotopy, normalizer
from parcoh.homotopy.morphisms import PGHom, compose, identity_hom, inverse_hom
from parcoh.linalg.abelian import FinAbGroup

NO_EXTENSION = "no extension found up to search bound"

Pair = Tuple[Element, Element]


def enumerate_outer_actions(
    base: PartialGroupTable, fiber: PartialGroupTable, bound: Optional[int] = None
) -> List[TwistingPair]:
    """One twisting pair per pointed map ``X -> Out(fiber)``.

    Generator ``x`` goes to the first automorphism of its chosen class,
    ``~x`` to the inverse automorphism, and ``eta`` is identically ``1``.

    Raises:
        StructuralError: ``base`` is not a free partial group.
        SearchBoundExceeded: the fiber is too large for the automorphism
            search.
        InvariantError: one of the lifted pairs does not validate.
    """
    generators = as_free_generators(base)
    if generators is None:
        raise StructuralError("outer actions are enumerated only over free bases")
    outer = outer_classes(fiber, bound)
    identity = identity_hom(fiber)
    pairs: List[TwistingPair] = []
    for choice in itertools.product(outer.representatives, repeat=len(generators)):
        t: List[PGHom] = [identity]
        for rep in choice:
            t += [rep, inverse_hom(rep)]
        pair = pair_with_eta(base, fiber, t)
        report = validate_twisting_pair(pair, outer.normalizer)
        if not report.ok:
            logger.error(report.summary())
            raise InvariantError(f"lifted outer action is invalid: {report.summary()}")
        pairs.append(pair)
    logger.debug(
        f"{len(pairs)} outer action(s) of {len(generators)} generator(s) on a "
        f"fiber with |Out| = {len(outer.classes)}"
    )
    return pairs


def free_extension_formula(x: int, y: int) -> int:
    return (math.factorial(y) * 2**y) ** x


def count_free_extensions(
    x: int, y: int, max_degree: int = 3, bound: Optional[int] = None
) -> int:
    """Extensions of the free partial group on ``x`` generators by the one on
    ``y`` generators, up to equivalence.

    Free partial groups have trivial center, so ``H^2`` vanishes and there
    is exactly one class per outer action. The count comes from the
    automorphism search and is cross-checked against
    ``(y! 2^y)^x``.

    Raises:
        InvariantError: the search and the closed formula disagree, or the
            fiber has a nontrivial center.
    """
    if x < 0 or y < 0:
        raise StructuralError("generator counts must be nonnegative")
    base = free_partial_group([f"x{i}" for i in range(1, x + 1)], max_degree)
    fiber = free_partial_group([f"y{i}" for i in range(1, y + 1)], max_degree)
    central = center(fiber)
    if len(central) != 1:
        raise InvariantError(f"free partial group has center of order {len(central)}")
    count = len(enumerate_outer_actions(base, fiber, bound))
    expected = free_extension_formula(x, y)
    if count != expected:
        logger.error(f"found {count} free extension classes, formula gives {expected}")
        raise InvariantError(
            f"free extension count {count} differs from (y! 2^y)^x = {expected}"
        )
    logger.info(f"{count} extension class(es) of free({x}) by free({y})")
    return count


@dataclass
class ClassificationResult:
    """Outcome of :func:`classify_group_extensions`.

    Attributes:
        count: Number of equivalence classes found.
        representatives: One twisted product per class.
        totals: Name of each representative's total from the small group
            catalog, or ``None`` if it matched none.
            Orders from ``CATALOG_LIMIT`` on are only matched against
            abelian groups, so a ``None`` there is an unnamed group.
        h2: ``H^2`` of the base with coefficients in the fiber's center.
        solutions: Number of ``eta`` satisfying the twisting conditions.
        exhausted: Whether the ``eta`` search finished within its bound.
        message: Human-readable status.
    """

    count: int
    representatives: List[ExtensionTable]
    totals: List[Optional[str]]
    h2: FinAbGroup
    solutions: int
    exhausted: bool
    message: str = ""
    eta_values: List[Dict[Pair, Element]] = field(default_factory=list, repr=False)

    @property
    def found(self) -> bool:
        return self.count > 0

    @property
    def unidentified(self) -> List[int]:
        """Indices of representatives whose total matched no catalog group."""
        return [i for i, name in enumerate(self.totals) if name is None]

    @property
    def consistent(self) -> bool:
        """Whether an exhaustive search found ``|H^2|`` classes."""
        if not (self.found and self.exhausted):
            return True
        return self.h2.is_finite and self.count == self.h2.order


def identify_total(
    extension: ExtensionTable, bound: Optional[int] = None
) -> Optional[str]:
    """Name of a catalog group whose bar construction is the total.

    ``None`` when no catalog group matches or the total is larger than the
    isomorphism search bound.
    """
    total = extension.total
    for name, group in small_group_catalog(total.order).items():
        try:
            match = find_isomorphism(total, bar(group, total.max_degree), bound)
        except SearchBoundExceeded as error:
            logger.warning(f"total left unidentified: {error}")
            return None
        if match is not None:
            return name
    return None


def _lift(
    K: FiniteGroupTable,
    H: FiniteGroupTable,
    alpha: Optional[Sequence[Sequence[int]]],
    base: PartialGroupTable,
    fiber: PartialGroupTable,
) -> List[PGHom]:
    """``t`` on ``bar(H)`` from group automorphisms ``alpha[h]`` of ``K``."""
    if alpha is None:
        alpha = [tuple(range(K.order)) for _ in range(H.order)]
    if len(alpha) != H.order:
        raise StructuralError(f"alpha has {len(alpha)} entries for |H| = {H.order}")
    kid, hid = bar_ids(K), bar_ids(H)
    group_of = {b: a for a, b in enumerate(kid)}
    t: List[Optional[PGHom]] = [None] * H.order
    for h, f in enumerate(alpha):
        f = tuple(f)
        if sorted(f) != list(range(K.order)) or not is_group_homomorphism(K, K, f):
            raise StructuralError(f"alpha({H.names[h]}) is not an automorphism of K")
        if h == H.unit and f != tuple(range(K.order)):
            raise StructuralError("alpha of the unit must be the identity")
        images = tuple(kid[f[group_of[i]]] for i in fiber.elements)
        t[hid[h]] = PGHom(fiber, fiber, images)
    return t


def _eta_candidates(
    base: PartialGroupTable,
    t: Sequence[PGHom],
    normal: Dict[Element, PGHom],
    pairs: Sequence[Pair],
) -> Dict[Pair, List[Element]]:
    candidates: Dict[Pair, List[Element]] = {}
    for g, h in pairs:
        target = compose(t[g], t[h])
        gh = t[base.prod2(g, h)]
        candidates[(g, h)] = [
            k
            for k, c_k in normal.items()
            if compose(c_k, gh).map1 == target.map1 and check_homotopy(target, gh, k)
        ]
    return candidates


def search_eta(
    base: PartialGroupTable,
    fiber: PartialGroupTable,
    t: Sequence[PGHom],
    normal: Optional[Dict[Element, PGHom]] = None,
    bound: Optional[int] = None,
) -> Tuple[List[Dict[Pair, Element]], bool]:
    """Every ``eta`` completing ``t`` to a twisting pair.

    ``eta`` is fixed to ``1`` on words with a unit entry; on the other
    length-two words it ranges over normalizer elements that witness the
    homotopy condition, and partial assignments are pruned by the cocycle
    condition on length-three words.

    Returns:
        The solutions in lexicographic order and whether the search ran to
        completion within ``bound`` nodes (``PARCOH_ETA_SEARCH_BOUND``).
    """
    if base.max_degree < 3:
        raise StructuralError("the eta search needs a base truncated at degree >= 3")
    limit = load_config().settings.eta_search_bound if bound is None else bound
    if normal is None:
        normal = normalizer(fiber)
    pairs = sorted(p for p in base.domain[2] if UNIT not in p)
    position = {p: i for i, p in enumerate(pairs)}
    candidates = _eta_candidates(base, t, normal, pairs)

    triples: List[List[Tuple[Element, Element, Element]]] = [[] for _ in pairs]
    for g, h, k in base.words(3):
        needed = [(h, k), (g, base.prod2(h, k)), (g, h), (base.prod2(g, h), k)]
        last = max(position.get(p, -1) for p in needed)
        if last >= 0:
            triples[last].append((g, h, k))

    eta: Dict[Pair, Element] = {p: UNIT for p in base.domain[2]}
    solutions: List[Dict[Pair, Element]] = []
    nodes = 0

    def cocycle_holds(index: int) -> bool:
        for g, h, k in triples[index]:
            hk, gh = base.prod2(h, k), base.prod2(g, h)
            left = (t[g](eta[(h, k)]), eta[(g, hk)])
            right = (eta[(g, h)], eta[(gh, k)])
            if left not in fiber.prod or right not in fiber.prod:
                return False
            if fiber.prod[left] != fiber.prod[right]:
                return False
        return True

    def search(index: int) -> bool:
        nonlocal nodes
        if index == len(pairs):
            solutions.append(dict(eta))
            return True
        for k in candidates[pairs[index]]:
            nodes += 1
            if nodes > limit:
                return False
            eta[pairs[index]] = k
            if cocycle_holds(index) and not search(index + 1):
                return False
        eta[pairs[index]] = UNIT
        return True

    exhausted = search(0)
    logger.debug(
        f"eta search: {len(solutions)} solution(s), {nodes} node(s), "
        f"{'complete' if exhausted else 'stopped at the bound'}"
    )
    return solutions, exhausted


def classify_group_extensions(
    K: FiniteGroupTable,
    H: FiniteGroupTable,
    alpha: Optional[Sequence[Sequence[int]]] = None,
    max_degree: int = 3,
    identify: bool = True,
) -> ClassificationResult:
    """Classify extensions of ``H`` by ``K`` inducing the outer action ``alpha``.

    Args:
        K: The kernel group.
        H: The quotient group.
        alpha: ``alpha[h]`` is an automorphism of ``K`` (as an element map
            in ``K``'s ids) lifting the outer action of ``h``; omitted
            means the trivial action.
        max_degree: Truncation of ``bar(K)`` and ``bar(H)``; at least 3.
        identify: Name the totals from the small group catalog.
    """
    if max_degree < 3:
        raise StructuralError("classification needs truncation degree >= 3")
    fiber, base = bar(K, max_degree), bar(H, max_degree)
    t = _lift(K, H, alpha, base, fiber)
    normal = normalizer(fiber)
    action, _ = induced_center_action(base, fiber, center(fiber, normal), t)
    h2 = cohomology_group(action, 2)

    solutions, exhausted = search_eta(base, fiber, t, normal)
    representatives: List[ExtensionTable] = []
    for eta in solutions:
        extension = twisted_product(pair_with_eta(base, fiber, t, eta))
        if not any(extension_equivalent(rep, extension) for rep in representatives):
            representatives.append(extension)

    totals = [identify_total(rep) if identify else None for rep in representatives]
    if not representatives:
        message = NO_EXTENSION
    else:
        message = f"{len(representatives)} extension class(es), H^2 = {h2}"
        if not exhausted:
            message += " (search stopped at the bound)"
        missing = sum(name is None for name in totals) if identify else 0
        if missing:
            order = K.order * H.order
            complete = "" if catalog_is_complete(order) else " (catalog incomplete)"
            message += f", {missing} total(s) of order {order} unidentified{complete}"
    result = ClassificationResult(
        count=len(representatives),
        representatives=representatives,
        totals=totals,
        h2=h2,
        solutions=len(solutions),
        exhausted=exhausted,
        message=message,
        eta_values=solutions,
    )
    if not result.consistent:
        logger.error(f"{result.count} class(es) found but |H^2| = {h2.order}")
        raise InvariantError(
            f"class count {result.count} does not match H^2 = {h2}"
        )
    logger.info(message)
    return result
