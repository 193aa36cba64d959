"""Homotopies, conjugation, the normalizer and the center.

A homotopy ``f <-eta- g`` between maps ``M -> M'`` is witnessed by the words
``(f x_1, ..., f x_k, eta, g x_{k+1}, ..., g x_n)``: all of them must be in
the domain of ``M'`` with one common product. Every answer here is "up to
degree N": only words that fit under the truncation are inspected.
"""

from typing import Dict, Optional, Tuple

from loguru import logger

from parcoh.core.table import UNIT, Element, PartialGroupTable
from parcoh.errors import InvariantError, StructuralError
from parcoh.homotopy.morphisms import (
    HomCheck,
    PGHom,
    identity_hom,
    is_homomorphism,
    same_map,
    same_table,
)


def homotopy_degree(f: PGHom) -> int:
    """Largest source degree n whose homotopy words (length n+1) are stored."""
    return min(f.source.max_degree, f.target.max_degree - 1)


def check_homotopy(f: PGHom, g: PGHom, eta: Element) -> HomCheck:
    """Whether ``eta`` defines a homotopy ``f <-eta- g``.

    Returns a failed check naming the first source word (in degree then
    lexicographic order) whose homotopy words leave the domain or disagree
    in product.
    """
    if not (same_table(f.source, g.source) and same_table(f.target, g.target)):
        raise StructuralError("homotopic maps must share source and target")
    source, target = f.source, f.target
    if not 0 <= eta < target.order:
        raise StructuralError(f"element {eta} is out of range")
    for n in range(0, homotopy_degree(f) + 1):
        for w in source.words(n):
            fw, gw = f.apply_word(w), g.apply_word(w)
            value: Optional[Element] = None
            for k in range(n + 1):
                omega = fw[:k] + (eta,) + gw[k:]
                if not target.contains(omega):
                    return HomCheck(
                        False,
                        source.name_word(w),
                        f"{target.name_word(omega)} is not in the domain",
                    )
                product = target.product_of(omega)
                if value is None:
                    value = product
                elif product != value:
                    return HomCheck(
                        False,
                        source.name_word(w),
                        f"products differ at position {k}",
                    )
    return HomCheck.passed()


def conjugation(table: PartialGroupTable, eta: Element) -> Optional[PGHom]:
    """The map ``c_eta`` with ``eta . x = c_eta(x) . eta``, if it exists.

    ``c_eta(x)`` is solved by right cancellation, so it is unique when
    defined. Returns ``None`` unless it is defined on every element and is a
    homomorphism.
    """
    solve: Dict[Tuple[Element, Element], Element] = {
        (b, value): a for (a, b), value in table.prod.items()
    }
    images = []
    for x in table.elements:
        if (eta, x) not in table.prod:
            return None
        c = solve.get((eta, table.prod[(eta, x)]))
        if c is None:
            return None
        images.append(c)
    c_eta = PGHom(table, table, tuple(images))
    return c_eta if is_homomorphism(c_eta) else None


def normalizer(table: PartialGroupTable) -> Dict[Element, PGHom]:
    """Elements ``eta`` with ``c_eta <-eta- Id``, each with its ``c_eta``.

    Keys are in increasing id order. The result is checked to be a
    subgroup: closed under products and inverses.

    Raises:
        InvariantError: the elements found are not closed.
    """
    identity = identity_hom(table)
    found: Dict[Element, PGHom] = {}
    for eta in table.elements:
        c_eta = conjugation(table, eta)
        if c_eta is not None and check_homotopy(c_eta, identity, eta):
            found[eta] = c_eta
    _check_subgroup(table, tuple(found), "normalizer")
    logger.debug(
        f"normalizer has {len(found)} element(s) "
        f"(up to degree {table.max_degree})"
    )
    return found


def center(
    table: PartialGroupTable, normal: Optional[Dict[Element, PGHom]] = None
) -> Tuple[Element, ...]:
    """Elements of the normalizer whose conjugation is the identity.

    Raises:
        InvariantError: the center is not closed or not commutative.
    """
    if normal is None:
        normal = normalizer(table)
    identity = identity_hom(table)
    elements = tuple(eta for eta, c in normal.items() if same_map(c, identity))
    _check_subgroup(table, elements, "center")
    for a in elements:
        for b in elements:
            if table.prod.get((a, b)) != table.prod.get((b, a)):
                logger.error(f"center elements {a} and {b} do not commute")
                raise InvariantError(
                    f"center is not commutative on {table.name_word((a, b))}"
                )
    return elements


def _check_subgroup(
    table: PartialGroupTable, elements: Tuple[Element, ...], what: str
) -> None:
    members = set(elements)
    if UNIT not in members:
        raise InvariantError(f"{what} does not contain the unit")
    for a in elements:
        if table.inv[a] not in members:
            logger.error(f"{what} is not closed under inversion at {a}")
            raise InvariantError(
                f"{what} is not closed under inversion at {table.names[a]}"
            )
        for b in elements:
            if table.prod.get((a, b)) not in members:
                logger.error(f"{what} is not closed under products at ({a}, {b})")
                raise InvariantError(
                    f"{what} is not closed under products at "
                    f"{table.name_word((a, b))}"
                )
