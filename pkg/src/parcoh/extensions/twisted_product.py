"""The twisted cartesian product of a twisting pair.

Total elements are pairs ``(x, g)`` with id ``x * |H| + g``, named like the
elements of :func:`parcoh.constructions.product` so the trivial pair gives
exactly ``product(fiber, base)``. A word ``((x_1, g_1), ..., (x_n, g_n))``
is in the domain iff ``(g_1, ..., g_n)`` is in ``D_n(H)`` and

    (x_1, t(g_1)(x_2), (t(g_1) ∘ t(g_2))(x_3), ...)

is in ``D_n(M)``.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from loguru import logger

from parcoh.constructions.builders import pair_name
from parcoh.core.table import UNIT, Element, PartialGroupTable, Word, make_table
from parcoh.core.validation import ValidationReport, validate
from parcoh.errors import (
    DomainError,
    InvalidTwistingPairError,
    InvariantError,
    StructuralError,
)
from parcoh.extensions.twisting import TwistingPair, validate_twisting_pair
from parcoh.homotopy.morphisms import PGHom, inverse_hom


@dataclass(frozen=True, eq=False)
class ExtensionTable:
    """A twisted product with its projection and fiber inclusion."""

    pair: TwistingPair
    total: PartialGroupTable
    projection: PGHom
    fiber_inclusion: PGHom

    @property
    def base(self) -> PartialGroupTable:
        return self.pair.base

    @property
    def fiber(self) -> PartialGroupTable:
        return self.pair.fiber

    def encode(self, x: Element, g: Element) -> Element:
        return x * self.base.order + g

    def decode(self, element: Element) -> Tuple[Element, Element]:
        return divmod(element, self.base.order)

    def fiber_over(self, word: Word) -> Tuple[Word, ...]:
        """Total words of the same length that project onto ``word``."""
        word = tuple(word)
        n = len(word)
        if n > self.total.max_degree:
            raise StructuralError(
                f"words of length {n} exceed the truncation degree "
                f"{self.total.max_degree}"
            )
        return tuple(
            w for w in self.total.words(n) if self.projection.apply_word(w) == word
        )

    def check_local_triviality(self) -> ValidationReport:
        """Fibers over every base word have ``|D_n(fiber)|`` elements.

        Also reports base words with empty preimage, which would make the
        projection fail to be surjective in that degree.
        """
        total, base, fiber = self.total, self.base, self.fiber
        report = ValidationReport(subject="extension", max_degree=total.max_degree)
        for n in range(1, total.max_degree + 1):
            counts: Dict[Word, int] = {w: 0 for w in base.words(n)}
            for w in total.words(n):
                image = self.projection.apply_word(w)
                if image not in counts:
                    report.add(
                        "projection-domain",
                        total.name_word(w),
                        "image of a total word is not a base word",
                    )
                    continue
                counts[image] += 1
            expected = len(fiber.words(n))
            for w, count in counts.items():
                if count == 0:
                    report.add(
                        "projection-surjective",
                        base.name_word(w),
                        "base word has no preimage",
                    )
                elif count != expected:
                    report.add(
                        "fiber-cardinality",
                        base.name_word(w),
                        f"fiber has {count} word(s), expected {expected}",
                    )
        return report


def _transports(pair: TwistingPair, g_word: Word) -> List[PGHom]:
    """``[Id, t(g_1), t(g_1) ∘ t(g_2), ...]`` up to length ``len(g_word)``."""
    fiber = pair.fiber
    current = tuple(fiber.elements)
    maps = [current]
    for g in g_word[:-1]:
        tg = pair.t[g].map1
        current = tuple(current[tg[x]] for x in fiber.elements)
        maps.append(current)
    return [PGHom(fiber, fiber, m) for m in maps]


def _total_words(pair: TwistingPair, n: int, encode) -> List[Word]:
    fiber = pair.fiber
    words: List[Word] = []
    for g_word in pair.base.words(n):
        pullbacks = [inverse_hom(f) for f in _transports(pair, g_word)]
        for u in fiber.words(n):
            xs = [pullbacks[k](u[k]) for k in range(n)]
            words.append(tuple(encode(x, g) for x, g in zip(xs, g_word)))
    return words


def twisted_product(
    pair: TwistingPair, max_degree: Optional[int] = None, check: bool = True
) -> ExtensionTable:
    """Build the total space of ``pair`` as a partial group table.

    Args:
        pair: The twisting pair.
        max_degree: Truncation of the total; defaults to (and is capped by)
            the smaller truncation degree of base and fiber.
        check: Validate the pair first and the resulting table afterwards.

    Raises:
        InvalidTwistingPairError: ``check`` is set and the pair is invalid.
        InvariantError: the total fails the partial group axioms or a
            product leaves the fiber's domain.
    """
    base, fiber, t, eta = pair.base, pair.fiber, pair.t, pair.eta
    N = pair.max_degree if max_degree is None else min(max_degree, pair.max_degree)
    if N < 2:
        raise StructuralError(f"truncation degree must be at least 2, got {N}")
    if check:
        report = validate_twisting_pair(pair)
        if not report.ok:
            raise InvalidTwistingPairError(report)

    kh = base.order

    def encode(x: Element, g: Element) -> Element:
        return x * kh + g

    names = [pair_name(a, b) for a in fiber.names for b in base.names]
    inv: List[Element] = []
    try:
        for x in fiber.elements:
            for g in base.elements:
                gi = base.inv[g]
                head = fiber.inv[eta[(gi, g)]]
                inv.append(encode(fiber.prod2(head, t[gi](fiber.inv[x])), gi))
        domain = {n: _total_words(pair, n, encode) for n in range(2, N + 1)}
        prod: Dict[Tuple[Element, Element], Element] = {}
        for a, b in domain[2]:
            (x, g), (z, h) = divmod(a, kh), divmod(b, kh)
            value = fiber.prod2(fiber.prod2(x, t[g](z)), eta[(g, h)])
            prod[(a, b)] = encode(value, base.prod2(g, h))
    except DomainError as error:
        logger.error(f"twisted product leaves the fiber's domain at {error.word}")
        raise InvariantError(f"twisted product is undefined: {error}") from error

    total = make_table(names, inv, N, domain, prod)
    logger.debug(
        f"twisted product with {total.order} elements up to degree {N}: "
        f"|D_2| = {len(domain[2])}"
    )
    projection = PGHom(total, base, tuple(e % kh for e in total.elements))
    inclusion = PGHom(fiber, total, tuple(encode(x, UNIT) for x in fiber.elements))
    extension = ExtensionTable(pair, total, projection, inclusion)
    if check:
        report = validate(total, subject="twisted product")
        if not report.ok:
            logger.error(report.summary())
            raise InvariantError(
                f"twisted product is not a partial group: {report.summary()}"
            )
    return extension
