"""Twisting pairs ``(t, eta)`` of a base ``H`` acting on a fiber ``M``.

``t`` assigns an automorphism of ``M`` to every element of ``H`` and ``eta``
a normalizer element of ``M`` to every length-two word of ``H``, subject to

- ``eta(g, h)`` defines a homotopy ``t(g) ∘ t(h) <- t(gh)``,
- ``t(1) = Id`` and ``eta(g, 1) = 1 = eta(1, g)``,
- ``t(g)(eta(h, k)) . eta(g, hk) = eta(g, h) . eta(gh, k)`` on ``D_3(H)``.
"""

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

from loguru import logger

from parcoh.core.table import UNIT, Element, PartialGroupTable
from parcoh.core.validation import ValidationReport
from parcoh.errors import StructuralError
from parcoh.homotopy.homotopies import check_homotopy, normalizer
from parcoh.homotopy.morphisms import (
    PGHom,
    compose,
    identity_hom,
    inverse_hom,
    is_homomorphism,
)

Pair = Tuple[Element, Element]


class TwistingKind:
    """Violation kinds reported by :func:`validate_twisting_pair`."""

    AUTOMORPHISM = "twist-automorphism"
    UNIT = "twist-unit"
    ETA_UNIT = "eta-unit"
    NORMALIZER = "eta-normalizer"
    HOMOTOPY = "homotopy"
    COCYCLE = "cocycle"


@dataclass(frozen=True, eq=False)
class TwistingPair:
    """The data of a twisting pair; validity is checked separately.

    Attributes:
        base: The base ``H``.
        fiber: The fiber ``M``.
        t: ``t[g]`` is an automorphism of ``fiber``, one per base element.
        eta: Fiber element for every word of ``D_2(base)``.
    """

    base: PartialGroupTable
    fiber: PartialGroupTable
    t: Tuple[PGHom, ...]
    eta: Mapping[Pair, Element]

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", tuple(self.t))
        object.__setattr__(self, "eta", dict(self.eta))
        if len(self.t) != self.base.order:
            raise StructuralError(
                f"t has {len(self.t)} entries for {self.base.order} base elements"
            )
        for g, tg in enumerate(self.t):
            orders = (tg.source.order, tg.target.order)
            if orders != (self.fiber.order, self.fiber.order):
                raise StructuralError(
                    f"t({self.base.names[g]}) is not a self-map of the fiber"
                )
        missing = [p for p in sorted(self.base.domain[2]) if p not in self.eta]
        if missing:
            raise StructuralError(
                f"eta is missing on {self.base.name_word(missing[0])}"
            )
        extra = [p for p in self.eta if p not in self.base.domain[2]]
        if extra:
            raise StructuralError(f"eta is given off D_2 at {sorted(extra)[0]}")
        for p, value in self.eta.items():
            if not 0 <= value < self.fiber.order:
                raise StructuralError(f"eta{p} is out of range: {value}")

    @property
    def max_degree(self) -> int:
        return min(self.base.max_degree, self.fiber.max_degree)

    def eta_names(self) -> Dict[Tuple[str, str], str]:
        return {
            self.base.name_word(p): self.fiber.names[v]
            for p, v in sorted(self.eta.items())
        }


def trivial_pair(base: PartialGroupTable, fiber: PartialGroupTable) -> TwistingPair:
    """``t = Id`` and ``eta = 1`` everywhere."""
    identity = identity_hom(fiber)
    return TwistingPair(
        base,
        fiber,
        tuple(identity for _ in base.elements),
        {p: UNIT for p in base.domain[2]},
    )


def pair_with_eta(
    base: PartialGroupTable,
    fiber: PartialGroupTable,
    t: Sequence[PGHom],
    eta: Optional[Mapping[Pair, Element]] = None,
) -> TwistingPair:
    """A pair with ``eta`` given on some words and ``1`` elsewhere."""
    values = {p: UNIT for p in base.domain[2]}
    values.update(eta or {})
    return TwistingPair(base, fiber, tuple(t), values)


def validate_twisting_pair(
    pair: TwistingPair, normal: Optional[Dict[Element, PGHom]] = None
) -> ValidationReport:
    """Check the three twisting-pair conditions.

    An ``eta`` value outside the normalizer of the fiber is reported as a
    failure of the homotopy condition's premise (kind ``eta-normalizer``).
    The cocycle condition needs ``D_3`` of the base and is skipped with a
    warning when the base is truncated at degree 2.
    """
    base, fiber = pair.base, pair.fiber
    report = ValidationReport(subject="twisting pair", max_degree=pair.max_degree)
    if normal is None:
        normal = normalizer(fiber)
    identity = identity_hom(fiber)

    for g, tg in enumerate(pair.t):
        bijective = len(set(tg.map1)) == fiber.order
        if not (bijective and is_homomorphism(tg) and is_homomorphism(inverse_hom(tg))):
            report.add(
                TwistingKind.AUTOMORPHISM,
                (base.names[g],),
                "t(g) is not an automorphism of the fiber",
            )
    if pair.t[UNIT].map1 != identity.map1:
        report.add(TwistingKind.UNIT, ("1",), "t(1) is not the identity")

    for g in base.elements:
        for p in ((g, UNIT), (UNIT, g)):
            if pair.eta[p] != UNIT:
                report.add(
                    TwistingKind.ETA_UNIT,
                    base.name_word(p),
                    f"eta is {fiber.names[pair.eta[p]]}, expected 1",
                )

    for (g, h), value in sorted(pair.eta.items()):
        if value not in normal:
            report.add(
                TwistingKind.NORMALIZER,
                base.name_word((g, h)),
                f"{fiber.names[value]} is not in the normalizer of the fiber",
            )
            continue
        gh = base.prod2(g, h)
        check = check_homotopy(compose(pair.t[g], pair.t[h]), pair.t[gh], value)
        if not check:
            report.add(
                TwistingKind.HOMOTOPY,
                base.name_word((g, h)),
                f"no homotopy t(g)t(h) <- t(gh): {check.reason} at {check.witness}",
            )

    if base.max_degree < 3:
        logger.warning("base is truncated at degree 2; cocycle condition not checked")
    else:
        _check_cocycle(pair, report)
    return report


def _check_cocycle(pair: TwistingPair, report: ValidationReport) -> None:
    base, fiber, eta, t = pair.base, pair.fiber, pair.eta, pair.t
    for g, h, k in base.words(3):
        hk, gh = base.prod2(h, k), base.prod2(g, h)
        left_pair = (t[g](eta[(h, k)]), eta[(g, hk)])
        right_pair = (eta[(g, h)], eta[(gh, k)])
        if left_pair not in fiber.prod or right_pair not in fiber.prod:
            report.add(
                TwistingKind.COCYCLE,
                base.name_word((g, h, k)),
                "cocycle products are undefined in the fiber",
            )
        elif fiber.prod[left_pair] != fiber.prod[right_pair]:
            report.add(
                TwistingKind.COCYCLE,
                base.name_word((g, h, k)),
                "t(g)(eta(h,k)) eta(g,hk) != eta(g,h) eta(gh,k)",
            )
