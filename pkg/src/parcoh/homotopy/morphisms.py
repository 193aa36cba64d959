"""Homomorphisms of partial groups."""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from parcoh.core.table import UNIT, Element, PartialGroupTable, Word, tables_equal
from parcoh.errors import StructuralError


@dataclass(frozen=True, eq=False)
class PGHom:
    """A map of elements ``source -> target``, given by ``map1[x]``.

    Being a map of partial groups is a property checked by
    :func:`is_homomorphism`, not enforced on construction.
    """

    source: PartialGroupTable
    target: PartialGroupTable
    map1: Tuple[Element, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "map1", tuple(self.map1))
        if len(self.map1) != self.source.order:
            raise StructuralError(
                f"element map has {len(self.map1)} entries for "
                f"{self.source.order} source elements"
            )
        if any(not 0 <= y < self.target.order for y in self.map1):
            raise StructuralError("element map has out-of-range images")

    def __call__(self, x: Element) -> Element:
        return self.map1[x]

    def apply_word(self, word: Iterable[Element]) -> Word:
        return tuple(self.map1[x] for x in word)

    def name_map(self) -> Dict[str, str]:
        """The map as ``{source name: target name}``."""
        return {
            self.source.names[x]: self.target.names[y] for x, y in enumerate(self.map1)
        }

    def is_identity(self) -> bool:
        return self.source is self.target and all(
            x == y for x, y in enumerate(self.map1)
        )


@dataclass(frozen=True)
class HomCheck:
    """Outcome of a homomorphism or homotopy check.

    Truthy iff the check passed; otherwise ``witness`` names the source word
    at which it failed and ``reason`` says how.
    """

    ok: bool
    witness: Optional[Tuple[str, ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "HomCheck":
        return cls(True)


def from_name_map(
    source: PartialGroupTable, target: PartialGroupTable, names: Dict[str, str]
) -> PGHom:
    """Build a map from ``{source name: target name}``.

    Elements left out map to themselves by name when the target has an
    element of the same name.
    """
    unknown = sorted(set(names) - set(source.names))
    if unknown:
        raise StructuralError(f"map names unknown source elements: {unknown}")
    images = [target.index(names.get(name, name)) for name in source.names]
    return PGHom(source, target, tuple(images))


def is_homomorphism(h: PGHom) -> HomCheck:
    """Check that ``h`` preserves units, inverses, domains and products.

    Words are checked degree by degree in lexicographic order up to the
    smaller of the two truncation degrees, so the witness is the first
    failing word.
    """
    source, target = h.source, h.target
    names = source.name_word
    if h(UNIT) != UNIT:
        return HomCheck(False, names((UNIT,)), "the unit is not preserved")
    N = min(source.max_degree, target.max_degree)
    for n in range(2, N + 1):
        for w in source.words(n):
            image = h.apply_word(w)
            if not target.contains(image):
                return HomCheck(
                    False,
                    names(w),
                    f"image {target.name_word(image)} is not in the domain",
                )
            if h(source.product_of(w)) != target.product_of(image):
                return HomCheck(False, names(w), "product is not preserved")
    for x in source.elements:
        if h(source.inv[x]) != target.inv[h(x)]:
            return HomCheck(False, names((x,)), "inverse is not preserved")
    return HomCheck.passed()


def identity_hom(table: PartialGroupTable) -> PGHom:
    return PGHom(table, table, tuple(table.elements))


def compose(second: PGHom, first: PGHom) -> PGHom:
    """``second ∘ first``."""
    if not same_table(first.target, second.source):
        raise StructuralError("maps are not composable")
    return PGHom(first.source, second.target, tuple(second(y) for y in first.map1))


def inverse_hom(h: PGHom) -> PGHom:
    """The inverse of a bijective element map."""
    if len(set(h.map1)) != len(h.map1) or h.source.order != h.target.order:
        raise StructuralError("only bijective maps have an inverse")
    images = [0] * h.target.order
    for x, y in enumerate(h.map1):
        images[y] = x
    return PGHom(h.target, h.source, tuple(images))


def same_table(a: PartialGroupTable, b: PartialGroupTable) -> bool:
    return a is b or tables_equal(a, b)


def same_map(a: PGHom, b: PGHom) -> bool:
    return (
        same_table(a.source, b.source)
        and same_table(a.target, b.target)
        and a.map1 == b.map1
    )

