"""Finite, degree-truncated partial groups.

A partial group is stored as its set of elements (ids ``0..k-1``, id 0 the
unit), the inversion, the words of length ``2..N`` on which the product is
defined, and the binary product on length-two words. Longer products are
recovered by folding from the left.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, NamedTuple, Tuple

from parcoh.errors import DomainError, StructuralError, TruncationError

Element = int
Word = Tuple[Element, ...]

UNIT: Element = 0
EMPTY_WORD: Word = ()


class Simplex(NamedTuple):
    """A domain word together with its degeneracy flag."""

    word: Word
    degenerate: bool


@dataclass(frozen=True, eq=False)
class PartialGroupTable:
    """A partial group up to truncation degree ``max_degree``.

    Attributes:
        names: Display name per element id; ``names[0]`` is ``"1"``.
        inv: Inversion, ``inv[x]`` is the id of ``x^-1``.
        max_degree: Truncation degree N (at least 2).
        domain: Maps each ``n`` in ``2..N`` to the set of length-n words.
        prod: The product on length-two domain words.
    """

    names: Tuple[str, ...]
    inv: Tuple[Element, ...]
    max_degree: int
    domain: Mapping[int, FrozenSet[Word]]
    prod: Mapping[Tuple[Element, Element], Element]
    _words: Dict[int, Tuple[Word, ...]] = field(init=False, repr=False)
    _products: Dict[Word, Element] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        check_structure(self)
        words = {0: (EMPTY_WORD,), 1: tuple((x,) for x in self.elements)}
        for n in range(2, self.max_degree + 1):
            words[n] = tuple(sorted(self.domain[n]))
        # set once here; reads never write to a table
        object.__setattr__(self, "_words", words)
        object.__setattr__(self, "_products", _fold_products(self.prod, words))

    @property
    def order(self) -> int:
        """Number of elements, |M_1|."""
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> Element:
        """Return the id of the element called ``name``."""
        try:
            return self.names.index(name)
        except ValueError:
            raise StructuralError(f"unknown element {name!r}") from None

    def name_word(self, word: Iterable[Element]) -> Tuple[str, ...]:
        return tuple(self.names[x] for x in word)

    def contains(self, word: Word) -> bool:
        """Membership of ``word`` in the domain (any length up to N)."""
        n = len(word)
        if n == 0:
            return True
        if any(x < 0 or x >= self.order for x in word):
            return False
        if n == 1:
            return True
        if n > self.max_degree:
            return False
        return word in self.domain[n]

    def prod2(self, a: Element, b: Element) -> Element:
        try:
            return self.prod[(a, b)]
        except KeyError:
            raise DomainError((a, b)) from None

    def words(self, n: int) -> Tuple[Word, ...]:
        """Domain words of length ``n`` in lexicographic order of ids."""
        if n < 0 or n > self.max_degree:
            raise TruncationError(n, self.max_degree, "simplices")
        return self._words[n]

    def product_of(self, word: Word) -> Element:
        """Left-fold product of a domain word (see :func:`parcoh.core.pi`)."""
        n = len(word)
        if n == 0:
            return UNIT
        if n == 1:
            return word[0]
        value = self._products.get(word)
        if value is not None:
            return value
        if not self.contains(word):
            raise DomainError(self.name_word(word))
        # every foldable domain word is in _products, so the fold breaks here
        head = self.product_of(word[:-1])
        raise DomainError(
            self.name_word(word),
            f"word {self.name_word(word)} is in the domain but "
            f"({self.names[head]}, {self.names[word[-1]]}) is not",
        )


def _fold_products(
    prod: Mapping[Tuple[Element, Element], Element],
    words: Mapping[int, Tuple[Word, ...]],
) -> Dict[Word, Element]:
    """Left-fold products of the domain words whose every prefix folds."""
    products: Dict[Word, Element] = dict(prod)
    for n in range(3, len(words)):
        for word in words[n]:
            head = products.get(word[:-1])
            if head is not None and (head, word[-1]) in prod:
                products[word] = prod[(head, word[-1])]
    return products


def check_structure(table: PartialGroupTable) -> None:
    """Raise :class:`StructuralError` if ``table`` is not well-formed.

    Well-formed means indices in range, a total inversion, words of the right
    lengths and a product defined exactly on the length-two words. Axioms are
    checked separately by :func:`parcoh.core.validation.validate`.
    """
    k = len(table.names)
    if k == 0:
        raise StructuralError("a partial group needs at least the unit")
    if table.names[0] != "1":
        raise StructuralError(
            f"element 0 must be the unit '1', got {table.names[0]!r}"
        )
    if len(set(table.names)) != k:
        raise StructuralError("element names must be distinct")
    if table.max_degree < 2:
        raise StructuralError(
            f"truncation degree must be at least 2, got {table.max_degree}"
        )
    if len(table.inv) != k:
        raise StructuralError(
            f"inversion has {len(table.inv)} entries for {k} elements"
        )
    for x, y in enumerate(table.inv):
        if not 0 <= y < k:
            raise StructuralError(f"inverse of element {x} is out of range: {y}")
    for n in range(2, table.max_degree + 1):
        if n not in table.domain:
            raise StructuralError(f"domain has no entry for degree {n}")
        for word in table.domain[n]:
            if len(word) != n:
                raise StructuralError(f"word {word} listed in degree {n}")
            for x in word:
                if not 0 <= x < k:
                    raise StructuralError(
                        f"word {word} has out-of-range entry {x}"
                    )
    extra = [n for n in table.domain if n < 2 or n > table.max_degree]
    if extra:
        raise StructuralError(
            f"domain lists degrees outside 2..N: {sorted(extra)}"
        )
    pairs = table.domain[2]
    for pair, value in table.prod.items():
        if pair not in pairs:
            raise StructuralError(f"product given on {pair}, which is not in D_2")
        if not 0 <= value < k:
            raise StructuralError(f"product of {pair} is out of range: {value}")
    missing = [pair for pair in pairs if pair not in table.prod]
    if missing:
        raise StructuralError(
            f"product missing on D_2 words, e.g. {min(missing)}"
        )


def make_table(
    names: Iterable[str],
    inv: Iterable[Element],
    max_degree: int,
    domain: Mapping[int, Iterable[Word]],
    prod: Mapping[Tuple[Element, Element], Element],
) -> PartialGroupTable:
    """Build a table, freezing the domain sets."""
    return PartialGroupTable(
        names=tuple(names),
        inv=tuple(inv),
        max_degree=max_degree,
        domain={
            n: frozenset(tuple(w) for w in words) for n, words in domain.items()
        },
        prod=dict(prod),
    )


def tables_equal(a: PartialGroupTable, b: PartialGroupTable) -> bool:
    """Identity of tables: same names, inversion, domain and product."""
    return (
        a.names == b.names
        and a.inv == b.inv
        and a.max_degree == b.max_degree
        and all(a.domain[n] == b.domain[n] for n in range(2, a.max_degree + 1))
        and dict(a.prod) == dict(b.prod)
    )


def degenerate(word: Word) -> bool:
    """A domain word is degenerate iff it has a unit entry."""
    return UNIT in word
