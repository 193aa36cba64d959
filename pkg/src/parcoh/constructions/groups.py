"""Finite groups given by multiplication tables."""

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from loguru import logger

from parcoh.errors import InvalidGroupError


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group on the ids ``0..k-1``.

    Attributes:
        names: Display name per element.
        mul: ``mul[a][b]`` is the id of ``a * b``.
        unit: Id of the identity element.
        inverse: ``inverse[a]`` is the id of ``a^-1``.
    """

    names: Tuple[str, ...]
    mul: Tuple[Tuple[int, ...], ...]
    unit: int
    inverse: Tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.names)
        if k == 0:
            raise InvalidGroupError("a group needs at least one element")
        if len(set(self.names)) != k:
            raise InvalidGroupError("element names must be distinct")
        if len(self.mul) != k or any(len(row) != k for row in self.mul):
            raise InvalidGroupError(f"multiplication table must be {k}x{k}")
        if any(not 0 <= c < k for row in self.mul for c in row):
            raise InvalidGroupError("multiplication table has out-of-range entries")
        if len(self.inverse) != k or not 0 <= self.unit < k:
            raise InvalidGroupError("unit or inverse map is out of range")
        e = self.unit
        for a in range(k):
            if self.mul[e][a] != a or self.mul[a][e] != a:
                raise InvalidGroupError(
                    f"{self.names[e]} is not a unit for {self.names[a]}"
                )
            b = self.inverse[a]
            if self.mul[a][b] != e or self.mul[b][a] != e:
                raise InvalidGroupError(
                    f"{self.names[b]} is not inverse to {self.names[a]}"
                )
        for a, b, c in itertools.product(range(k), repeat=3):
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise InvalidGroupError(
                    "multiplication is not associative on "
                    f"({self.names[a]}, {self.names[b]}, {self.names[c]})"
                )

    @property
    def order(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidGroupError(f"unknown group element {name!r}") from None

    def is_abelian(self) -> bool:
        k = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(k) for b in range(k))


def group_from_table(
    names: Sequence[str], mul: Sequence[Sequence[int]]
) -> FiniteGroupTable:
    """Build a group from its table, finding the unit and inverses."""
    k = len(names)
    rows = tuple(tuple(row) for row in mul)
    if len(rows) != k or any(len(row) != k for row in rows):
        raise InvalidGroupError(f"multiplication table must be {k}x{k}")
    units = [
        e
        for e in range(k)
        if all(rows[e][a] == a and rows[a][e] == a for a in range(k))
    ]
    if not units:
        raise InvalidGroupError("multiplication table has no two-sided unit")
    e = units[0]
    inverse: List[int] = []
    for a in range(k):
        candidates = [b for b in range(k) if rows[a][b] == e]
        if not candidates:
            raise InvalidGroupError(f"{names[a]} has no inverse")
        inverse.append(candidates[0])
    return FiniteGroupTable(tuple(names), rows, e, tuple(inverse))


def group_from_operation(
    elements: Sequence, operation: Callable, namer: Callable[[object], str] = str
) -> FiniteGroupTable:
    index: Dict[object, int] = {x: i for i, x in enumerate(elements)}
    mul = [[index[operation(a, b)] for b in elements] for a in elements]
    return group_from_table([namer(x) for x in elements], mul)


def cyclic_group(n: int, generator: str = "g") -> FiniteGroupTable:
    """Z/n with elements ``1, g, g2, ..., g{n-1}``."""
    if n < 1:
        raise InvalidGroupError(f"cyclic group order must be positive, got {n}")

    def namer(k: int) -> str:
        return "1" if k == 0 else (generator if k == 1 else f"{generator}{k}")

    return group_from_operation(list(range(n)), lambda a, b: (a + b) % n, namer)


def _cycle_name(perm: Tuple[int, ...]) -> str:
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "1"


def symmetric_group(n: int) -> FiniteGroupTable:
    """S_n acting on ``{1..n}``, elements in lexicographic order.

    Products compose right to left: ``(s * t)(i) = s(t(i))``.
    """
    perms = list(itertools.permutations(range(n)))
    return group_from_operation(
        perms, lambda s, t: tuple(s[t[i]] for i in range(n)), _cycle_name
    )


def direct_product_group(g: FiniteGroupTable, h: FiniteGroupTable) -> FiniteGroupTable:
    pairs = list(itertools.product(range(g.order), range(h.order)))
    return group_from_operation(
        pairs,
        lambda p, q: (g.mul[p[0]][q[0]], h.mul[p[1]][q[1]]),
        lambda p: f"({g.names[p[0]]},{h.names[p[1]]})",
    )


def is_group_homomorphism(
    source: FiniteGroupTable, target: FiniteGroupTable, f: Sequence[int]
) -> bool:
    k = source.order
    return all(
        f[source.mul[a][b]] == target.mul[f[a]][f[b]]
        for a in range(k)
        for b in range(k)
    )


def group_automorphisms(g: FiniteGroupTable) -> List[Tuple[int, ...]]:
    """All automorphisms of ``g`` as element maps, by exhaustive search."""
    others = [a for a in range(g.order) if a != g.unit]
    found = []
    for images in itertools.permutations(others):
        f = [0] * g.order
        f[g.unit] = g.unit
        for a, b in zip(others, images):
            f[a] = b
        if is_group_homomorphism(g, g, f):
            found.append(tuple(f))
    logger.debug(f"group of order {g.order} has {len(found)} automorphisms")
    return found


def center_of_group(g: FiniteGroupTable) -> List[int]:
    k = g.order
    return [a for a in range(k) if all(g.mul[a][b] == g.mul[b][a] for b in range(k))]


def conjugation_map(g: FiniteGroupTable, a: int) -> Tuple[int, ...]:
    """``x -> a x a^-1`` as an element map."""
    inv = g.inverse[a]
    return tuple(g.mul[g.mul[a][x]][inv] for x in range(g.order))


def dihedral_group(n: int) -> FiniteGroupTable:
    """Symmetries of the n-gon, elements ``r^i`` and ``s r^i``."""
    if n < 1:
        raise InvalidGroupError(f"dihedral group index must be positive, got {n}")
    elements = [(f, i) for f in (0, 1) for i in range(n)]

    def operation(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        # s r^i s = r^-i
        f, i = a
        g, j = b
        return ((f + g) % 2, ((-i if g else i) + j) % n)

    def namer(a: Tuple[int, int]) -> str:
        f, i = a
        rotation = "" if i == 0 else ("r" if i == 1 else f"r{i}")
        return ("s" + rotation) if f else (rotation or "1")

    return group_from_operation(elements, operation, namer)


def _chains(n: int, smallest: int = 2) -> List[List[int]]:
    """Divisibility chains ``m_1 | m_2 | ...`` of factors >= 2 with product n."""
    if n == 1:
        return [[]]
    chains = []
    for m in range(smallest, n + 1):
        if n % m:
            continue
        for rest in _chains(n // m, m):
            if all(r % m == 0 for r in rest):
                chains.append([m] + rest)
    return chains


def abelian_group(factors: Sequence[int]) -> FiniteGroupTable:
    """``Z/m_1 x ... x Z/m_k``; a single factor gives :func:`cyclic_group`."""
    if len(factors) == 1:
        return cyclic_group(factors[0])
    elements = list(itertools.product(*(range(m) for m in factors)))
    return group_from_operation(
        elements,
        lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, factors)),
        lambda a: "1" if not any(a) else "(" + ",".join(map(str, a)) + ")",
    )


# i*j = k, j*k = i, k*i = j; squares are -1
_UNIT_PRODUCTS = {
    (1, 1): (1, 0),
    (1, 2): (0, 3),
    (1, 3): (1, 2),
    (2, 1): (1, 3),
    (2, 2): (1, 0),
    (2, 3): (0, 1),
    (3, 1): (0, 2),
    (3, 2): (1, 1),
    (3, 3): (1, 0),
}


def quaternion_group() -> FiniteGroupTable:
    """Q_8 with elements ``±1, ±i, ±j, ±k``."""
    elements = [(s, u) for s in (0, 1) for u in range(4)]

    def operation(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        (s, u), (t, v) = a, b
        if u == 0 or v == 0:
            return ((s + t) % 2, u or v)
        sign, w = _UNIT_PRODUCTS[(u, v)]
        return ((s + t + sign) % 2, w)

    def namer(a: Tuple[int, int]) -> str:
        s, u = a
        if (s, u) == (0, 0):
            return "1"
        return ("-" if s else "") + "1ijk"[u]

    return group_from_operation(elements, operation, namer)


def dicyclic_group(n: int) -> FiniteGroupTable:
    """``Z/n ⋊ Z/4`` with the generator of ``Z/4`` acting by inversion; n odd."""
    if n < 1 or n % 2 == 0:
        raise InvalidGroupError(f"dicyclic index must be odd and positive, got {n}")
    elements = [(a, b) for b in range(4) for a in range(n)]
    return group_from_operation(
        elements,
        lambda p, q: ((p[0] + (-1) ** p[1] * q[0]) % n, (p[1] + q[1]) % 4),
        lambda p: "1" if p == (0, 0) else f"({p[0]},{p[1]})",
    )


def alternating_group(n: int) -> FiniteGroupTable:
    """Even permutations of ``{1..n}``, composed as in :func:`symmetric_group`."""

    def even(perm: Tuple[int, ...]) -> bool:
        pairs = itertools.combinations(range(n), 2)
        return sum(perm[i] > perm[j] for i, j in pairs) % 2 == 0

    perms = [p for p in itertools.permutations(range(n)) if even(p)]
    return group_from_operation(
        perms, lambda s, t: tuple(s[t[i]] for i in range(n)), _cycle_name
    )


CATALOG_LIMIT = 16


def small_group_catalog(order: int) -> Dict[str, FiniteGroupTable]:
    """Named groups of the given order used to identify extension totals.

    Below ``CATALOG_LIMIT`` the catalog lists every group up to isomorphism;
    at and above it only the abelian groups are listed.
    """
    catalog: Dict[str, FiniteGroupTable] = {}
    for chain in _chains(order):
        name = "×".join(f"Z/{m}" for m in chain) or "1"
        catalog[name] = abelian_group(chain) if chain else cyclic_group(1)
    if order >= CATALOG_LIMIT:
        return catalog
    if order == 6:
        catalog["S_3"] = symmetric_group(3)
    elif order == 8:
        catalog["D_4"] = dihedral_group(4)
        catalog["Q_8"] = quaternion_group()
    elif order == 12:
        catalog["A_4"] = alternating_group(4)
        catalog["D_6"] = dihedral_group(6)
        catalog["Dic_3"] = dicyclic_group(3)
    elif order % 2 == 0 and order // 2 % 2 == 1 and order > 6:
        # 2p with p an odd prime below 8: Z/2p and D_p
        catalog[f"D_{order // 2}"] = dihedral_group(order // 2)
    return catalog


def catalog_is_complete(order: int) -> bool:
    """Whether :func:`small_group_catalog` lists every group of this order."""
    return 0 < order < CATALOG_LIMIT
