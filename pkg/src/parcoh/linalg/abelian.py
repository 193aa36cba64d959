"""Finitely generated abelian groups and homomorphisms between them.

Two carriers are used:

- :class:`FinAbGroup` is the canonical form, a divisibility chain of
  invariant factors (``0`` for a copy of Z, listed last; factors of 1
  omitted). Every computed group is reported this way.
- :class:`CyclicSum` is a direct sum ``Z/m_1 + ... + Z/m_r`` with moduli in
  any order. Cochain groups are cyclic sums indexed by words, and
  :class:`AbHom` matrices act on their coordinates.
"""

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from sympy import factorint

from parcoh.errors import StructuralError
from parcoh.linalg.snf import Matrix, identity, mat_vec, snf


def _reduce(value: int, modulus: int) -> int:
    return value % modulus if modulus else value


@dataclass(frozen=True)
class FinAbGroup:
    """``Z/m_1 + Z/m_2 + ...`` with ``m_1 | m_2 | ...``.

    The trivial group has no factors and prints as ``"0"``.
    """

    invariant_factors: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        factors = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if any(m < 0 or m == 1 for m in factors):
            raise StructuralError(
                f"invariant factors must be 0 or at least 2, got {list(factors)}"
            )
        for a, b in zip(factors, factors[1:]):
            if (a == 0 and b != 0) or (a != 0 and b % a):
                raise StructuralError(
                    f"invariant factors {list(factors)} are not a divisibility chain"
                )

    @classmethod
    def from_moduli(cls, moduli: Sequence[int]) -> "FinAbGroup":
        """Normal form of ``Z/m_1 + ... + Z/m_r`` for arbitrary moduli.

        Moduli are split into prime powers and recombined, so ``[2, 3]``
        becomes ``Z/6``; moduli 1 vanish and 0 stays as Z.
        """
        exponents: Dict[int, List[int]] = {}
        free_rank = 0
        for m in moduli:
            m = abs(int(m))
            if m == 0:
                free_rank += 1
            elif m > 1:
                for p, e in factorint(m).items():
                    exponents.setdefault(int(p), []).append(int(e))
        length = max((len(es) for es in exponents.values()), default=0)
        factors = [1] * length
        for p, es in exponents.items():
            # largest powers go to the last factors
            for slot, e in enumerate(sorted(es, reverse=True)):
                factors[length - 1 - slot] *= p**e
        return cls(tuple(f for f in factors if f != 1) + (0,) * free_rank)

    @classmethod
    def trivial(cls) -> "FinAbGroup":
        return cls(())

    @property
    def rank(self) -> int:
        """Number of cyclic factors in the invariant-factor presentation."""
        return len(self.invariant_factors)

    @property
    def free_rank(self) -> int:
        return self.invariant_factors.count(0)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or ``None`` if infinite."""
        if not self.is_finite:
            return None
        out = 1
        for m in self.invariant_factors:
            out *= m
        return out

    def as_cyclic_sum(self) -> "CyclicSum":
        return CyclicSum(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " ⊕ ".join("Z" if m == 0 else f"Z/{m}" for m in self.invariant_factors)


@dataclass(frozen=True)
class CyclicSum:
    """``Z/m_1 + ... + Z/m_r`` in the given order; ``m = 0`` means Z."""

    moduli: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if any(m < 0 for m in self.moduli):
            raise StructuralError(f"moduli must be nonnegative, got {self.moduli}")

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_finite(self) -> bool:
        return 0 not in self.moduli

    @property
    def order(self) -> Optional[int]:
        if not self.is_finite:
            return None
        out = 1
        for m in self.moduli:
            out *= m
        return out

    def normal_form(self) -> FinAbGroup:
        return FinAbGroup.from_moduli(self.moduli)

    def reduce(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Canonical coordinates: each entry reduced into ``0..m-1``."""
        return tuple(_reduce(x, m) for x, m in zip(vector, self.moduli))

    def zero(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def add(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        return self.reduce([x + y for x, y in zip(a, b)])

    def neg(self, a: Sequence[int]) -> Tuple[int, ...]:
        return self.reduce([-x for x in a])

    def elements(self) -> Iterator[Tuple[int, ...]]:
        """All elements in lexicographic order; finite sums only."""
        if not self.is_finite:
            raise StructuralError("cannot enumerate an infinite group")
        return itertools.product(*(range(m) for m in self.moduli))

    def repeat(self, times: int) -> "CyclicSum":
        """The direct sum of ``times`` copies."""
        return CyclicSum(self.moduli * times)


Carrier = Union[FinAbGroup, CyclicSum]


def _as_sum(group: Carrier) -> CyclicSum:
    return group.as_cyclic_sum() if isinstance(group, FinAbGroup) else group


@dataclass(frozen=True)
class AbHom:
    """A homomorphism of cyclic sums given by an integer matrix.

    ``matrix`` has one row per target summand and one column per source
    summand; a source vector ``v`` maps to ``matrix @ v`` reduced in the
    target.
    """

    source: CyclicSum
    target: CyclicSum
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "source", _as_sum(self.source))
        object.__setattr__(self, "target", _as_sum(self.target))
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != self.target.rank or any(
            len(row) != self.source.rank for row in rows
        ):
            raise StructuralError(
                f"matrix must be {self.target.rank}x{self.source.rank} for "
                f"a map {self.source.moduli} -> {self.target.moduli}"
            )

    @classmethod
    def identity(cls, group: Carrier) -> "AbHom":
        group = _as_sum(group)
        return cls(group, group, tuple(map(tuple, identity(group.rank))))

    @classmethod
    def zero(cls, source: Carrier, target: Carrier) -> "AbHom":
        source, target = _as_sum(source), _as_sum(target)
        return cls(source, target, tuple((0,) * source.rank for _ in target.moduli))

    @classmethod
    def scalar(cls, group: Carrier, k: int) -> "AbHom":
        group = _as_sum(group)
        n = group.rank
        return cls(
            group,
            group,
            tuple(tuple(k if i == j else 0 for j in range(n)) for i in range(n)),
        )

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        return self.target.reduce(mat_vec(self.matrix, vector))

    def compose(self, first: "AbHom") -> "AbHom":
        """``self ∘ first``."""
        if first.target != self.source:
            raise StructuralError("maps are not composable")
        n = first.source.rank
        columns = [first.apply([int(i == j) for i in range(n)]) for j in range(n)]
        image_cols = [self.apply(col) for col in columns]
        matrix = tuple(
            tuple(image_cols[j][i] for j in range(n))
            for i in range(self.target.rank)
        )
        return AbHom(first.source, self.target, matrix)

    def reduced(self) -> "AbHom":
        """The same map with entries reduced modulo the target moduli."""
        return AbHom(
            self.source,
            self.target,
            tuple(
                tuple(_reduce(x, m) for x in row)
                for row, m in zip(self.matrix, self.target.moduli)
            ),
        )

    def equals(self, other: "AbHom") -> bool:
        """Equality as maps, i.e. matrices agreeing modulo the target."""
        return (
            self.source == other.source
            and self.target == other.target
            and self.reduced().matrix == other.reduced().matrix
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.reduced().matrix for x in row)

    def is_well_defined(self) -> bool:
        """Source relations land in target relations.

        Column ``j`` times the source modulus ``m_j`` must vanish in the
        target.
        """
        for j, m in enumerate(self.source.moduli):
            for row, t in zip(self.matrix, self.target.moduli):
                value = row[j] * m
                if (value % t if t else value) != 0:
                    return False
        return True

    def is_automorphism(self) -> bool:
        """Bijective endomorphism of a finite group, checked by enumeration."""
        if self.source != self.target or not self.source.is_finite:
            return False
        if not self.is_well_defined():
            return False
        images = {self.apply(v) for v in self.source.elements()}
        return len(images) == self.source.order

    def inverse(self) -> "AbHom":
        """Inverse automorphism of a finite group, found as a power of self."""
        if not self.is_automorphism():
            raise StructuralError("only automorphisms of finite groups are invertible")
        identity_map = AbHom.identity(self.source)
        power = self
        previous = identity_map
        # an automorphism of a nontrivial finite group has order below |G|
        for _ in range(max(self.source.order, 1)):
            if power.equals(identity_map):
                return previous.reduced()
            previous = power
            power = self.compose(power)
        raise StructuralError(
            f"no power of {self.as_lists()} up to {self.source.order} is the identity"
        )

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.matrix]


def iso_class_equal(a: Carrier, b: Carrier) -> bool:
    """Whether two abelian groups are isomorphic."""

    def normal(group: Carrier) -> FinAbGroup:
        if isinstance(group, CyclicSum):
            return group.normal_form()
        return FinAbGroup.from_moduli(group.invariant_factors)

    return normal(a) == normal(b)


@dataclass(frozen=True)
class AbelianPresentation:
    """A finite abelian group from a table, with explicit coordinates.

    Attributes:
        group: The invariant-factor form.
        elements: The element ids of the table, in the given order.
        generators: One element per invariant factor.
        coordinates: Maps each element to its coordinate vector in ``group``.
    """

    group: FinAbGroup
    elements: Tuple[int, ...]
    generators: Tuple[int, ...]
    coordinates: Dict[int, Tuple[int, ...]]

    def element_at(self, vector: Sequence[int]) -> int:
        target = self.group.as_cyclic_sum().reduce(vector)
        for x, coords in self.coordinates.items():
            if coords == target:
                return x
        raise KeyError(tuple(vector))


def abelian_group_from_table(
    elements: Sequence[int], mul: Callable[[int, int], int]
) -> AbelianPresentation:
    """Present a finite abelian group given by its multiplication.

    The group is ``Z^elements`` modulo the relations ``[a] + [b] = [ab]``;
    the Smith normal form of the relation matrix gives the invariant factors
    and, through its column transform, the coordinates of every element.
    """
    elements = tuple(elements)
    index = {x: i for i, x in enumerate(elements)}
    k = len(elements)
    relations: Matrix = []
    for a, b in itertools.product(elements, repeat=2):
        c = mul(a, b)
        if c not in index:
            raise StructuralError("elements are not closed under the product")
        if mul(b, a) != c:
            raise StructuralError("the group is not abelian")
        row = [0] * k
        row[index[a]] += 1
        row[index[b]] += 1
        row[index[c]] -= 1
        relations.append(row)
    result = snf(relations, cols=k)
    diagonal = list(result.diagonal) + [0] * (k - min(len(relations), k))
    kept = [i for i, d in enumerate(diagonal) if d != 1]
    if any(diagonal[i] == 0 for i in kept):
        raise StructuralError("the table does not describe a finite group")
    group = FinAbGroup(tuple(diagonal[i] for i in kept))
    carrier = group.as_cyclic_sum()
    coordinates = {
        x: carrier.reduce([result.V[index[x]][i] for i in kept]) for x in elements
    }
    if len(set(coordinates.values())) != k:
        raise StructuralError("the table does not describe a group")
    generators = []
    for slot in range(len(kept)):
        unit_vector = tuple(1 if i == slot else 0 for i in range(len(kept)))
        generators.append(
            next(x for x, coords in coordinates.items() if coords == unit_vector)
        )
    return AbelianPresentation(group, elements, tuple(generators), coordinates)
