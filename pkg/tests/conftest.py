"""Shared fixtures: standard tables, cohomology and extension oracles, actions."""

import itertools
import math
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pytest

from parcoh.cohomology.actions import Cochain, PGAction, trivial_action
from parcoh.cohomology.complexes import apply_coboundary
from parcoh.constructions import (
    FiniteGroupTable,
    bar,
    center_of_group,
    cyclic_group,
    direct_product_group,
    free_partial_group,
    group_from_operation,
    product,
    symmetric_group,
)
from parcoh.core.table import PartialGroupTable
from parcoh.extensions import pair_with_eta, trivial_pair, twisted_product
from parcoh.homotopy.morphisms import PGHom, identity_hom
from parcoh.linalg.abelian import AbHom, CyclicSum


@pytest.fixture(autouse=True)
def _quiet_env(monkeypatch):
    for name in ("PARCOH_SEARCH_BOUND", "PARCOH_DEFAULT_MAX_DEGREE"):
        monkeypatch.delenv(name, raising=False)


@lru_cache(maxsize=None)
def group(name: str):
    builders = {
        "Z/1": lambda: cyclic_group(1),
        "Z/2": lambda: cyclic_group(2),
        "Z/3": lambda: cyclic_group(3),
        "Z/4": lambda: cyclic_group(4),
        "Z/2xZ/2": lambda: direct_product_group(cyclic_group(2), cyclic_group(2)),
        "S_3": lambda: symmetric_group(3),
    }
    return builders[name]()


@lru_cache(maxsize=None)
def bar_table(name: str, n: int) -> PartialGroupTable:
    return bar(group(name), n)


@lru_cache(maxsize=None)
def free_table(generators: Tuple[str, ...], n: int) -> PartialGroupTable:
    return free_partial_group(list(generators), n)


def swap_map(fiber: PartialGroupTable) -> PGHom:
    """``a <-> ~a`` on the free partial group on ``a``."""
    return PGHom(fiber, fiber, (0, 2, 1))


@lru_cache(maxsize=None)
def swap_extension(n: int):
    """Free partial group on ``a`` twisted over ``bar(Z/2)`` by the swap."""
    fiber, base = free_table(("a",), n), bar_table("Z/2", n)
    pair = pair_with_eta(base, fiber, [identity_hom(fiber), swap_map(fiber)])
    return twisted_product(pair)


@lru_cache(maxsize=None)
def z4_extension(n: int):
    """``bar(Z/2)`` by itself with ``eta(g, g) = g``: the total is ``bar(Z/4)``."""
    z2 = bar_table("Z/2", n)
    g = z2.index("g")
    pair = pair_with_eta(z2, z2, [identity_hom(z2)] * 2, {(g, g): g})
    return twisted_product(pair)


@lru_cache(maxsize=None)
def corpus_table(name: str) -> PartialGroupTable:
    """Tables used by the property suites; all are valid partial groups."""
    builders: Dict[str, Callable[[], PartialGroupTable]] = {
        "bar Z/2": lambda: bar_table("Z/2", 4),
        "bar Z/3": lambda: bar_table("Z/3", 4),
        "bar Z/4": lambda: bar_table("Z/4", 4),
        "bar Z/2xZ/2": lambda: bar_table("Z/2xZ/2", 3),
        "bar S_3": lambda: bar_table("S_3", 3),
        "free a": lambda: free_table(("a",), 4),
        "free a,b": lambda: free_table(("a", "b"), 4),
        "free a x bar Z/2": lambda: product(
            free_table(("a",), 3), bar_table("Z/2", 3)
        ),
        "swap extension": lambda: swap_extension(3).total,
        "Z/4 extension": lambda: z4_extension(4).total,
        "trivial extension": lambda: twisted_product(
            trivial_pair(bar_table("Z/2", 3), bar_table("Z/3", 3))
        ).total,
    }
    return builders[name]()


CORPUS = (
    "bar Z/2",
    "bar Z/3",
    "bar Z/4",
    "bar Z/2xZ/2",
    "bar S_3",
    "free a",
    "free a,b",
    "free a x bar Z/2",
    "swap extension",
    "Z/4 extension",
    "trivial extension",
)

COEFFICIENTS = ((2,), (3,), (4,), (2, 2), (6,), (9,), (2, 4), (0,))


def sign_characters(table: PartialGroupTable) -> List[Tuple[int, ...]]:
    """All maps ``s`` to Z/2 with ``s(ab) = s(a) + s(b)`` on ``D_2``."""
    found = []
    for bits in itertools.product((0, 1), repeat=table.order - 1):
        s = (0,) + bits
        if all(s[x] == s[table.inv[x]] for x in table.elements) and all(
            s[c] == (s[a] + s[b]) % 2 for (a, b), c in table.prod.items()
        ):
            found.append(s)
    return found


def sign_action(
    table: PartialGroupTable, moduli: Sequence[int], s: Sequence[int]
) -> PGAction:
    coeffs = CyclicSum(tuple(moduli))
    identity = AbHom.identity(coeffs)
    minus = AbHom.scalar(coeffs, -1)
    phi = tuple(minus if s[x] else identity for x in table.elements)
    return PGAction(table, coeffs, phi)


def unit_action(table: PartialGroupTable, moduli: Sequence[int], unit: int) -> PGAction:
    """On a free partial group: each generator acts by ``unit``."""
    coeffs = CyclicSum(tuple(moduli))
    modulus = math.lcm(*moduli)
    inverse = pow(unit, -1, modulus)
    phi = [AbHom.identity(coeffs)]
    for _ in range((table.order - 1) // 2):
        phi += [AbHom.scalar(coeffs, unit), AbHom.scalar(coeffs, inverse)]
    return PGAction(table, coeffs, tuple(phi))


def actions_for(name: str, moduli: Sequence[int]) -> List[PGAction]:
    """Trivial, sign and (for free tables with finite coefficients) unit actions."""
    table = corpus_table(name)
    actions = [trivial_action(table, CyclicSum(tuple(moduli)))]
    for s in sign_characters(table)[1:3]:
        actions.append(sign_action(table, moduli, s))
    if name.startswith("free a") and "x" not in name and 0 not in moduli:
        modulus = math.lcm(*moduli)
        units = [u for u in range(2, modulus) if math.gcd(u, modulus) == 1]
        if units:
            actions.append(unit_action(table, moduli, units[-1]))
    return actions


def all_cochains(action: PGAction, n: int):
    """Every degree-n cochain of a finite coefficient group."""
    values = list(action.coeffs.elements())
    words = action.table.words(n)
    for choice in itertools.product(values, repeat=len(words)):
        yield Cochain(action.table, action.coeffs, n, choice)


def brute_force_cohomology_order(action: PGAction, n: int) -> int:
    """``|Z^n| / |B^n|`` by enumerating cochains."""
    cocycles = sum(
        1 for psi in all_cochains(action, n) if apply_coboundary(action, psi).is_zero()
    )
    if n == 0:
        return cocycles
    boundaries = {
        apply_coboundary(action, chi).values for chi in all_cochains(action, n - 1)
    }
    assert cocycles % len(boundaries) == 0
    return cocycles // len(boundaries)


@pytest.fixture
def bar_z2() -> PartialGroupTable:
    return bar_table("Z/2", 4)


@pytest.fixture
def free_a() -> PartialGroupTable:
    return free_table(("a",), 4)


def group_signature(g: FiniteGroupTable) -> Tuple[int, Tuple[int, ...]]:
    """Center size and sorted element orders; separates catalog groups below 16."""
    orders = []
    for a in range(g.order):
        power, k = a, 1
        while power != g.unit:
            power, k = g.mul[power][a], k + 1
        orders.append(k)
    return len(center_of_group(g)), tuple(sorted(orders))


def brute_force_extensions(
    K: FiniteGroupTable,
    H: FiniteGroupTable,
    alpha: Optional[Sequence[Sequence[int]]] = None,
) -> Tuple[int, List[FiniteGroupTable]]:
    """Extensions of ``H`` by an abelian ``K`` straight from group tables.

    Enumerates normalized 2-cocycles ``f: H x H -> K`` twisted by ``alpha``,
    groups them by coboundaries of normalized 1-cochains and builds the
    group on ``K x H`` for one cocycle per class.

    Returns:
        The number of normalized cocycles and one total group per class.
    """
    if alpha is None:
        alpha = [tuple(range(K.order))] * H.order
    mul, e = K.mul, K.unit
    cells = [
        (g, h) for g in range(H.order) for h in range(H.order) if H.unit not in (g, h)
    ]

    def full(values: Sequence[int]) -> Dict[Tuple[int, int], int]:
        f = {p: e for p in itertools.product(range(H.order), repeat=2)}
        f.update(zip(cells, values))
        return f

    def is_cocycle(f: Dict[Tuple[int, int], int]) -> bool:
        return all(
            mul[alpha[g][f[(h, k)]]][f[(g, H.mul[h][k])]]
            == mul[f[(g, h)]][f[(H.mul[g][h], k)]]
            for g, h, k in itertools.product(range(H.order), repeat=3)
        )

    cocycles = [
        values
        for values in itertools.product(range(K.order), repeat=len(cells))
        if is_cocycle(full(values))
    ]
    others = [x for x in range(H.order) if x != H.unit]
    boundaries = set()
    for c_values in itertools.product(range(K.order), repeat=len(others)):
        c = dict(zip(others, c_values))
        c[H.unit] = e
        boundaries.add(
            tuple(
                mul[mul[alpha[g][c[h]]][K.inverse[c[H.mul[g][h]]]]][c[g]]
                for g, h in cells
            )
        )

    representatives: List[Tuple[int, ...]] = []
    covered = set()
    for values in cocycles:
        if values in covered:
            continue
        representatives.append(values)
        covered.update(
            tuple(mul[a][b] for a, b in zip(values, shift)) for shift in boundaries
        )

    totals = []
    pairs = list(itertools.product(range(K.order), range(H.order)))
    for values in representatives:
        f = full(values)

        def operation(p, q, f=f):
            (a, g), (b, h) = p, q
            return mul[mul[a][alpha[g][b]]][f[(g, h)]], H.mul[g][h]

        totals.append(group_from_operation(pairs, operation))
    return len(cocycles), totals
