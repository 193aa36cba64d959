import pytest
from conftest import bar_table, free_table, swap_map, z4_extension

from parcoh.constructions import (
    bar,
    cyclic_group,
    group_automorphisms,
    small_group_catalog,
)
from parcoh.errors import SearchBoundExceeded, StructuralError
from parcoh.homotopy import (
    PGHom,
    automorphisms,
    center,
    check_homotopy,
    compose,
    conjugation,
    find_isomorphism,
    from_name_map,
    identity_hom,
    inverse_hom,
    is_homomorphism,
    normalizer,
    outer_classes,
)


@pytest.fixture
def trivial():
    return bar(cyclic_group(1), 3)


def test_identity_is_a_homomorphism(free_a):
    assert is_homomorphism(identity_hom(free_a))


def test_free_to_bar_collapses_inverses(free_a, bar_z2):
    f = from_name_map(free_a, bar_z2, {"a": "g", "~a": "g"})
    assert is_homomorphism(f)


def test_bar_to_free_fails_on_the_domain(free_a, bar_z2):
    f = PGHom(bar_z2, free_a, (0, 1))
    check = is_homomorphism(f)
    assert not check
    assert check.witness == ("g", "g")


def test_unit_must_be_preserved(bar_z2):
    check = is_homomorphism(PGHom(bar_z2, bar_z2, (1, 1)))
    assert not check
    assert check.witness == ("1",)


def test_malformed_maps_raise(bar_z2, free_a):
    with pytest.raises(StructuralError):
        PGHom(bar_z2, bar_z2, (0,))
    with pytest.raises(StructuralError):
        PGHom(bar_z2, bar_z2, (0, 2))
    with pytest.raises(StructuralError):
        from_name_map(bar_z2, free_a, {"h": "a"})
    with pytest.raises(StructuralError):
        compose(identity_hom(bar_z2), identity_hom(free_a))


def test_constant_homotopy(free_a):
    identity = identity_hom(free_a)
    assert check_homotopy(identity, identity, 0)


def test_conjugation_in_s3_is_a_homotopy():
    s3 = bar_table("S_3", 3)
    transposition = s3.index("(12)")
    c = conjugation(s3, transposition)
    assert c is not None
    assert check_homotopy(c, identity_hom(s3), transposition)
    # conjugation by a transposition is not the identity
    assert c.map1 != identity_hom(s3).map1


def test_generator_is_not_a_homotopy_on_free(free_a):
    identity = identity_hom(free_a)
    check = check_homotopy(identity, identity, free_a.index("a"))
    assert not check
    assert check.witness == ("a",)


def test_normalizer_of_free_is_trivial(trivial):
    assert list(normalizer(free_table(("a", "b"), 4))) == [0]
    assert list(normalizer(trivial)) == [0]


def test_normalizer_of_bar_is_the_group():
    s3 = bar_table("S_3", 3)
    assert list(normalizer(s3)) == list(s3.elements)


def test_center():
    z2 = bar_table("Z/2", 3)
    assert center(z2) == (0, 1)
    assert center(bar_table("S_3", 3)) == (0,)
    assert center(free_table(("a",), 3)) == (0,)


def test_automorphism_counts(trivial):
    assert len(automorphisms(trivial)) == 1
    assert len(automorphisms(bar_table("Z/2", 3))) == 1
    assert len(automorphisms(free_table(("a",), 3))) == 2
    assert len(automorphisms(free_table(("a", "b"), 3))) == 8
    assert len(automorphisms(free_table(("a", "b", "c"), 3))) == 48


def test_swap_is_an_automorphism(free_a):
    swap = swap_map(free_a)
    assert is_homomorphism(swap)
    assert compose(swap, swap).map1 == identity_hom(free_a).map1
    assert inverse_hom(swap).map1 == swap.map1


def test_search_bound_is_enforced():
    with pytest.raises(SearchBoundExceeded):
        automorphisms(free_table(("a", "b"), 3), bound=4)


def test_search_bound_from_settings(monkeypatch):
    monkeypatch.setenv("PARCOH_SEARCH_BOUND", "4")
    with pytest.raises(SearchBoundExceeded):
        automorphisms(free_table(("a", "b"), 3))


@pytest.mark.parametrize(
    "table, out",
    [
        (free_table(("a",), 3), 2),
        (free_table(("a", "b"), 3), 8),
        (bar_table("S_3", 3), 1),
        (bar_table("Z/3", 3), 2),
        (bar_table("Z/2xZ/2", 3), 6),
        (bar(cyclic_group(1), 3), 1),
    ],
)
def test_outer_classes(table, out):
    classes = outer_classes(table)
    assert len(classes.classes) == out
    # exactness of Z -> N -> Aut -> Out
    assert len(classes.automorphisms) * len(classes.center) == (
        len(classes.normalizer) * len(classes.classes)
    )
    for f in classes.automorphisms:
        assert classes.class_of(f) < out


def test_isomorphism_to_bar_of_z4():
    total = z4_extension(3).total
    assert total.order == 4
    assert find_isomorphism(total, bar_table("Z/4", 3)) is not None
    assert find_isomorphism(total, bar_table("Z/2xZ/2", 3)) is None


CATALOG = [
    (name, g) for order in range(1, 9) for name, g in small_group_catalog(order).items()
]


@pytest.mark.parametrize("name, g", CATALOG, ids=[name for name, _ in CATALOG])
def test_bar_has_the_group_automorphisms(name, g):
    table = bar(g, 3)
    found = automorphisms(table)
    assert len(found) == len(group_automorphisms(g))
    assert len(normalizer(table)) == g.order
    assert len(center(table)) == sum(
        all(g.mul[a][b] == g.mul[b][a] for b in range(g.order))
        for a in range(g.order)
    )


def test_free_partial_group_on_three_generators_has_trivial_normalizer():
    table = free_table(("a", "b", "c"), 3)
    assert list(normalizer(table)) == [0]
    assert center(table) == (0,)
