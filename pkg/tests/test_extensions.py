import pytest
from conftest import (
    bar_table,
    brute_force_extensions,
    free_table,
    group,
    group_signature,
    swap_extension,
    swap_map,
    z4_extension,
)

from parcoh.cohomology import cohomology_group, induced_center_action
from parcoh.constructions import bar, cyclic_group, product, small_group_catalog
from parcoh.core import tables_equal, validate
from parcoh.errors import InvalidTwistingPairError, SearchBoundExceeded, StructuralError
from parcoh.extensions import (
    NO_EXTENSION,
    TwistingKind,
    TwistingPair,
    classify_group_extensions,
    count_free_extensions,
    enumerate_outer_actions,
    extension_equivalent,
    find_equivalence,
    free_extension_formula,
    identify_total,
    pair_with_eta,
    search_eta,
    trivial_pair,
    twisted_product,
    validate_twisting_pair,
)
from parcoh.homotopy import PGHom, identity_hom, is_homomorphism, normalizer

G = 1


def test_trivial_pair_gives_the_product():
    base, fiber = bar_table("Z/2", 3), free_table(("a",), 3)
    extension = twisted_product(trivial_pair(base, fiber))
    assert tables_equal(extension.total, product(fiber, base))
    assert is_homomorphism(extension.projection)
    assert is_homomorphism(extension.fiber_inclusion)


def test_trivial_pair_is_valid():
    pair = trivial_pair(bar_table("S_3", 3), bar_table("Z/2", 3))
    report = validate_twisting_pair(pair)
    assert report.ok, report.summary()


def test_swap_extension():
    extension = swap_extension(3)
    assert validate_twisting_pair(extension.pair).ok
    assert extension.total.order == 6
    assert validate(extension.total).ok
    assert extension.check_local_triviality().ok
    assert extension.decode(extension.encode(2, G)) == (2, G)


def test_fiber_over_a_base_word():
    extension = swap_extension(3)
    fiber = extension.fiber
    over = extension.fiber_over((G, G))
    assert len(over) == len(fiber.words(2))
    assert all(extension.projection.apply_word(w) == (G, G) for w in over)
    with pytest.raises(StructuralError):
        extension.fiber_over((G,) * 4)


def test_eta_off_the_normalizer_is_rejected():
    base, fiber = bar_table("Z/2", 3), free_table(("a",), 3)
    pair = pair_with_eta(base, fiber, [identity_hom(fiber)] * 2, {(G, G): 1})
    report = validate_twisting_pair(pair)
    assert TwistingKind.NORMALIZER in report.kinds()
    with pytest.raises(InvalidTwistingPairError):
        twisted_product(pair)


def test_eta_must_vanish_on_units():
    z2 = bar_table("Z/2", 3)
    pair = pair_with_eta(z2, z2, [identity_hom(z2)] * 2, {(0, G): G})
    assert TwistingKind.ETA_UNIT in validate_twisting_pair(pair).kinds()


def test_twist_must_be_an_automorphism():
    base, fiber = bar_table("Z/2", 3), free_table(("a",), 3)
    collapse = PGHom(fiber, fiber, (0, 1, 1))
    pair = pair_with_eta(base, fiber, [identity_hom(fiber), collapse])
    kinds = validate_twisting_pair(pair).kinds()
    assert TwistingKind.AUTOMORPHISM in kinds


def test_twist_of_the_unit_is_the_identity():
    base, fiber = bar_table("Z/2", 3), free_table(("a",), 3)
    pair = pair_with_eta(base, fiber, [swap_map(fiber), swap_map(fiber)])
    assert TwistingKind.UNIT in validate_twisting_pair(pair).kinds()


def test_swap_without_eta_on_z4_fails_the_homotopy():
    base, fiber = bar_table("Z/4", 3), free_table(("a",), 3)
    t = [identity_hom(fiber)] + [swap_map(fiber)] * 3
    pair = pair_with_eta(base, fiber, t)
    report = validate_twisting_pair(pair)
    assert TwistingKind.HOMOTOPY in report.kinds()
    assert any(v.witness == ("g", "g") for v in report.violations)


def test_cocycle_condition_is_checked():
    # Z/3 fiber over Z/3, eta(g, g) = g only: fails on (g, g, g2)
    base, fiber = bar_table("Z/3", 3), bar_table("Z/3", 3)
    g = base.index("g")
    pair = pair_with_eta(base, fiber, [identity_hom(fiber)] * 3, {(g, g): g})
    assert TwistingKind.COCYCLE in validate_twisting_pair(pair).kinds()


def test_cocycle_check_is_skipped_in_degree_two():
    z2 = bar_table("Z/2", 2)
    pair = pair_with_eta(z2, z2, [identity_hom(z2)] * 2, {(G, G): G})
    assert validate_twisting_pair(pair).ok


def test_malformed_pairs_raise():
    base, fiber = bar_table("Z/2", 3), free_table(("a",), 3)
    with pytest.raises(StructuralError):
        TwistingPair(base, fiber, (identity_hom(fiber),), {})
    with pytest.raises(StructuralError):
        TwistingPair(base, fiber, (identity_hom(fiber),) * 2, {(0, 0): 0})
    with pytest.raises(StructuralError):
        pair_with_eta(base, fiber, [identity_hom(fiber)] * 2, {(G, G): 9})


def test_z4_extension():
    extension = z4_extension(4)
    assert validate(extension.total).ok
    assert extension.check_local_triviality().ok
    assert identify_total(extension) == "Z/4"


def test_equivalence_is_reflexive():
    extension = z4_extension(3)
    psi = find_equivalence(extension, extension)
    assert psi is not None
    assert is_homomorphism(psi)


def test_z4_is_not_equivalent_to_the_product():
    z2 = bar_table("Z/2", 3)
    split = twisted_product(trivial_pair(z2, z2))
    assert not extension_equivalent(split, z4_extension(3))


def test_coboundary_twist_is_equivalent_to_the_product():
    base, fiber = bar_table("Z/2", 3), bar_table("Z/3", 3)
    g = fiber.index("g")
    twisted = twisted_product(
        pair_with_eta(base, fiber, [identity_hom(fiber)] * 2, {(G, G): g})
    )
    split = twisted_product(trivial_pair(base, fiber))
    psi = find_equivalence(split, twisted)
    assert psi is not None
    for x in fiber.elements:
        assert psi(split.encode(x, 0)) == twisted.encode(x, 0)
    for e in split.total.elements:
        assert twisted.projection(psi(e)) == split.projection(e)


def test_equivalence_needs_the_same_base_and_fiber():
    z2 = bar_table("Z/2", 3)
    other = twisted_product(trivial_pair(bar_table("Z/3", 3), z2))
    with pytest.raises(StructuralError):
        find_equivalence(z4_extension(3), other)


def test_equivalence_search_bound():
    z4 = z4_extension(3)
    with pytest.raises(SearchBoundExceeded):
        find_equivalence(z4, z4, bound=1)


def test_outer_actions_of_free_groups():
    base = free_table(("x",), 3)
    fiber = free_table(("y",), 3)
    pairs = enumerate_outer_actions(base, fiber)
    assert len(pairs) == 2
    for pair in pairs:
        assert validate(twisted_product(pair).total).ok


def test_outer_actions_need_a_free_base():
    with pytest.raises(StructuralError):
        enumerate_outer_actions(bar_table("Z/2", 3), free_table(("a",), 3))


@pytest.mark.parametrize(
    "x, y, count",
    [(0, 1, 1), (1, 1, 2), (1, 2, 8), (2, 1, 4), (1, 3, 48), (2, 2, 64)],
)
def test_count_free_extensions(x, y, count):
    assert free_extension_formula(x, y) == count
    assert count_free_extensions(x, y) == count


def test_count_free_extensions_rejects_negative_counts():
    with pytest.raises(StructuralError):
        count_free_extensions(-1, 1)


def test_induced_center_action():
    base, fiber = bar_table("Z/2", 3), bar_table("Z/3", 3)
    inversion = PGHom(fiber, fiber, (0, 2, 1))
    action, presentation = induced_center_action(
        base, fiber, tuple(fiber.elements), [identity_hom(fiber), inversion]
    )
    assert str(presentation.group) == "Z/3"
    assert cohomology_group(action, 2).order == 1
    assert cohomology_group(action, 1).order == 1


def test_classify_trivial_action_on_z2():
    z2 = group("Z/2")
    result = classify_group_extensions(z2, z2)
    assert result.count == 2
    assert result.solutions == 2
    assert result.exhausted
    assert result.h2.order == 2
    assert result.consistent
    assert set(result.totals) == {"Z/2×Z/2", "Z/4"}


def test_classify_inversion_on_z3():
    alpha = [(0, 1, 2), (0, 2, 1)]
    result = classify_group_extensions(group("Z/3"), group("Z/2"), alpha)
    assert result.count == 1
    assert result.solutions == 1
    assert result.totals == ["S_3"]
    assert result.h2.order == 1


def test_classify_trivial_action_on_z3():
    result = classify_group_extensions(group("Z/3"), group("Z/2"))
    assert result.count == 1
    assert result.solutions == 3
    assert result.totals == ["Z/6"]


def test_classify_inversion_on_z4():
    alpha = [(0, 1, 2, 3), (0, 3, 2, 1)]
    result = classify_group_extensions(group("Z/4"), group("Z/2"), alpha)
    assert result.count == 2
    assert result.h2.order == 2
    assert sorted(result.totals) == ["D_4", "Q_8"]
    assert result.unidentified == []


def test_unidentified_totals_are_reported(monkeypatch):
    assert identify_total(z4_extension(3), bound=2) is None
    monkeypatch.setenv("PARCOH_SEARCH_BOUND", "3")
    z2 = group("Z/2")
    result = classify_group_extensions(z2, z2)
    assert result.totals == [None, None]
    assert result.unidentified == [0, 1]
    assert "2 total(s) of order 4 unidentified" in result.message
    assert "catalog incomplete" not in result.message


EXTENSION_CASES = [
    ("Z/2", "Z/2", None),
    ("Z/3", "Z/2", None),
    ("Z/3", "Z/2", [(0, 1, 2), (0, 2, 1)]),
    ("Z/2", "Z/3", None),
    ("Z/4", "Z/2", None),
    ("Z/4", "Z/2", [(0, 1, 2, 3), (0, 3, 2, 1)]),
    ("Z/2", "Z/4", None),
    ("Z/2xZ/2", "Z/2", None),
    ("Z/2xZ/2", "Z/2", [(0, 1, 2, 3), (0, 2, 1, 3)]),
    ("Z/3", "Z/3", None),
]


@pytest.mark.parametrize("kernel, quotient, alpha", EXTENSION_CASES)
def test_classification_matches_group_cocycles(kernel, quotient, alpha):
    K, H = group(kernel), group(quotient)
    cocycles, totals = brute_force_extensions(K, H, alpha)
    result = classify_group_extensions(K, H, alpha)
    assert result.exhausted
    assert result.solutions == cocycles
    assert result.count == len(totals) == result.h2.order
    catalog = small_group_catalog(K.order * H.order)
    assert None not in result.totals
    found = sorted(group_signature(catalog[name]) for name in result.totals)
    assert found == sorted(group_signature(g) for g in totals)


def test_classify_over_the_trivial_group():
    result = classify_group_extensions(group("Z/2"), cyclic_group(1))
    assert result.count == 1
    assert result.found


def test_classify_rejects_bad_input():
    z2, z3 = group("Z/2"), group("Z/3")
    with pytest.raises(StructuralError):
        classify_group_extensions(z3, z2, max_degree=2)
    with pytest.raises(StructuralError):
        classify_group_extensions(z3, z2, [(0, 1, 2)])
    with pytest.raises(StructuralError):
        classify_group_extensions(z3, z2, [(0, 1, 2), (0, 1, 1)])


def test_eta_search_reports_the_bound():
    z2 = bar_table("Z/2", 3)
    t = [identity_hom(z2)] * 2
    solutions, exhausted = search_eta(z2, z2, t, normalizer(z2), bound=1)
    assert not exhausted
    assert len(solutions) <= 1
    solutions, exhausted = search_eta(z2, z2, t)
    assert exhausted
    assert [s[(G, G)] for s in solutions] == [0, 1]


def test_no_extension_message():
    assert NO_EXTENSION == "no extension found up to search bound"


def test_twisted_product_respects_max_degree():
    z2 = bar_table("Z/2", 4)
    pair = trivial_pair(z2, bar(cyclic_group(3), 4))
    extension = twisted_product(pair, max_degree=3)
    assert extension.total.max_degree == 3
