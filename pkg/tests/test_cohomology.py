import pytest
from conftest import (
    bar_table,
    brute_force_cohomology_order,
    free_table,
    sign_action,
    sign_characters,
    unit_action,
)

from parcoh.cohomology import (
    Cochain,
    action_from_matrices,
    apply_coboundary,
    coboundary,
    cocycle_basis,
    cohomology_group,
    compare_theories,
    local_coboundary,
    local_cochain_words,
    local_system_from_action,
    normalize_cocycle,
    normalized_cohomology_group,
    trivial_action,
    validate_action,
    validate_local_system,
)
from parcoh.constructions import bar, cyclic_group
from parcoh.errors import NormalizationError, StructuralError, TruncationError
from parcoh.linalg import AbHom, CyclicSum, FinAbGroup

G = 1


@pytest.fixture
def z2_on_z2(bar_z2):
    return trivial_action(bar_z2, CyclicSum((2,)))


def test_trivial_coboundary_in_degree_one(z2_on_z2):
    assert coboundary(z2_on_z2, 1).is_zero()


def test_coboundary_into_degree_two(z2_on_z2):
    psi = Cochain(z2_on_z2.table, (2,), 1, ((1,), (0,)))
    delta = apply_coboundary(z2_on_z2, psi)
    # psi(g) - psi(1) + psi(g) = psi(1)
    assert delta.value((G, G)) == (1,)
    assert delta.to_vector() == coboundary(z2_on_z2, 2).apply(psi.to_vector())


def test_coboundary_above_truncation(z2_on_z2):
    with pytest.raises(TruncationError):
        coboundary(z2_on_z2, 5)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_z2_coefficients_on_bar_z2(z2_on_z2, n):
    group = cohomology_group(z2_on_z2, n)
    assert group == FinAbGroup((2,))
    assert brute_force_cohomology_order(z2_on_z2, n) == 2


def test_cohomology_above_truncation(z2_on_z2):
    with pytest.raises(TruncationError):
        cohomology_group(z2_on_z2, 4)


def test_coprime_coefficients_are_acyclic(bar_z2):
    action = trivial_action(bar_z2, CyclicSum((3,)))
    assert cohomology_group(action, 0) == FinAbGroup((3,))
    for n in (1, 2, 3):
        assert cohomology_group(action, n) == FinAbGroup.trivial()


def test_z3_on_bar_z3():
    action = trivial_action(bar_table("Z/3", 3), CyclicSum((3,)))
    assert cohomology_group(action, 1) == FinAbGroup((3,))
    assert brute_force_cohomology_order(action, 1) == 3


def test_integer_coefficients(bar_z2):
    action = trivial_action(bar_z2, CyclicSum((0,)))
    assert cohomology_group(action, 0) == FinAbGroup((0,))
    assert cohomology_group(action, 1) == FinAbGroup.trivial()
    assert cohomology_group(action, 2) == FinAbGroup((2,))


def test_sign_action_on_integers(bar_z2):
    action = action_from_matrices(bar_z2, (0,), {G: [[-1]]})
    assert validate_action(action).ok
    assert str(cohomology_group(action, 0)) == "0"
    assert cohomology_group(action, 1) == FinAbGroup((2,))
    assert cohomology_group(action, 2) == FinAbGroup.trivial()


@pytest.mark.parametrize("moduli", [(0,), (3,), (0, 3)])
def test_sign_actions_are_valid(bar_z2, moduli):
    action = sign_action(bar_z2, moduli, (0, 1))
    report = validate_action(action)
    assert report.ok, report.summary()
    assert validate_local_system(local_system_from_action(action)).ok


def test_trivial_partial_group_is_acyclic():
    table = bar(cyclic_group(1), 4)
    action = trivial_action(table, CyclicSum((2, 4)))
    for n in (1, 2, 3):
        assert cohomology_group(action, n) == FinAbGroup.trivial()
        assert compare_theories(action, n)


def test_invalid_action_is_reported():
    table = bar_table("Z/3", 3)
    g, g2 = table.index("g"), table.index("g2")
    action = action_from_matrices(table, (5,), {g: [[2]], g2: [[4]]})
    report = validate_action(action)
    assert not report.ok
    assert "action-product" in report.kinds()
    assert "action-inverse" in report.kinds()


def test_action_needs_endomorphisms(bar_z2):
    with pytest.raises(StructuralError):
        action_from_matrices(bar_z2, (2,), {G: [[1, 0]]})


def test_local_system_inverts_the_action(free_a):
    action = unit_action(free_a, (5,), 2)
    assert validate_action(action).ok
    system = local_system_from_action(action)
    assert system.A[free_a.index("a")].equals(AbHom.scalar(CyclicSum((5,)), 3))
    assert validate_local_system(system).ok


def test_local_system_of_negation(bar_z2):
    action = sign_action(bar_z2, (3,), (0, 1))
    system = local_system_from_action(action)
    assert system.A[G].equals(AbHom.scalar(CyclicSum((3,)), -1))


def test_normalized_complex_ranks(z2_on_z2):
    table = z2_on_z2.table
    assert local_cochain_words(table, 1) == ((G,),)
    assert local_cochain_words(table, 2) == ((G, G),)
    system = local_system_from_action(z2_on_z2)
    d3 = local_coboundary(system, 3)
    d2 = local_coboundary(system, 2)
    assert d3.compose(d2).is_zero()
    assert normalized_cohomology_group(system, 2) == FinAbGroup((2,))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_theories_agree_on_bar_z2(z2_on_z2, n):
    assert compare_theories(z2_on_z2, n)


@pytest.mark.parametrize("n", [1, 2])
def test_theories_agree_on_free_partial_groups(n):
    table = free_table(("a", "b"), 4)
    action = trivial_action(table, CyclicSum((2,)))
    assert compare_theories(action, n)
    plain = cohomology_group(action, n)
    assert plain.order == brute_force_cohomology_order(action, n)


def test_theories_agree_with_a_sign_action(bar_z2):
    for s in sign_characters(bar_z2)[1:]:
        action = sign_action(bar_z2, (0,), s)
        for n in (1, 2, 3):
            assert compare_theories(action, n)


def test_normalized_cocycle_is_unchanged(z2_on_z2):
    table = z2_on_z2.table
    psi = Cochain.from_function(
        table, (2,), 2, lambda w: (1,) if w == (G, G) else (0,)
    )
    assert apply_coboundary(z2_on_z2, psi).is_zero()
    result = normalize_cocycle(z2_on_z2, psi)
    assert result.normalized.values == psi.values
    assert all(chi.is_zero() for chi in result.chis)


def test_normalizing_a_coboundary(z2_on_z2):
    table = z2_on_z2.table
    chi = Cochain(table, (2,), 1, ((1,), (0,)))
    psi = apply_coboundary(z2_on_z2, chi)
    assert psi.degenerate_support() == (0, 0)
    result = normalize_cocycle(z2_on_z2, psi)
    assert result.normalized.is_normalized()
    assert len(result.stages) == 3
    for i, stage in enumerate(result.stages):
        assert stage.is_normalized(i)
    difference = psi - result.normalized
    correction = apply_coboundary(z2_on_z2, result.correction())
    assert difference.values == correction.values
    assert apply_coboundary(z2_on_z2, result.normalized).is_zero()


def test_normalizing_random_cocycles_on_free_a(free_a):
    action = trivial_action(free_a, CyclicSum((2,)))
    basis = cocycle_basis(action, 2)
    psi = basis[0]
    for other in basis[1:]:
        psi = psi + other
    result = normalize_cocycle(action, psi)
    assert result.normalized.is_normalized()
    assert (psi - result.normalized).values == apply_coboundary(
        action, result.correction()
    ).values


def test_normalization_needs_normalized_coboundary():
    table = bar_table("Z/2", 3)
    action = trivial_action(table, CyclicSum((2,)))
    psi = Cochain(table, (2,), 1, ((1,), (0,)))
    with pytest.raises(NormalizationError) as excinfo:
        normalize_cocycle(action, psi)
    assert excinfo.value.witness == ("1", "1")


def test_normalization_above_truncation():
    table = bar_table("Z/2", 3)
    action = trivial_action(table, CyclicSum((2,)))
    with pytest.raises(TruncationError):
        normalize_cocycle(action, Cochain.zero(table, (2,), 3))


def test_degree_zero_normalization_has_no_correction(z2_on_z2):
    psi = Cochain(z2_on_z2.table, (2,), 0, ((1,),))
    result = normalize_cocycle(z2_on_z2, psi)
    assert result.correction() is None
    assert result.normalized.values == psi.values
