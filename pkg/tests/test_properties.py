"""Property checks over a corpus of valid tables and coefficient groups."""

import pytest
from conftest import (
    COEFFICIENTS,
    CORPUS,
    actions_for,
    brute_force_cohomology_order,
    corpus_table,
)
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from parcoh.cohomology import (
    apply_coboundary,
    coboundary,
    cocycle_basis,
    cohomology_group,
    compare_theories,
    normalize_cocycle,
    validate_action,
)
from parcoh.core import opposite, validate
from parcoh.homotopy import outer_classes

corpus = st.sampled_from(CORPUS)
coefficients = st.sampled_from(COEFFICIENTS)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_tables_are_valid(name):
    table = corpus_table(name)
    assert validate(table).ok
    assert validate(opposite(table)).ok


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_actions_are_valid(name):
    for moduli in COEFFICIENTS:
        for action in actions_for(name, moduli):
            report = validate_action(action)
            assert report.ok, report.summary()


@settings(max_examples=200, deadline=None)
@given(corpus, coefficients, st.data())
def test_coboundary_squares_to_zero(name, moduli, data):
    actions = actions_for(name, moduli)
    action = data.draw(st.sampled_from(actions))
    N = action.table.max_degree
    n = data.draw(st.integers(min_value=1, max_value=N - 1))
    assert coboundary(action, n + 1).compose(coboundary(action, n)).is_zero()


@pytest.mark.parametrize("moduli", COEFFICIENTS)
@pytest.mark.parametrize("name", CORPUS)
def test_theories_agree(name, moduli):
    for action in actions_for(name, moduli):
        top = min(3, action.table.max_degree - 1)
        for n in range(top + 1):
            assert compare_theories(action, n), (name, moduli, n)


@settings(max_examples=100, deadline=None)
@given(corpus, coefficients, st.data())
def test_normalization_of_random_cocycles(name, moduli, data):
    action = data.draw(st.sampled_from(actions_for(name, moduli)))
    top = min(3, action.table.max_degree - 1)
    n = data.draw(st.integers(min_value=1, max_value=top))
    basis = cocycle_basis(action, n)
    assume(basis)
    weights = data.draw(
        st.lists(
            st.integers(min_value=-3, max_value=3),
            min_size=len(basis),
            max_size=len(basis),
        )
    )
    psi = basis[0].scaled(weights[0])
    for weight, cocycle in zip(weights[1:], basis[1:]):
        psi = psi + cocycle.scaled(weight)
    result = normalize_cocycle(action, psi)
    normalized = result.normalized
    assert normalized.is_normalized()
    assert apply_coboundary(action, normalized).is_zero()
    correction = apply_coboundary(action, result.correction())
    assert (psi - normalized).values == correction.values


def _cochain_count(action, n):
    order = action.coeffs.order
    return order ** len(action.table.words(n))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["bar Z/2", "bar Z/3", "bar Z/4"]), st.data())
def test_bar_cohomology_matches_enumeration(name, data):
    moduli = data.draw(st.sampled_from([(2,), (3,), (4,), (5,)]))
    action = data.draw(st.sampled_from(actions_for(name, moduli)))
    n = data.draw(st.integers(min_value=0, max_value=2))
    assume(_cochain_count(action, n) <= 5000)
    assume(n == 0 or _cochain_count(action, n - 1) <= 5000)
    group = cohomology_group(action, n)
    assert group.order == brute_force_cohomology_order(action, n)


def test_free_partial_group_cohomology_matches_enumeration():
    for moduli in ((2,), (3,)):
        for action in actions_for("free a", moduli):
            for n in (0, 1, 2):
                group = cohomology_group(action, n)
                assert group.order == brute_force_cohomology_order(action, n)


@pytest.mark.parametrize("name", CORPUS)
def test_automorphism_sequence_is_exact(name):
    classes = outer_classes(corpus_table(name))
    assert len(classes.automorphisms) * len(classes.center) == (
        len(classes.normalizer) * len(classes.classes)
    )
    assert set(classes.center) <= set(classes.normalizer)
