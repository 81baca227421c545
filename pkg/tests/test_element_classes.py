from math import factorial

import pytest

from hyperoct.element_classes import (
    Chessboard, Family, OddSandwich, SandwichKind, ascending_structure_check,
    chessboard_class, enumerate_descent_bounded, enumerate_even_chessboard,
    enumerate_family, enumerate_group, in_even_factorization,
    in_monochrome_factorization, is_ascending, is_diagonal,
    is_even_chessboard, iter_windows, membership, odd_sandwiches, topmost
)
from hyperoct.errors import InternalConsistencyError, PreconditionError
from hyperoct.index_set import IndexSet
from hyperoct.permutation_stats import descent_set, l_value, length
from hyperoct.signed_permutation import (
    SignedPermutation, parabolic_decompose, sigma_split
)


def w_(*window):
    return SignedPermutation(tuple(window))


def upper(n):
    return IndexSet.of(n, range(1, n))


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_group_visits_each_element_once(n):
    elements = list(enumerate_group(n))
    assert len(set(elements)) == len(elements) == 2 ** n * factorial(n)
    partitioned = [w for first in range(1, n + 1) for w in iter_windows(n, first)]
    assert sorted(partitioned) == sorted(w.window for w in elements)


@pytest.mark.parametrize("n", range(1, 7))
def test_even_chessboard_enumeration(n):
    generated = set(enumerate_even_chessboard(n))
    filtered = {w for w in enumerate_group(n) if is_even_chessboard(w)}
    assert generated == filtered


def test_chessboard_classes():
    assert chessboard_class(w_(1, -4, -3, 2)) is Chessboard.EVEN
    assert chessboard_class(w_(2, 1)) is Chessboard.ODD
    assert chessboard_class(w_(1, 3, 2)) is Chessboard.NONE


def test_factorisation_classes_examples():
    assert in_monochrome_factorization(w_(1, -2))
    assert not in_even_factorization(w_(1, -2))
    assert in_even_factorization(w_(-5, 2, 1, -4, 3))
    assert not in_monochrome_factorization(w_(3, -2, -1))


def test_membership_dispatch():
    w = w_(-1, 2)
    assert membership(w, Family.DIAGONAL)
    assert membership(w, Family.CHESSBOARD)
    assert membership(w, Family.ASCENDING)


@pytest.mark.parametrize("n", range(1, 6))
def test_families_are_inside_even_chessboard(n):
    for family in (Family.E, Family.M, Family.DIAGONAL):
        for w in enumerate_family(n, family):
            assert is_even_chessboard(w)
            assert membership(w, family)
    assert len(list(enumerate_family(n, Family.DIAGONAL))) == 2 ** n


@pytest.mark.parametrize("n", range(1, 6))
def test_descent_bounded_enumeration(n):
    subset = IndexSet.of(n, [0])
    ascending = list(enumerate_descent_bounded(n, subset))
    assert all(is_ascending(w) for w in ascending)
    assert len(ascending) == 2 ** n


def test_topmost_sandwich_of_worked_example():
    w = w_(3, -2, -1)
    assert odd_sandwiches(w) == [OddSandwich(1, 1, SandwichKind.DEGENERATE)]
    assert topmost(w) == OddSandwich(1, 1, SandwichKind.DEGENERATE)


def test_topmost_requires_a_sandwich():
    with pytest.raises(PreconditionError):
        topmost(w_(1, 2, 3))


@pytest.mark.parametrize("n", range(1, 7))
def test_monochrome_iff_no_odd_sandwich(n):
    for w in enumerate_even_chessboard(n):
        assert in_monochrome_factorization(w) == (not odd_sandwiches(w)), w


@pytest.mark.parametrize("n", range(3, 7))
def test_topmost_sandwich_is_unique(n):
    for w in enumerate_even_chessboard(n):
        if not in_monochrome_factorization(w):
            try:
                topmost(w)
            except InternalConsistencyError:
                pytest.fail(f"ambiguous topmost sandwich in {w}")


@pytest.mark.parametrize("n", range(1, 8))
def test_ascending_structure(n):
    for w in enumerate_even_chessboard(n):
        if is_ascending(w):
            assert ascending_structure_check(w), w
            assert not odd_sandwiches(w)


def test_ascending_structure_rejects_other_elements():
    with pytest.raises(PreconditionError):
        ascending_structure_check(w_(2, 1))


@pytest.mark.parametrize("n", [2, 4, 6])
def test_chessboard_permutations_with_even_descents_are_blocks(n):
    for w in enumerate_group(n):
        if any(a < 0 for a in w.window) or chessboard_class(w) is Chessboard.NONE:
            continue
        descents = descent_set(w)
        if not descents.is_even():
            continue
        assert is_even_chessboard(w)
        w1, w2 = sigma_split(w)
        assert w1 == w2
        assert descents.members == {2 * d for d in descent_set(w1).members}
        assert length(w) == 4 * length(w1)


@pytest.mark.parametrize("n", range(2, 7))
def test_l_is_additive_on_even_factorisations(n):
    for w in enumerate_even_chessboard(n):
        if not in_even_factorization(w):
            continue
        factorization = parabolic_decompose(w, upper(n))
        assert l_value(w) == l_value(factorization.quotient) + l_value(factorization.subgroup_part), w


@pytest.mark.parametrize("n", range(2, 7))
def test_split_commutes_with_factorisation_on_even_factorisations(n):
    for w in enumerate_even_chessboard(n):
        if not in_even_factorization(w):
            continue
        factorization = parabolic_decompose(w, upper(n))
        w1, w2 = sigma_split(w)
        f1 = parabolic_decompose(w1, upper(w1.n))
        f2 = parabolic_decompose(w2, upper(w2.n))
        assert sigma_split(factorization.quotient) == (f1.quotient, f2.quotient)
        assert sigma_split(factorization.subgroup_part) == (f1.subgroup_part, f2.subgroup_part)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_l_is_additive_below_the_first_positive_descent(n):
    for w in enumerate_even_chessboard(n):
        descents = descent_set(w)
        if not descents.is_even() or not in_even_factorization(w):
            continue
        bound = min((descents.members | {n}) - {0})
        for e in range(2, bound + 1, 2):
            if e > n - 1:
                break
            factorization = parabolic_decompose(w, IndexSet.of(n, range(e)))
            assert l_value(w) == l_value(factorization.quotient) + l_value(factorization.subgroup_part), (w, e)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_restriction_from_next_even_degree(n):
    def ascending(m):
        return [w for w in enumerate_even_chessboard(m) if is_ascending(w)]

    larger = ascending(n + 1)
    smaller = {w.window: w for w in ascending(n)}
    assert len(larger) == len(smaller)
    for w in larger:
        assert w.window[-1] == n + 1
        restricted = smaller[w.window[:-1]]
        assert length(restricted) == length(w)
        assert l_value(restricted) == l_value(w)


def test_diagonal_and_ascending_predicates():
    assert is_diagonal(w_(-1, 2, -3))
    assert not is_diagonal(w_(2, 1))
    assert is_ascending(w_(-3, -1, 2))
    assert not is_ascending(w_(1, -2))
