from collections import deque

import pytest
from hypothesis import given

from hyperoct.element_classes import enumerate_group
from hyperoct.errors import InternalConsistencyError
from hyperoct.index_set import IndexSet
from hyperoct.permutation_stats import (
    abc_stats, bar_b_bar_c, descent_set, l_direct, l_value, length,
    length_stats, row_pattern, stat_record, window_profile
)
from hyperoct.signed_permutation import (
    SignedPermutation, compose, identity, longest_element, matrix_view,
    parabolic_decompose, sigma_split
)
from tests.strategies import signed_permutations


def w_(*window):
    return SignedPermutation(tuple(window))


def test_worked_example_abc():
    w = w_(1, -4, -3, 2)
    assert abc_stats(matrix_view(w)) == (1, 2, 1)
    assert l_value(w) == 5
    assert l_direct(w) == 5


def test_worked_example_length_and_descents():
    w = w_(3, -2, -1)
    assert length_stats(w) == (2, 2, 1, 5)
    assert l_value(w) == 3
    assert descent_set(w) == IndexSet.of(3, [1])


def test_degree_one():
    assert (length(w_(1)), l_value(w_(1))) == (0, 0)
    assert (length(w_(-1)), l_value(w_(-1))) == (1, 1)


def test_parabolic_factor_values():
    # L is not additive on this factorisation at {0,1}
    w = w_(-5, 2, 1, -4, 3)
    factorization = parabolic_decompose(w, IndexSet.of(5, [0, 1]))
    assert descent_set(w) == IndexSet.of(5, [0, 2, 3])
    assert l_value(w) == 7
    assert l_value(factorization.quotient) == 7
    assert l_value(factorization.subgroup_part) == 2


def test_monochrome_l_not_additive():
    w = w_(1, -2)
    factorization = parabolic_decompose(w, IndexSet.of(2, [1]))
    assert l_value(w) == 2
    assert l_value(factorization.quotient) + l_value(factorization.subgroup_part) == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_both_forms_of_l_agree(n):
    for w in enumerate_group(n):
        assert l_direct(w) == l_value(w), w


@pytest.mark.parametrize("n", range(1, 6))
def test_window_profile_matches_separate_statistics(n):
    for w in enumerate_group(n):
        mask, ell, neg, big_l = window_profile(w.window)
        assert mask == descent_set(w).mask
        assert ell == length(w)
        assert neg == length_stats(w)[1]
        assert big_l == l_value(w)


@pytest.mark.parametrize("n", range(1, 6))
def test_bar_statistics_count_inv_plus_nsp(n):
    for w in enumerate_group(n):
        inv, _, nsp, _ = length_stats(w)
        bar_b, bar_c = bar_b_bar_c(matrix_view(w))
        assert bar_b + 2 * bar_c == inv + nsp


@pytest.mark.parametrize("n", range(2, 6))
def test_l_from_the_split_parts(n):
    # L(w) = neg(w1) + (inv+nsp)(w) - (inv+nsp)(w1) - (inv+nsp)(w2)
    for w in enumerate_group(n):
        w1, w2 = sigma_split(w)
        inv, _, nsp, _ = length_stats(w)
        inv1, neg1, nsp1, _ = length_stats(w1)
        inv2, _, nsp2, _ = length_stats(w2)
        assert l_value(w) == neg1 + inv + nsp - inv1 - nsp1 - inv2 - nsp2


@pytest.mark.parametrize("n", range(1, 7))
def test_longest_element_values(n):
    w0 = longest_element(n)
    assert l_value(w0) == n * (n + 1) // 2
    assert l_value(identity(n)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_multiplying_by_w0_complements_l_and_length(n):
    w0 = longest_element(n)
    top = n * (n + 1) // 2
    for w in enumerate_group(n):
        assert length(compose(w0, w)) == n * n - length(w)
        assert l_value(compose(w, w0)) == top - l_value(w)
        assert l_value(compose(w0, w)) == top - l_value(w)
        if l_value(w) == top:
            assert w == w0


@pytest.mark.parametrize("n", range(2, 6))
def test_descents_of_subgroup_part(n):
    subset = IndexSet.of(n, range(1, n))
    for u in enumerate_group(n):
        part = parabolic_decompose(u, subset).subgroup_part
        assert descent_set(u).members - {0} == descent_set(part).members


@pytest.mark.parametrize("n", range(1, 6))
def test_right_generator_changes_length_by_one(n):
    for w in enumerate_group(n):
        descents = descent_set(w).members
        for i in range(n):
            step = length(w.times_generator(i)) - length(w)
            assert step == (-1 if i in descents else 1), (w, i)


def test_length_matches_cayley_graph_distance():
    n = 4
    start = identity(n)
    distance = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(n):
            neighbour = w.times_generator(i)
            if neighbour not in distance:
                distance[neighbour] = distance[w] + 1
                queue.append(neighbour)
    assert len(distance) == 2 ** n * 24
    for w, d in distance.items():
        assert length(w) == d


def test_row_pattern():
    assert row_pattern(w_(3, -2, -1)) == (-1, -1, 1)
    assert row_pattern(w_(1, -4, -3, 2)) == (1, 1, -1, -1)


def test_stat_record_to_dict():
    record = stat_record(w_(1, -4, -3, 2))
    assert record.to_dict() == {
        "inv": 2, "neg": 2, "nsp": 5, "length": 9, "L": 5,
        "a": 1, "b": 2, "c": 1, "descents": [1],
    }


@given(signed_permutations(max_n=8))
def test_l_is_bounded_by_length(w):
    assert 0 <= l_value(w) <= length(w)


def test_l_direct_rejects_odd_raw_count():
    class Broken(SignedPermutation):
        def __call__(self, x):
            return -1 if x == 1 else x

    with pytest.raises(InternalConsistencyError):
        l_direct(Broken((1, 2)))
