import random
from math import factorial

import pytest

from hyperoct.element_classes import Family, enumerate_descent_bounded, enumerate_group
from hyperoct.errors import NegativeWeightError, PreconditionError
from hyperoct.generating_functions import (
    AffineWeight, ConjectureVerifier, Stat, descent_table, fg_genfun,
    identity_checks, signed_genfun, support_check, verify_all,
    verify_conjecture
)
from hyperoct.index_set import IndexSet
from hyperoct.polynomial import (
    IntPolynomial, even_closed_form, odd_q_product, q_factorial
)


def P(*coefficients):
    return IntPolynomial(tuple(coefficients))


def test_signed_genfun_small_groups():
    assert signed_genfun(enumerate_group(1)) == P(1, -1)
    assert signed_genfun(enumerate_group(2)) == q_factorial(2)
    assert signed_genfun(enumerate_descent_bounded(4, IndexSet.empty(4))) == IntPolynomial.one()


def test_signed_genfun_rejects_negative_weights():
    with pytest.raises(NegativeWeightError):
        signed_genfun(enumerate_group(2), weight_stat=AffineWeight(0, -1))


@pytest.mark.parametrize("n", range(1, 7))
def test_descent_table_totals(tables, n):
    table = tables[n]
    assert sum(table.counts.values()) == 2 ** n * factorial(n)
    assert table.total() == q_factorial(n)
    assert table.class_sum(IndexSet.full(n)) == q_factorial(n)
    assert table.class_sum(IndexSet.empty(n)) == IntPolynomial.one()
    assert table.class_sum(IndexSet.of(n, [0])) == odd_q_product(n)


def test_descent_table_degree_two(tables):
    assert tables[2].bucket(IndexSet.empty(2)) == IntPolynomial.one()
    assert tables[2].bucket(IndexSet.of(2, [0])) == P(0, -1)
    assert tables[2].class_sum(IndexSet.of(2, [0])) == P(1, -1)
    assert tables[2].class_count(IndexSet.of(2, [0])) == 4


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sums_agree_with_filtered_streams(tables, n):
    rng = random.Random(n)
    masks = [rng.randrange(1 << n) for _ in range(10)]
    for mask in masks:
        subset = IndexSet.from_mask(n, mask)
        direct = signed_genfun(enumerate_descent_bounded(n, subset))
        assert tables[n].class_sum(subset) == direct


def test_parallel_table_matches_serial():
    serial = descent_table(4, jobs=1)
    parallel = descent_table(4, jobs=2)
    assert serial.buckets == parallel.buckets
    assert serial.counts == parallel.counts


@pytest.mark.parametrize("n", range(1, 7))
def test_verify_all(n):
    reports = verify_all(n)
    assert len(reports) == 2 ** n
    assert all(r.passed for r in reports), [r.subset.render() for r in reports if not r.passed]


@pytest.mark.slow
def test_verify_all_degree_seven():
    reports = ConjectureVerifier(7, jobs=2).verify_all()
    assert all(r.passed for r in reports)


def test_verify_conjecture_examples():
    report = verify_conjecture(3, IndexSet.of(3, [0]))
    assert report.lhs == report.rhs == P(1, -1) * P(1, 0, 0, -1)
    assert report.verdict == "pass"
    report = verify_conjecture(4, IndexSet.of(4, [0, 2]))
    assert report.passed
    assert report.lhs == even_closed_form(4, IndexSet.of(4, [0, 2]))


def test_report_to_dict():
    report = verify_conjecture(1, IndexSet.of(1, [0]))
    assert report.to_dict() == {
        "check": "conjecture", "n": 1, "I": [0], "lhs": [1, -1], "rhs": [1, -1],
        "verdict": "pass", "element_count": 2,
    }


def _support_cases(n):
    full = IndexSet.full(n)
    for subset in IndexSet.all_subsets(n):
        yield subset, Family.CHESSBOARD
        if 0 in subset:
            yield subset, Family.M
            if n % 2 == 1 or subset.is_even():
                yield subset, Family.E
    yield full, Family.DIAGONAL


@pytest.mark.parametrize("n", range(1, 7))
def test_support_identities(tables, n):
    for subset, family in _support_cases(n):
        report = support_check(n, subset, family, tables[n])
        assert report.passed, (subset.render(), family)


def test_support_without_table():
    assert support_check(3, IndexSet.full(3), Family.DIAGONAL).passed


@pytest.mark.parametrize("subset, family", [
    ((0,), Family.DIAGONAL),
    ((1, 2), Family.M),
    ((0, 1), Family.E),
    ((0,), Family.ASCENDING),
])
def test_support_preconditions(subset, family):
    with pytest.raises(PreconditionError):
        support_check(4, IndexSet.of(4, subset), family)


@pytest.mark.parametrize("n", [*range(1, 7), pytest.param(7, marks=pytest.mark.slow)])
def test_stanley_identity(n):
    for subset in IndexSet.all_subsets(n):
        [report] = identity_checks(n, subset, "stanley")
        assert report.passed, subset.render()


def test_stanley_example():
    [report] = identity_checks(2, IndexSet.of(2, [1]), "stanley")
    assert report.lhs == report.rhs == P(1, 1)


@pytest.mark.parametrize("n", [2, 4, 6, pytest.param(8, marks=pytest.mark.slow)])
def test_evenperm_identity(n):
    for subset in IndexSet.all_subsets(n):
        if subset.is_even():
            [report] = identity_checks(n, subset, "evenperm")
            assert report.passed, subset.render()


def test_evenperm_examples():
    [report] = identity_checks(2, IndexSet.empty(2), "evenperm")
    assert report.lhs == report.rhs == IntPolynomial.one()
    [report] = identity_checks(4, IndexSet.of(4, [2]), "evenperm")
    assert report.lhs == report.rhs == P(1, 0, 1)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_even_product_and_factorisations(tables, n):
    for subset in IndexSet.all_subsets(n):
        if not subset.is_even():
            continue
        for variant in ("even-product", "even-factorization"):
            for report in identity_checks(n, subset, variant, tables[n]):
                assert report.passed, (variant, report.check, subset.render())


def test_identity_preconditions():
    with pytest.raises(PreconditionError):
        identity_checks(3, IndexSet.of(3, [0]), "evenperm")
    with pytest.raises(PreconditionError):
        identity_checks(4, IndexSet.of(4, [1]), "even-product")
    with pytest.raises(PreconditionError):
        identity_checks(4, IndexSet.of(4, [0]), "unknown")


@pytest.mark.parametrize("variant, subset, expected", [
    ("G", (0,), P(1, -1)),
    ("F1", (0,), P(1, 0, 0, -1)),
    ("F0", (0,), P(1, -1)),
    ("L", (0,), P(1, -1)),
    ("G", (), P(1)),
    ("F0", (), P(1)),
])
def test_fg_genfun_degree_one(variant, subset, expected):
    assert fg_genfun(1, IndexSet.of(1, subset), variant) == expected


def test_fg_genfun_l_variant_is_the_class_sum(tables):
    subset = IndexSet.of(4, [0, 3])
    assert fg_genfun(4, subset, "L") == tables[4].class_sum(subset)


def test_fg_genfun_rejects_unknown_variant():
    with pytest.raises(PreconditionError):
        fg_genfun(2, IndexSet.empty(2), "H")


def test_stat_weights():
    elements = list(enumerate_group(2))
    by_length = signed_genfun(elements, sign_stat=Stat.LENGTH, weight_stat=Stat.LENGTH)
    # sum of (-X)^l over B_2 is the Poincare polynomial at -X: (1-X)(1-X+X^2-X^3)
    assert by_length == P(1, -1) * P(1, -1, 1, -1)
