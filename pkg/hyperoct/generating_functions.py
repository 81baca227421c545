"""
Generating functions over sets of signed permutations, and the checkers that
compare them against closed forms.
"""
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Tuple, Union

from hyperoct.element_classes import (
    Family, enumerate_family, iter_unsigned_windows, iter_windows
)
from hyperoct.errors import NegativeWeightError, PreconditionError
from hyperoct.index_set import IndexSet
from hyperoct.permutation_stats import window_profile
from hyperoct.polynomial import (
    IntPolynomial, even_closed_form, f_poly, q_multinomial
)
from hyperoct.signed_permutation import SignedPermutation

logger = logging.getLogger('hyperoct')


class Stat(Enum):
    LENGTH = "length"
    NEG = "neg"
    L = "L"


@dataclass(frozen=True)
class AffineWeight:
    """The exponent length_coeff * l(w) + neg_coeff * neg(w)."""

    length_coeff: int
    neg_coeff: int


Weight = Union[Stat, AffineWeight]


def _stat_of(profile: Tuple[int, int, int, int], stat: Weight) -> int:
    _, ell, neg, big_l = profile
    if isinstance(stat, AffineWeight):
        return stat.length_coeff * ell + stat.neg_coeff * neg
    if stat is Stat.LENGTH:
        return ell
    if stat is Stat.NEG:
        return neg
    return big_l


class _Accumulator:
    """Coefficient list keyed by exponent, grown on demand."""

    def __init__(self):
        self.coefficients: List[int] = []
        self.count = 0

    def add(self, exponent: int, sign: int):
        if exponent < 0:
            raise NegativeWeightError(f"negative exponent {exponent}")
        if exponent >= len(self.coefficients):
            self.coefficients.extend([0] * (exponent + 1 - len(self.coefficients)))
        self.coefficients[exponent] += sign
        self.count += 1

    def merge(self, other: "_Accumulator"):
        if len(other.coefficients) > len(self.coefficients):
            self.coefficients.extend([0] * (len(other.coefficients) - len(self.coefficients)))
        for d, c in enumerate(other.coefficients):
            self.coefficients[d] += c
        self.count += other.count

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(tuple(self.coefficients))


def signed_genfun(elements: Iterable[SignedPermutation],
                  sign_stat: Stat = Stat.LENGTH,
                  weight_stat: Weight = Stat.L) -> IntPolynomial:
    """
    Sum (-1)^{sign_stat(w)} X^{weight_stat(w)} over a stream of elements.

    Args:
        elements (iterable): Signed permutations
        sign_stat (Stat): Statistic whose parity gives the sign
        weight_stat (Stat or AffineWeight): Exponent of X

    Returns:
        IntPolynomial: The generating function

    Raises:
        NegativeWeightError: if some element has a negative exponent
    """
    acc = _Accumulator()
    for w in elements:
        profile = window_profile(w.window)
        exponent = _stat_of(profile, weight_stat)
        if exponent < 0:
            raise NegativeWeightError(f"exponent {exponent} at {w}")
        acc.add(exponent, -1 if _stat_of(profile, sign_stat) % 2 else 1)
    return acc.polynomial()


def _partition_profile(args: Tuple[int, Optional[int]]) -> Dict[int, _Accumulator]:
    """Bucket one partition of B_n by descent mask; runs in a worker process."""
    n, first = args
    buckets: Dict[int, _Accumulator] = {}
    for window in iter_windows(n, first):
        mask, ell, _, big_l = window_profile(window)
        acc = buckets.get(mask)
        if acc is None:
            acc = buckets[mask] = _Accumulator()
        acc.add(big_l, -1 if ell % 2 else 1)
    return buckets


@dataclass
class DescentTable:
    """
    g_J = sum over D(w) = J of (-1)^l X^L, for every J in [n-1]_0, with
    element counts. Class sums over D(w) in I come from a subset-sum
    transform of the buckets.
    """

    n: int
    buckets: Dict[int, IntPolynomial]
    counts: Dict[int, int]
    _class_sums: Optional[List[IntPolynomial]] = field(default=None, repr=False)
    _class_counts: Optional[List[int]] = field(default=None, repr=False)

    def bucket(self, subset: IndexSet) -> IntPolynomial:
        return self.buckets.get(subset.mask, IntPolynomial.zero())

    def total(self) -> IntPolynomial:
        result = IntPolynomial.zero()
        for mask in sorted(self.buckets):
            result = result + self.buckets[mask]
        return result

    def _transform(self):
        size = 1 << self.n
        sums = [self.buckets.get(mask, IntPolynomial.zero()) for mask in range(size)]
        counts = [self.counts.get(mask, 0) for mask in range(size)]
        for bit in range(self.n):
            step = 1 << bit
            for mask in range(size):
                if mask & step:
                    sums[mask] = sums[mask] + sums[mask ^ step]
                    counts[mask] += counts[mask ^ step]
        self._class_sums = sums
        self._class_counts = counts

    def class_sum(self, subset: IndexSet) -> IntPolynomial:
        """Sum over B_n^{I^c}, the elements with D(w) contained in I."""
        if subset.n != self.n:
            raise PreconditionError(f"index set of degree {subset.n} used with a table of degree {self.n}")
        if self._class_sums is None:
            self._transform()
        return self._class_sums[subset.mask]

    def class_count(self, subset: IndexSet) -> int:
        if self._class_counts is None:
            self._transform()
        return self._class_counts[subset.mask]


def descent_table(n: int, jobs: int = 1) -> DescentTable:
    """
    Build the descent table of B_n in one enumeration.

    With jobs > 1 the group is split by the first entry of the unsigned
    permutation and the partitions are bucketed in a process pool; partial
    buckets are merged in partition order.
    """
    if n < 1:
        raise PreconditionError(f"degree must be positive, got {n}")
    started = time.perf_counter()
    partitions = [(n, first) for first in range(1, n + 1)]
    logger.info(f"Enumerating B_{n} in {len(partitions)} partitions with {jobs} job(s)")
    if jobs > 1:
        with Pool(processes=min(jobs, len(partitions))) as pool:
            partials = pool.map(_partition_profile, partitions)
    else:
        partials = [_partition_profile(p) for p in partitions]

    merged: Dict[int, _Accumulator] = {}
    for index, partial in enumerate(partials, start=1):
        logger.debug(f"Merging partition {index}/{len(partials)} ({len(partial)} descent classes)")
        for mask, acc in partial.items():
            merged.setdefault(mask, _Accumulator()).merge(acc)

    table = DescentTable(
        n=n,
        buckets={mask: acc.polynomial() for mask, acc in merged.items()},
        counts={mask: acc.count for mask, acc in merged.items()},
    )
    logger.info(
        f"Descent table of B_{n}: {sum(table.counts.values())} elements, "
        f"{len(table.buckets)} nonempty classes, {time.perf_counter() - started:.2f}s")
    return table


@dataclass
class VerificationReport:
    """One comparison of two independently computed polynomials."""

    check: str
    n: int
    subset: IndexSet
    lhs: IntPolynomial
    rhs: IntPolynomial
    element_count: int
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self):
        return {
            "check": self.check,
            "n": self.n,
            "I": self.subset.to_list(),
            "lhs": self.lhs.to_list(),
            "rhs": self.rhs.to_list(),
            "verdict": self.verdict,
            "element_count": self.element_count,
        }


class ConjectureVerifier:
    """Compares class sums over B_n^{I^c} with f_{n,I}, from one descent table."""

    def __init__(self, n: int, jobs: int = 1):
        """Initialize the verifier; the table is built on first use."""
        self.n = n
        self.jobs = jobs
        self._table: Optional[DescentTable] = None
        self._table_seconds = 0.0

    @property
    def table(self) -> DescentTable:
        if self._table is None:
            started = time.perf_counter()
            self._table = descent_table(self.n, self.jobs)
            self._table_seconds = time.perf_counter() - started
        return self._table

    def verify(self, subset: IndexSet) -> VerificationReport:
        table = self.table
        started = time.perf_counter()
        report = VerificationReport(
            check="conjecture",
            n=self.n,
            subset=subset,
            lhs=table.class_sum(subset),
            rhs=f_poly(self.n, subset),
            element_count=table.class_count(subset),
        )
        report.elapsed = time.perf_counter() - started
        if not report.passed:
            logger.warning(f"Mismatch at n={self.n}, I={subset.render()}: {report.lhs} != {report.rhs}")
        return report

    def verify_all(self) -> List[VerificationReport]:
        reports = [self.verify(subset) for subset in IndexSet.all_subsets(self.n)]
        failures = sum(1 for r in reports if not r.passed)
        logger.info(f"n={self.n}: {len(reports) - failures}/{len(reports)} subsets pass")
        return reports


def verify_conjecture(n: int, subset: IndexSet, jobs: int = 1) -> VerificationReport:
    return ConjectureVerifier(n, jobs).verify(subset)


def verify_all(n: int, jobs: int = 1) -> List[VerificationReport]:
    return ConjectureVerifier(n, jobs).verify_all()


def _descent_bounded(elements: Iterable[SignedPermutation], subset: IndexSet):
    mask = subset.mask
    for w in elements:
        if (window_profile(w.window)[0] & ~mask) == 0:
            yield w


def _check_support_preconditions(n: int, subset: IndexSet, family: Family):
    if family is Family.CHESSBOARD:
        return
    if family is Family.DIAGONAL:
        if subset != IndexSet.full(n):
            raise PreconditionError("the diagonal support needs I = [n-1]_0")
        return
    if family not in (Family.M, Family.E):
        raise PreconditionError(f"{family.value} is not a supporting family")
    if 0 not in subset:
        raise PreconditionError(f"the {family.value} support needs 0 in I")
    if family is Family.E and n % 2 == 0 and not subset.is_even():
        raise PreconditionError("the E support needs n odd, or n and I even")


def support_check(n: int, subset: IndexSet, family: Family,
                  table: Optional[DescentTable] = None) -> VerificationReport:
    """
    Compare the class sum over B_n^{I^c} with the same sum restricted to a family.

    Args:
        n (int): Degree
        subset (IndexSet): I
        family (Family): chessboard, diagonal, M or E
        table (DescentTable or None): Reused for the full sum when given

    Returns:
        VerificationReport: lhs is the full sum, rhs the restricted one
    """
    _check_support_preconditions(n, subset, family)
    started = time.perf_counter()
    full = table.class_sum(subset) if table is not None else signed_genfun(
        _descent_bounded((SignedPermutation(w) for w in iter_windows(n)), subset))
    members = list(_descent_bounded(enumerate_family(n, family), subset))
    report = VerificationReport(
        check=f"support:{family.value}",
        n=n,
        subset=subset,
        lhs=full,
        rhs=signed_genfun(members),
        element_count=len(members),
    )
    report.elapsed = time.perf_counter() - started
    return report


IDENTITY_VARIANTS = ("stanley", "evenperm", "even-product", "even-factorization")


def _unsigned_bounded(n: int, subset: IndexSet) -> List[SignedPermutation]:
    return list(_descent_bounded(
        (SignedPermutation(w) for w in iter_unsigned_windows(n)), subset))


def _ascending_sum(n: int) -> IntPolynomial:
    """Sum over B_n^{[n-1]}; the empty group B_0 contributes 1."""
    if n == 0:
        return IntPolynomial.one()
    return descent_table(n).class_sum(IndexSet.of(n, [0]))


def identity_checks(n: int, subset: IndexSet, variant: str,
                    table: Optional[DescentTable] = None) -> List[VerificationReport]:
    """
    Check one of the auxiliary identities at (n, I).

    stanley: sum over {w in S_n : D(w) in I} of X^l equals binom(n, I)_X.
    evenperm: the signed sum of X^L over the same set equals binom(n/2, I/2)_{X^2}.
    even-product: the class sum equals the product formula of the even case.
    even-factorization: the class sum at I with 0 added factors in two ways;
    this variant yields two reports.
    """
    if variant not in IDENTITY_VARIANTS:
        raise PreconditionError(f"unknown identity variant {variant!r}")
    if variant != "stanley" and (n % 2 or not subset.is_even()):
        raise PreconditionError(f"{variant} needs even n and even I, got n={n}, I={subset.render()}")
    started = time.perf_counter()

    if variant in ("stanley", "evenperm"):
        elements = _unsigned_bounded(n, subset)
        if variant == "stanley":
            lhs = signed_genfun(elements, sign_stat=Stat.NEG, weight_stat=Stat.LENGTH)
            rhs = q_multinomial(n, subset)
        else:
            lhs = signed_genfun(elements)
            rhs = q_multinomial(n // 2, subset.halved()).substitute_power(2)
        return [VerificationReport(variant, n, subset, lhs, rhs, len(elements),
                                   time.perf_counter() - started)]

    table = table or descent_table(n)
    if variant == "even-product":
        return [VerificationReport(variant, n, subset, table.class_sum(subset),
                                   even_closed_form(n, subset), table.class_count(subset),
                                   time.perf_counter() - started)]

    with_zero = subset.with_zero()
    lhs = table.class_sum(with_zero)
    unsigned = signed_genfun(_unsigned_bounded(n, subset))
    by_ascending = table.class_sum(IndexSet.of(n, [0])) * unsigned
    by_prefix = table.class_sum(subset) * _ascending_sum(subset.least_or_degree())
    count = table.class_count(with_zero)
    elapsed = time.perf_counter() - started
    return [
        VerificationReport("even-factorization:ascending", n, with_zero, lhs, by_ascending, count, elapsed),
        VerificationReport("even-factorization:prefix", n, with_zero, lhs, by_prefix, count, elapsed),
    ]


GENFUN_VARIANTS = ("L", "F0", "F1", "G")


def fg_genfun(n: int, subset: IndexSet, variant: str) -> IntPolynomial:
    """
    Sums over B_n^{I^c}.

    L:  (-1)^l X^L
    F0: (-1)^neg X^(2l - neg)
    F1: (-1)^neg X^(2l + neg)
    G:  (-1)^neg X^l
    """
    if variant not in GENFUN_VARIANTS:
        raise PreconditionError(f"unknown generating function {variant!r}")
    elements = _descent_bounded((SignedPermutation(w) for w in iter_windows(n)), subset)
    if variant == "L":
        return signed_genfun(elements)
    if variant == "G":
        return signed_genfun(elements, sign_stat=Stat.NEG, weight_stat=Stat.LENGTH)
    eta = int(variant[1])
    return signed_genfun(elements, sign_stat=Stat.NEG,
                         weight_stat=AffineWeight(2, 2 * eta - 1))
