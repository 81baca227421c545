"""
Signed permutations: the hyperoctahedral group B_n in window notation.

The window (w(1), ..., w(n)) is the single source of truth; signed permutation
matrices are derived views. Products follow (uv)(x) = u(v(x)), which agrees
with the product of the corresponding matrices acting on column vectors.
"""
import logging
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from hyperoct.errors import (
    DegreeMismatchError, InvalidElementError, PreconditionError
)
from hyperoct.index_set import IndexSet

logger = logging.getLogger('hyperoct')

_WINDOW_PATTERN = re.compile(r'^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*$')


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


@dataclass(frozen=True)
class SignedPermutation:
    """An element of B_n given by its window [w(1), ..., w(n)]."""

    window: Tuple[int, ...]

    def __post_init__(self):
        window = self.window
        n = len(window)
        if n == 0:
            raise InvalidElementError("a window needs at least one entry")
        seen = set()
        for entry in window:
            if entry == 0:
                raise InvalidElementError(f"zero entry in window {list(window)}")
            if abs(entry) > n:
                raise InvalidElementError(
                    f"entry {entry} exceeds the degree {n} in window {list(window)}")
            if abs(entry) in seen:
                raise InvalidElementError(
                    f"repeated absolute value {abs(entry)} in window {list(window)}")
            seen.add(abs(entry))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, x: int) -> int:
        """Evaluate w on [±n]_0, with w(0) = 0 and w(-i) = -w(i)."""
        if x == 0:
            return 0
        if x > 0:
            return self.window[x - 1]
        return -self.window[-x - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.window) + "]"

    def __repr__(self):
        return f"SignedPermutation({self})"

    def inverse(self) -> "SignedPermutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self.window, start=1))

    def row_of(self, j: int) -> int:
        """i(j) = |w(j)|, the row of the nonzero entry in column j."""
        return abs(self.window[j - 1])

    def columns_by_row(self) -> Tuple[int, ...]:
        """(j(1), ..., j(n)) with j(i) = |w^{-1}(i)|."""
        cols = [0] * self.n
        for j, a in enumerate(self.window, start=1):
            cols[abs(a) - 1] = j
        return tuple(cols)

    def has_descent(self, i: int) -> bool:
        """True if w(i) > w(i+1), taking w(0) = 0."""
        left = 0 if i == 0 else self.window[i - 1]
        return left > self.window[i]

    def times_generator(self, i: int) -> "SignedPermutation":
        """w * s_i: swap positions i, i+1, or negate position 1 when i = 0."""
        _check_generator_index(self.n, i)
        window = list(self.window)
        if i == 0:
            window[0] = -window[0]
        else:
            window[i - 1], window[i] = window[i], window[i - 1]
        return SignedPermutation(tuple(window))

    def generator_times(self, i: int) -> "SignedPermutation":
        """s_i * w: swap the values ±i and ±(i+1), or negate the value ±1 when i = 0."""
        _check_generator_index(self.n, i)
        window = []
        for a in self.window:
            if i == 0:
                window.append(-a if abs(a) == 1 else a)
            elif abs(a) == i:
                window.append(_sign(a) * (i + 1))
            elif abs(a) == i + 1:
                window.append(_sign(a) * i)
            else:
                window.append(a)
        return SignedPermutation(tuple(window))


@dataclass(frozen=True)
class ColumnMatrix:
    """An r x s matrix with entries in {-1, 0, 1}."""

    entries: np.ndarray

    def __post_init__(self):
        if self.entries.ndim != 2 or 0 in self.entries.shape:
            raise InvalidElementError(f"expected a nonempty 2d array, got shape {self.entries.shape}")
        if not np.isin(self.entries, (-1, 0, 1)).all():
            raise InvalidElementError("matrix entries must lie in {-1, 0, 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ColumnMatrix":
        return cls(np.array(rows, dtype=np.int8))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def entry(self, i: int, j: int) -> int:
        """M_{ij} with 1-based indices."""
        return int(self.entries[i - 1, j - 1])

    def statistic_columns(self) -> List[int]:
        """The column set S: 1-based indices of columns with exactly one nonzero entry."""
        counts = np.count_nonzero(self.entries, axis=0)
        return [j + 1 for j in np.flatnonzero(counts == 1)]

    def row_of(self, j: int) -> int:
        """i(j) for a column j in S."""
        nonzero = np.flatnonzero(self.entries[:, j - 1])
        if len(nonzero) != 1:
            raise PreconditionError(f"column {j} does not have a unique nonzero entry")
        return int(nonzero[0]) + 1

    def column_of(self, i: int) -> int:
        """j(i) for a row i with a unique nonzero entry."""
        nonzero = np.flatnonzero(self.entries[i - 1, :])
        if len(nonzero) != 1:
            raise PreconditionError(f"row {i} does not have a unique nonzero entry")
        return int(nonzero[0]) + 1

    def __matmul__(self, other: "ColumnMatrix") -> "ColumnMatrix":
        product = self.entries.astype(np.int64) @ other.entries.astype(np.int64)
        return ColumnMatrix(product.astype(np.int8))

    def __eq__(self, other):
        if not isinstance(other, ColumnMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(
            (self.entries == other.entries).all())

    def __hash__(self):
        return hash((self.entries.shape, self.entries.tobytes()))


@dataclass(frozen=True)
class ParabolicFactorization:
    """w = w^I w_I with w^I the minimal coset representative of w W_I."""

    whole: SignedPermutation
    subset: IndexSet
    quotient: SignedPermutation
    subgroup_part: SignedPermutation


def _check_generator_index(n: int, i: int):
    if not 0 <= i <= n - 1:
        raise PreconditionError(f"generator index {i} outside [{n - 1}]_0")


def from_window(seq: Iterable[int]) -> SignedPermutation:
    """Validate a sequence of integers as the window of an element of B_n."""
    return SignedPermutation(tuple(int(a) for a in seq))


def parse_window(text: str) -> SignedPermutation:
    """Parse the text format "[a1,a2,...,an]" (whitespace allowed)."""
    match = _WINDOW_PATTERN.match(text)
    if not match:
        raise InvalidElementError(f"not a window: {text!r}")
    return from_window(int(part) for part in match.group(1).split(","))


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """(u v)(x) = u(v(x))."""
    if u.n != v.n:
        raise DegreeMismatchError(f"cannot compose degrees {u.n} and {v.n}")
    return SignedPermutation(tuple(u(b) for b in v.window))


def inverse(w: SignedPermutation) -> SignedPermutation:
    window = [0] * w.n
    for i, a in enumerate(w.window, start=1):
        window[abs(a) - 1] = _sign(a) * i
    return SignedPermutation(tuple(window))


def generator(n: int, i: int) -> SignedPermutation:
    """The Coxeter generator s_i of B_n, 0 <= i <= n-1."""
    _check_generator_index(n, i)
    return identity(n).times_generator(i)


def longest_element(n: int) -> SignedPermutation:
    """w_0 = [-1, -2, ..., -n]."""
    return SignedPermutation(tuple(-i for i in range(1, n + 1)))


def matrix_view(w: SignedPermutation) -> ColumnMatrix:
    """Signed permutation matrix: entry sign(w(j)) at row |w(j)|, column j."""
    entries = np.zeros((w.n, w.n), dtype=np.int8)
    for j, a in enumerate(w.window):
        entries[abs(a) - 1, j] = _sign(a)
    return ColumnMatrix(entries)


def _rank_and_sign(values: Sequence[int]) -> SignedPermutation:
    order = sorted(abs(a) for a in values)
    rank = {v: r for r, v in enumerate(order, start=1)}
    return SignedPermutation(tuple(_sign(a) * rank[abs(a)] for a in values))


def sigma_split(w: SignedPermutation) -> Tuple[SignedPermutation, Optional[SignedPermutation]]:
    """
    Split w into (w_1, w_2), the odd-column and even-column parts.

    Each part keeps the signs of its columns and replaces absolute values by
    their ranks among the selected columns.

    Returns:
        tuple: (w_1, w_2) with w_1 in B_ceil(n/2), w_2 in B_floor(n/2); w_2 is
        None when n = 1.
    """
    odd = w.window[0::2]
    even = w.window[1::2]
    return _rank_and_sign(odd), (_rank_and_sign(even) if even else None)


def star_merge(w1: SignedPermutation, w2) -> SignedPermutation:
    """
    The unique even chessboard element w with sigma_split(w) = (w1, w2).

    Args:
        w1 (SignedPermutation): Odd-column part, degree m1
        w2 (SignedPermutation or None): Even-column part, degree m2 with
            m1 in {m2, m2 + 1}; None stands for the empty element of B_0

    Returns:
        SignedPermutation: Element of C_{m1+m2,0}
    """
    m2 = 0 if w2 is None else w2.n
    if w1.n not in (m2, m2 + 1):
        raise DegreeMismatchError(f"cannot merge degrees {w1.n} and {m2}")
    window = []
    for a in range(w1.n):
        x = w1.window[a]
        window.append(_sign(x) * (2 * abs(x) - 1))
        if a < m2:
            y = w2.window[a]
            window.append(_sign(y) * 2 * abs(y))
    return SignedPermutation(tuple(window))


def parabolic_decompose(w: SignedPermutation, subset: IndexSet) -> ParabolicFactorization:
    """
    Factor w = w^I w_I by stripping right descents that lie in I.

    While some i in I is a descent of the current element, replace it by its
    product with s_i and put s_i on the left of the accumulated w_I.
    """
    if subset.n != w.n:
        raise DegreeMismatchError(f"index set of degree {subset.n} for element of degree {w.n}")
    indices = subset.sorted()
    quotient = w
    subgroup_part = identity(w.n)
    while True:
        for i in indices:
            if quotient.has_descent(i):
                quotient = quotient.times_generator(i)
                subgroup_part = subgroup_part.generator_times(i)
                break
        else:
            break
    logger.debug("Factored %s at {%s} as %s * %s", w, subset, quotient, subgroup_part)
    return ParabolicFactorization(w, subset, quotient, subgroup_part)


def in_parabolic_subgroup(w: SignedPermutation, subset: IndexSet) -> bool:
    """True if w lies in the subgroup generated by {s_i : i in I}."""
    current = w
    while not current.is_identity():
        descents = [i for i in range(current.n) if current.has_descent(i)]
        if not set(descents) <= subset.members:
            return False
        current = current.times_generator(descents[0])
    return True
