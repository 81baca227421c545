"""
Statistics on signed permutations: inv, neg, nsp, Coxeter length, descent set,
row pattern, the column statistics a, b, c and the statistic L.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from hyperoct.errors import InternalConsistencyError
from hyperoct.index_set import IndexSet
from hyperoct.signed_permutation import (
    ColumnMatrix, SignedPermutation, matrix_view
)

logger = logging.getLogger('hyperoct')


@dataclass(frozen=True)
class StatRecord:
    """All statistics of one element, computed in a single pass."""

    inv: int
    neg: int
    nsp: int
    length: int
    L: int
    a: int
    b: int
    c: int
    descents: IndexSet

    def to_dict(self):
        return {
            "inv": self.inv,
            "neg": self.neg,
            "nsp": self.nsp,
            "length": self.length,
            "L": self.L,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "descents": self.descents.to_list(),
        }


def length_stats(w: SignedPermutation) -> Tuple[int, int, int, int]:
    """
    Compute inv, neg, nsp and the Coxeter length l = inv + neg + nsp.

    Args:
        w (SignedPermutation): Element of B_n

    Returns:
        tuple: (inv, neg, nsp, l)
    """
    window = w.window
    n = len(window)
    inv = neg = nsp = 0
    for i in range(n):
        x = window[i]
        if x < 0:
            neg += 1
        for j in range(i + 1, n):
            y = window[j]
            if x > y:
                inv += 1
            if x + y < 0:
                nsp += 1
    return inv, neg, nsp, inv + neg + nsp


def length(w: SignedPermutation) -> int:
    return length_stats(w)[3]


def descent_set(w: SignedPermutation) -> IndexSet:
    """D(w) = {i in [n-1]_0 : w(i) > w(i+1)} with w(0) = 0."""
    return IndexSet(w.n, frozenset(i for i in range(w.n) if w.has_descent(i)))


def l_direct(w: SignedPermutation) -> int:
    """
    L from its definition: half the number of pairs (i, j) in [±n]_0^2 with
    i < j, w(i) > w(j) and i, j of opposite parity.
    """
    n = w.n
    domain = range(-n, n + 1)
    values = {x: w(x) for x in domain}
    raw = 0
    for i in domain:
        for j in range(i + 1, n + 1):
            if (i - j) % 2 and values[i] > values[j]:
                raw += 1
    if raw % 2:
        logger.error(f"Mixed-parity pair count {raw} is odd for {w}")
        raise InternalConsistencyError(f"odd raw pair count {raw} for {w}")
    return raw // 2


def abc_stats(matrix: ColumnMatrix) -> Tuple[int, int, int]:
    """
    The column statistics a, b, c over the column set S of a {-1,0,1} matrix.

    a counts odd columns whose entry is -1; b counts column pairs j < j' of
    opposite parity with i(j) > i(j'); c counts column pairs j < j' of opposite
    parity with i(j) < i(j') and entry -1 in column j'.
    """
    columns = matrix.statistic_columns()
    row = {j: matrix.row_of(j) for j in columns}
    value = {j: matrix.entry(row[j], j) for j in columns}
    a = sum(1 for j in columns if j % 2 == 1 and value[j] == -1)
    b = c = 0
    for pos, j in enumerate(columns):
        for k in columns[pos + 1:]:
            if (j - k) % 2 == 0:
                continue
            if row[j] > row[k]:
                b += 1
            elif value[k] == -1:
                c += 1
    return a, b, c


def bar_b_bar_c(matrix: ColumnMatrix) -> Tuple[int, int]:
    """b and c without the parity condition on column pairs."""
    columns = matrix.statistic_columns()
    row = {j: matrix.row_of(j) for j in columns}
    bar_b = bar_c = 0
    for pos, j in enumerate(columns):
        for k in columns[pos + 1:]:
            if row[j] > row[k]:
                bar_b += 1
            elif matrix.entry(row[k], k) == -1:
                bar_c += 1
    return bar_b, bar_c


def l_value(w: SignedPermutation) -> int:
    """L = a + b + 2c evaluated on the signed permutation matrix of w."""
    a, b, c = abc_stats(matrix_view(w))
    return a + b + 2 * c


def row_pattern(w: SignedPermutation) -> Tuple[int, ...]:
    """rho_w(i): the sign of the nonzero entry in row i, i.e. sign(w^{-1}(i))."""
    pattern = [0] * w.n
    for a in w.window:
        pattern[abs(a) - 1] = 1 if a > 0 else -1
    return tuple(pattern)


def window_profile(window: Tuple[int, ...]) -> Tuple[int, int, int, int]:
    """
    One O(n^2) pass over a raw window, for enumeration loops.

    Returns:
        tuple: (descent bitmask, l, neg, L)
    """
    n = len(window)
    mask = 1 if window[0] < 0 else 0
    inv = neg = nsp = a = b = c = 0
    for j in range(n):
        x = window[j]
        ax = x if x > 0 else -x
        if x < 0:
            neg += 1
            if not j % 2:
                a += 1
        if j + 1 < n and x > window[j + 1]:
            mask |= 1 << (j + 1)
        for k in range(j + 1, n):
            y = window[k]
            if x > y:
                inv += 1
            if x + y < 0:
                nsp += 1
            if (k - j) % 2:
                ay = y if y > 0 else -y
                if ax > ay:
                    b += 1
                elif y < 0:
                    c += 1
    return mask, inv + neg + nsp, neg, a + b + 2 * c


def stat_record(w: SignedPermutation, matrix: Optional[ColumnMatrix] = None) -> StatRecord:
    """Collect every statistic of w into a StatRecord."""
    inv, neg, nsp, total = length_stats(w)
    a, b, c = abc_stats(matrix if matrix is not None else matrix_view(w))
    return StatRecord(
        inv=inv, neg=neg, nsp=nsp, length=total,
        L=a + b + 2 * c, a=a, b=b, c=c,
        descents=descent_set(w),
    )
