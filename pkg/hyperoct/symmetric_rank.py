"""
Counting symmetric n x n matrices over F_q by rank, by brute force, and the
closed form q^{C(n+1,2) - C(i+1,2)} f_{n,{i}}(1/q) for the number of rank n - i.
"""
import logging
import time
from dataclasses import dataclass
from math import comb
from typing import List, Optional

import numpy as np
from sympy import isprime

from hyperoct import config
from hyperoct.errors import BudgetExceededError, PreconditionError
from hyperoct.index_set import IndexSet
from hyperoct.polynomial import eval_reciprocal_power, f_poly

logger = logging.getLogger('hyperoct')


def _check_field(q: int):
    if not isprime(q):
        raise PreconditionError(f"field size {q} is not a prime")


def rank_mod_p(matrix: np.ndarray, q: int) -> int:
    """Rank of a single integer matrix over F_q, by Gaussian elimination."""
    _check_field(q)
    A = np.array(matrix, dtype=np.int64) % q
    m, n = A.shape
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if A[i, c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]), -1, q)
        A[r, :] = (A[r, :] * inv) % q
        for i in range(r + 1, m):
            if A[i, c] != 0:
                A[i, :] = (A[i, :] - A[i, c] * A[r, :]) % q
        r += 1
        if r == m:
            break
    return r


def batched_rank_mod_p(stack: np.ndarray, q: int) -> np.ndarray:
    """
    Ranks over F_q of a stack of square matrices, shape (batch, n, n).

    Row reduction runs on all matrices at once; each matrix keeps its own
    pivot row counter, which is its rank at the end.
    """
    A = np.array(stack, dtype=np.int64) % q
    batch, n, _ = A.shape
    inverses = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inverses[x] = pow(x, -1, q)
    rows = np.arange(n)
    pivot_row = np.zeros(batch, dtype=np.int64)
    for col in range(n):
        candidates = (A[:, :, col] != 0) & (rows[None, :] >= pivot_row[:, None])
        active = np.flatnonzero(candidates.any(axis=1))
        if active.size == 0:
            continue
        found = candidates[active].argmax(axis=1)
        target = pivot_row[active]

        target_rows = A[active, target]
        A[active, target] = A[active, found]
        A[active, found] = target_rows

        scale = inverses[A[active, target, col]]
        A[active, target] = (A[active, target] * scale[:, None]) % q

        below = rows[None, :] > target[:, None]
        factors = np.where(below, A[active, :, col], 0)
        pivots = A[active, target]
        A[active] = (A[active] - factors[:, :, None] * pivots[:, None, :]) % q
        pivot_row[active] += 1
    return pivot_row


def sym_rank_distribution(n: int, q: int, budget: Optional[int] = None,
                          batch_size: Optional[int] = None) -> List[int]:
    """
    Count symmetric n x n matrices over F_q of each rank 0..n.

    The upper triangle is read as the base-q digits of a running index, so the
    q^{n(n+1)/2} matrices are visited in batches without repetition.

    Args:
        n (int): Matrix size, at least 1
        q (int): Prime field size
        budget (int or None): Maximum number of matrices to enumerate
        batch_size (int or None): Matrices per vectorized batch

    Returns:
        list: counts[r] is the number of matrices of rank r

    Raises:
        BudgetExceededError: if q^{n(n+1)/2} exceeds the budget
    """
    if n < 1:
        raise PreconditionError(f"matrix size must be positive, got {n}")
    _check_field(q)
    if budget is None:
        budget = config.get_run_defaults().get(
            "symrank_budget", config.DEFAULT_SYMRANK_BUDGET)
    batch_size = batch_size or config.get_run_defaults().get(
        "symrank_batch_size", config.SYMRANK_BATCH_SIZE)
    entries = n * (n + 1) // 2
    total = q ** entries
    if total > budget:
        raise BudgetExceededError(
            f"{total} symmetric matrices over F_{q} exceed the budget of {budget}")

    started = time.perf_counter()
    logger.info(f"Counting ranks of {total} symmetric {n}x{n} matrices over F_{q}")
    upper_rows, upper_cols = np.triu_indices(n)
    place = q ** np.arange(entries, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    for start in range(0, total, batch_size):
        index = np.arange(start, min(start + batch_size, total), dtype=np.int64)
        digits = (index[:, None] // place[None, :]) % q
        stack = np.zeros((index.size, n, n), dtype=np.int64)
        stack[:, upper_rows, upper_cols] = digits
        stack[:, upper_cols, upper_rows] = digits
        counts += np.bincount(batched_rank_mod_p(stack, q), minlength=n + 1)
        logger.debug(f"Ranked matrices {start}..{start + index.size - 1}")
    logger.info(f"Rank counts {counts.tolist()} in {time.perf_counter() - started:.2f}s")
    return [int(c) for c in counts]


def sym_rank_bruteforce(n: int, q: int, i: int, budget: Optional[int] = None) -> int:
    """Number of symmetric n x n matrices over F_q of rank n - i."""
    if not 0 <= i <= n:
        raise PreconditionError(f"corank {i} outside [0, {n}]")
    return sym_rank_distribution(n, q, budget)[n - i]


def sym_rank_formula(n: int, q: int, i: int) -> int:
    """
    q^{C(n+1,2) - C(i+1,2)} f_{n,{i}}(1/q) for i < n; the zero matrix alone
    has rank 0, so i = n gives 1.
    """
    if not 0 <= i <= n:
        raise PreconditionError(f"corank {i} outside [0, {n}]")
    _check_field(q)
    if i == n:
        return 1
    exponent = comb(n + 1, 2) - comb(i + 1, 2)
    return eval_reciprocal_power(f_poly(n, IndexSet.of(n, [i])), q, exponent)


@dataclass(frozen=True)
class SymRankReport:
    """Brute-force count against the closed form for one (n, q, i)."""

    n: int
    q: int
    i: int
    brute: int
    formula: int

    @property
    def passed(self) -> bool:
        return self.brute == self.formula

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self):
        return {
            "n": self.n,
            "q": self.q,
            "i": self.i,
            "brute": self.brute,
            "formula": self.formula,
            "verdict": self.verdict,
        }


def sym_rank_check(n: int, q: int, i: int, budget: Optional[int] = None,
                   distribution: Optional[List[int]] = None) -> SymRankReport:
    """Compare brute force with the closed form; reuses a distribution when given."""
    if distribution is None:
        distribution = sym_rank_distribution(n, q, budget)
    if not 0 <= i <= n:
        raise PreconditionError(f"corank {i} outside [0, {n}]")
    report = SymRankReport(n, q, i, distribution[n - i], sym_rank_formula(n, q, i))
    if not report.passed:
        logger.warning(f"Rank count mismatch at n={n}, q={q}, i={i}: "
                       f"{report.brute} != {report.formula}")
    return report
