"""
Supporting sets inside B_n: chessboard, diagonal and ascending elements, the
factorisation classes E_n and M_n, odd sandwiches, and the enumerators that
stream B_n and its descent classes.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from hyperoct.errors import InternalConsistencyError, PreconditionError
from hyperoct.index_set import IndexSet
from hyperoct.permutation_stats import descent_set, row_pattern
from hyperoct.signed_permutation import (
    SignedPermutation, parabolic_decompose, star_merge
)

logger = logging.getLogger('hyperoct')


class Chessboard(Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"


class Family(Enum):
    """Element families the generating-function sums may be restricted to."""

    CHESSBOARD = "chessboard"  # C_{n,0}
    DIAGONAL = "diagonal"
    ASCENDING = "ascending"
    E = "E"  # both factors at [n-1] even chessboard
    M = "M"  # both factors at [n-1] chessboard of the same type


class SandwichKind(Enum):
    PROPER = "proper"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class OddSandwich:
    """Rows r and r+h+1 enclosing an odd number h of rows of opposite sign."""

    r: int
    h: int
    kind: SandwichKind


def chessboard_class(w: SignedPermutation) -> Chessboard:
    parities = {(abs(a) - j) % 2 for j, a in enumerate(w.window, start=1)}
    if parities == {0}:
        return Chessboard.EVEN
    if parities == {1}:
        return Chessboard.ODD
    return Chessboard.NONE


def is_even_chessboard(w: SignedPermutation) -> bool:
    return chessboard_class(w) is Chessboard.EVEN


def is_diagonal(w: SignedPermutation) -> bool:
    return all(abs(a) == j for j, a in enumerate(w.window, start=1))


def is_ascending(w: SignedPermutation) -> bool:
    """w(1) < ... < w(n), equivalently D(w) is contained in {0}."""
    return all(x < y for x, y in zip(w.window, w.window[1:]))


def _factor_classes(w: SignedPermutation) -> Tuple[Chessboard, Chessboard]:
    factorization = parabolic_decompose(w, IndexSet.of(w.n, range(1, w.n)))
    return (chessboard_class(factorization.quotient),
            chessboard_class(factorization.subgroup_part))


def in_even_factorization(w: SignedPermutation) -> bool:
    """Membership in E_n: both factors at [n-1] are even chessboard elements."""
    return _factor_classes(w) == (Chessboard.EVEN, Chessboard.EVEN)


def in_monochrome_factorization(w: SignedPermutation) -> bool:
    """Membership in M_n: both factors at [n-1] are chessboard elements of one type."""
    left, right = _factor_classes(w)
    return left is right and left is not Chessboard.NONE


def membership(w: SignedPermutation, family: Family) -> bool:
    """
    Test whether w belongs to one of the supporting families.

    Args:
        w (SignedPermutation): Element of B_n
        family (Family): Family to test

    Returns:
        bool: True if w lies in the family
    """
    if family is Family.CHESSBOARD:
        return is_even_chessboard(w)
    if family is Family.DIAGONAL:
        return is_diagonal(w)
    if family is Family.ASCENDING:
        return is_ascending(w)
    if family is Family.E:
        return in_even_factorization(w)
    if family is Family.M:
        return in_monochrome_factorization(w)
    raise PreconditionError(f"unknown family {family!r}")


def odd_sandwiches(w: SignedPermutation) -> List[OddSandwich]:
    """All odd sandwiches (r, h) in w, sorted by r."""
    rho = row_pattern(w)
    n = w.n
    found = []
    for r in range(1, n - 1):
        top = rho[r - 1]
        for h in range(1, n - r, 2):
            bottom = rho[r + h]
            between = rho[r:r + h]
            if top == bottom and all(s != top for s in between):
                found.append(OddSandwich(r, h, SandwichKind.PROPER))
            elif r == 1 and top != bottom and all(s == top for s in between):
                found.append(OddSandwich(r, h, SandwichKind.DEGENERATE))
    return found


def topmost(w: SignedPermutation) -> OddSandwich:
    """The odd sandwich of minimal r; it is unique."""
    sandwiches = odd_sandwiches(w)
    if not sandwiches:
        raise PreconditionError(f"{w} has no odd sandwich")
    top_row = sandwiches[0].r
    candidates = [s for s in sandwiches if s.r == top_row]
    if len(candidates) != 1:
        logger.error(f"{len(candidates)} odd sandwiches start at row {top_row} in {w}")
        raise InternalConsistencyError(
            f"ambiguous topmost odd sandwich in {w}: {candidates}")
    return candidates[0]


def iter_windows(n: int, first: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Raw windows of B_n, lexicographic in (unsigned permutation, sign vector).

    Args:
        n (int): Degree
        first (int or None): Restrict to unsigned permutations starting with
            this value, which partitions B_n for parallel runs

    Returns:
        iterator: Windows as tuples of integers
    """
    sign_vectors = list(itertools.product((1, -1), repeat=n))
    for perm in itertools.permutations(range(1, n + 1)):
        if first is not None and perm[0] != first:
            continue
        for signs in sign_vectors:
            yield tuple(s * p for s, p in zip(signs, perm))


def iter_unsigned_windows(n: int) -> Iterator[Tuple[int, ...]]:
    """Windows of S_n, the elements of B_n without negative entries."""
    return itertools.permutations(range(1, n + 1))


def enumerate_group(n: int) -> Iterator[SignedPermutation]:
    """All 2^n n! elements of B_n, each exactly once."""
    for window in iter_windows(n):
        yield SignedPermutation(window)


def enumerate_descent_bounded(n: int, subset: IndexSet) -> Iterator[SignedPermutation]:
    """Elements w with D(w) contained in I, i.e. the descent class B_n^{I^c}."""
    for w in enumerate_group(n):
        if descent_set(w).issubset(subset):
            yield w


def enumerate_even_chessboard(n: int) -> Iterator[SignedPermutation]:
    """C_{n,0} generated from B_ceil(n/2) x B_floor(n/2) by star_merge."""
    m1, m2 = (n + 1) // 2, n // 2
    seconds = list(enumerate_group(m2)) if m2 else [None]
    for w1 in enumerate_group(m1):
        for w2 in seconds:
            yield star_merge(w1, w2)


def enumerate_family(n: int, family: Family) -> Iterator[SignedPermutation]:
    """Stream the members of a family in B_n."""
    if family is Family.DIAGONAL:
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * j for j, s in enumerate(signs, start=1)))
        return
    source = enumerate_group(n) if family is Family.ASCENDING else enumerate_even_chessboard(n)
    for w in source:
        if membership(w, family):
            yield w


def ascending_structure_check(w: SignedPermutation) -> bool:
    """
    Check the column-pair structure of an ascending even chessboard element.

    For each pair of columns (2j-1, 2j) the row gap i(2j) - i(2j-1) is odd, and
    either w(2j) > 0, the gap is positive, every row strictly in between holds
    a negative entry and w(2j-1) > 0 unless i(2j-1) = 1; or w(2j) < 0 and
    i(2j-1) - i(2j) = 1.
    """
    if not (is_even_chessboard(w) and is_ascending(w)):
        raise PreconditionError(f"{w} is not an ascending even chessboard element")
    rho = row_pattern(w)
    for j in range(1, w.n // 2 + 1):
        low, high = w.window[2 * j - 2], w.window[2 * j - 1]
        i_low, i_high = abs(low), abs(high)
        gap = i_high - i_low
        if gap % 2 == 0:
            return False
        if high > 0:
            if gap <= 0:
                return False
            if any(rho[e - 1] > 0 for e in range(i_low + 1, i_high)):
                return False
            if low < 0 and i_low != 1:
                return False
        elif i_low - i_high != 1:
            return False
    return True
