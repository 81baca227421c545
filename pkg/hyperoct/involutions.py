"""
Sign-reversing involutions on B_n and the extension maps used in the
inductive arguments for ascending and diagonal elements.

Each involution pairs an element with a distinct partner of equal L and
opposite length parity, so the pair cancels in sum (-1)^l X^L.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from hyperoct.element_classes import (
    SandwichKind, enumerate_group, in_monochrome_factorization,
    is_ascending, is_diagonal, is_even_chessboard, topmost
)
from hyperoct.errors import (
    InternalConsistencyError, PreconditionError
)
from hyperoct.index_set import IndexSet
from hyperoct.permutation_stats import descent_set, length, l_value
from hyperoct.signed_permutation import (
    SignedPermutation, compose, parabolic_decompose
)

logger = logging.getLogger('hyperoct')


class InvolutionKind(Enum):
    STAR = "star"
    CIRCLE = "circle"
    VEE = "vee"


@dataclass(frozen=True)
class InvolutionReport:
    """The result of applying one involution to one element."""

    kind: InvolutionKind
    input: SignedPermutation
    output: SignedPermutation
    pivot: Tuple[int, ...]

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "input": str(self.input),
            "output": str(self.output),
            "pivot": list(self.pivot),
        }


def _columns_with_origin(w: SignedPermutation) -> Tuple[int, ...]:
    """(j(0), j(1), ..., j(n)) with the convention j(0) = 0."""
    return (0,) + w.columns_by_row()


def star_involution(w: SignedPermutation) -> InvolutionReport:
    """
    w* = s_i w for the least i in [n-1]_0 with j(i) = j(i+1) mod 2.

    Defined on B_n minus C_{n,0}; preserves D(w) and L, flips the parity of l.
    """
    if is_even_chessboard(w):
        raise PreconditionError(f"{w} is an even chessboard element")
    cols = _columns_with_origin(w)
    for i in range(w.n):
        if (cols[i] - cols[i + 1]) % 2 == 0:
            return InvolutionReport(InvolutionKind.STAR, w, w.generator_times(i), (i,))
    raise InternalConsistencyError(f"no star pivot found for {w}")


def circle_involution(w: SignedPermutation) -> InvolutionReport:
    """
    w° = s_{i+1} s_i s_{i+1} w with i = k - 1, where v is the largest column
    whose entry is off the diagonal and k = i(v) is its row.

    Columns above v are fixed, so rows 1..v fill columns 1..v and j(k) = v is a
    strict local maximum of j(k-1), j(k), j(k+1) with j(0) = 0. For k > 1 this
    swaps rows k-1 and k+1; for k = 1 it changes the sign in row 2. Neither
    touches column v or the columns above it, so the partner has the same
    pivot.

    Defined on C_{n,0} minus the diagonal elements.
    """
    if not is_even_chessboard(w) or is_diagonal(w):
        raise PreconditionError(f"{w} is not a non-diagonal even chessboard element")
    v = max(j for j, a in enumerate(w.window, start=1) if abs(a) != j)
    i = w.row_of(v) - 1
    cols = _columns_with_origin(w)
    if not cols[i] < cols[i + 1] > cols[i + 2]:
        raise InternalConsistencyError(f"column {v} is not a peak in row {i + 1} of {w}")
    partner = w.generator_times(i + 1).generator_times(i).generator_times(i + 1)
    return InvolutionReport(InvolutionKind.CIRCLE, w, partner, (i + 1, i, i + 1))


def vee_involution(w: SignedPermutation) -> InvolutionReport:
    """
    w∨ = w^{[n-1]} s_mu w_{[n-1]}, where mu is the smaller of the columns that
    hold the rows r and r+h+1 of the topmost odd sandwich in w^{[n-1]}.

    Defined on C_{n,0} minus M_n.
    """
    if not is_even_chessboard(w) or in_monochrome_factorization(w):
        raise PreconditionError(f"{w} is not in C_{{n,0}} minus M_n")
    factorization = parabolic_decompose(w, IndexSet.of(w.n, range(1, w.n)))
    quotient = factorization.quotient
    sandwich = topmost(quotient)
    cols = quotient.columns_by_row()
    j, j_prime = cols[sandwich.r - 1], cols[sandwich.r + sandwich.h]
    if abs(j - j_prime) != 1:
        raise InternalConsistencyError(
            f"rows {sandwich.r} and {sandwich.r + sandwich.h + 1} of the ascending "
            f"factor {quotient} of {w} sit in columns {j} and {j_prime}")
    mu = min(j, j_prime)
    partner = compose(quotient.times_generator(mu), factorization.subgroup_part)
    return InvolutionReport(InvolutionKind.VEE, w, partner, (mu,))


_INVOLUTIONS = {
    InvolutionKind.STAR: star_involution,
    InvolutionKind.CIRCLE: circle_involution,
    InvolutionKind.VEE: vee_involution,
}


def apply_involution(kind: InvolutionKind, w: SignedPermutation) -> InvolutionReport:
    return _INVOLUTIONS[kind](w)


def in_domain(kind: InvolutionKind, w: SignedPermutation) -> bool:
    """True if the involution of this kind is defined at w."""
    if kind is InvolutionKind.STAR:
        return not is_even_chessboard(w)
    if kind is InvolutionKind.CIRCLE:
        return is_even_chessboard(w) and not is_diagonal(w)
    return is_even_chessboard(w) and not in_monochrome_factorization(w)


def extend_ascending(w: SignedPermutation, sign: int) -> SignedPermutation:
    """
    Lift an ascending element of C_{n,0}, n odd, to C_{n+2,0}.

    sign = +1 appends the diagonal entries n+1, n+2 (w+); sign = -1 shifts w
    two columns to the right and puts -1 at (n+1, 2) and (n+2, 1) (w-).
    """
    n = w.n
    if n % 2 == 0 or not is_even_chessboard(w) or not is_ascending(w):
        raise PreconditionError(f"{w} is not an ascending even chessboard element of odd degree")
    if sign > 0:
        return SignedPermutation(w.window + (n + 1, n + 2))
    return SignedPermutation((-(n + 2), -(n + 1)) + w.window)


def extend_diagonal(v: SignedPermutation, sign: int) -> SignedPermutation:
    """Append the diagonal entry +n or -n to a diagonal element of B_{n-1}."""
    if not is_diagonal(v):
        raise PreconditionError(f"{v} is not diagonal")
    n = v.n + 1
    return SignedPermutation(v.window + ((n if sign > 0 else -n),))


@dataclass
class InvolutionCheckResult:
    """Outcome of an exhaustive property run for one involution and degree."""

    kind: InvolutionKind
    n: int
    domain_size: int = 0
    violations: List[str] = field(default_factory=list)
    first_counterexample: Optional[SignedPermutation] = None
    square_failures: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "n": self.n,
            "domain_size": self.domain_size,
            "verdict": "pass" if self.passed else "fail",
            "violations": list(self.violations),
            "first_counterexample": (
                str(self.first_counterexample) if self.first_counterexample else None),
            "square_failures": self.square_failures,
        }


class InvolutionChecker:
    """Runs the property suite of one involution over its whole domain in B_n."""

    def __init__(self, kind: InvolutionKind, n: int):
        """Initialize the checker for a kind and degree."""
        self.kind = kind
        self.n = n

    def domain(self) -> Iterator[SignedPermutation]:
        for w in enumerate_group(self.n):
            if in_domain(self.kind, w):
                yield w

    def _descents_preserved(self, w, partner) -> bool:
        if self.kind is InvolutionKind.STAR:
            return descent_set(w) == descent_set(partner)
        if self.kind is InvolutionKind.VEE:
            before, after = descent_set(w).members, descent_set(partner).members
            if before - {0} != after - {0}:
                return False
            if topmost(w).kind is SandwichKind.PROPER:
                return before == after
        return True

    def run(self) -> InvolutionCheckResult:
        """Check every property on every element of the domain."""
        result = InvolutionCheckResult(self.kind, self.n)
        logger.info(f"Checking {self.kind.value} involution on B_{self.n}")

        def record(w: SignedPermutation, message: str):
            result.violations.append(f"{w}: {message}")
            if result.first_counterexample is None:
                result.first_counterexample = w
            logger.debug(f"Violation at {w}: {message}")

        for w in self.domain():
            result.domain_size += 1
            try:
                partner = apply_involution(self.kind, w).output
            except InternalConsistencyError as e:
                record(w, str(e))
                continue
            if partner == w:
                record(w, "fixed point")
                continue
            if not in_domain(self.kind, partner):
                record(w, f"partner {partner} leaves the domain")
                continue
            if l_value(partner) != l_value(w):
                record(w, f"L changes to {l_value(partner)} at {partner}")
            if (length(partner) - length(w)) % 2 == 0:
                record(w, f"length parity kept at {partner}")
            if not self._descents_preserved(w, partner):
                record(w, f"descent set not preserved at {partner}")
            back = apply_involution(self.kind, partner).output
            if back != w:
                if self.kind is InvolutionKind.VEE:
                    result.square_failures += 1
                else:
                    record(w, f"square is not the identity: {partner} -> {back}")

        if result.square_failures:
            logger.warning(
                f"vee did not square to the identity on {result.square_failures} "
                f"elements of B_{self.n}")
        logger.info(
            f"{self.kind.value} on B_{self.n}: {result.domain_size} elements, "
            f"{len(result.violations)} violations")
        return result

