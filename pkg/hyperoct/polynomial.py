"""
Dense polynomials in Z[X] with exact arithmetic, and the q-objects built from
them: (k) = 1 - X^k, (n)!, X-binomials, X-multinomials and f_{n,I}.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from hyperoct.errors import ExactDivisionError, PreconditionError
from hyperoct.index_set import IndexSet

logger = logging.getLogger('hyperoct')


def _normalize(coefficients: Iterable[int]) -> Tuple[int, ...]:
    """Strip trailing zero coefficients; the zero polynomial is ()."""
    coeffs = [int(c) for c in coefficients]
    size = len(coeffs)
    while size and coeffs[size - 1] == 0:
        size -= 1
    return tuple(coeffs[:size])


@dataclass(frozen=True)
class IntPolynomial:
    """
    A polynomial sum c_d X^d, stored as (c_0, c_1, ..., c_deg).

    Coefficients are Python integers, so no arithmetic can overflow.
    """

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', _normalize(self.coefficients))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        """coefficient * X^degree."""
        if degree < 0:
            raise PreconditionError(f"negative exponent {degree}")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_list(cls, coefficients: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, d: int) -> int:
        if 0 <= d < len(self.coefficients):
            return self.coefficients[d]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] += c
        return IntPolynomial(tuple(result))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial.zero()
        result = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                result[i + j] += x * y
        return IntPolynomial(tuple(result))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise PreconditionError(f"negative power {exponent}")
        result = IntPolynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """
        Return r with divisor * r == self.

        Raises:
            ZeroDivisionError: if divisor is the zero polynomial
            ExactDivisionError: if the division leaves a remainder
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPolynomial.zero()
        remainder = list(self.coefficients)
        d = divisor.coefficients
        lead = d[-1]
        shift = len(remainder) - len(d)
        if shift < 0:
            raise ExactDivisionError(f"{divisor} does not divide {self}")
        quotient = [0] * (shift + 1)
        for k in range(shift, -1, -1):
            top = remainder[k + len(d) - 1]
            if top % lead:
                raise ExactDivisionError(f"{divisor} does not divide {self}")
            q = top // lead
            quotient[k] = q
            if q:
                for i, c in enumerate(d):
                    remainder[k + i] -= q * c
        if any(remainder):
            raise ExactDivisionError(f"{divisor} does not divide {self}")
        return IntPolynomial(tuple(quotient))

    def evaluate(self, x: int) -> int:
        """Horner evaluation at an integer."""
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def coefficient_sum(self) -> int:
        """The value at X = 1."""
        return sum(self.coefficients)

    def substitute_power(self, k: int) -> "IntPolynomial":
        """p(X) -> p(X^k)."""
        if k < 1:
            raise PreconditionError(f"substitution exponent must be positive, got {k}")
        if self.is_zero():
            return self
        result = [0] * (k * self.degree + 1)
        for d, c in enumerate(self.coefficients):
            result[k * d] = c
        return IntPolynomial(tuple(result))

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def render(self) -> str:
        """Human form, e.g. '1 - X + X^3'; the zero polynomial renders as '0'."""
        terms = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            magnitude = abs(c)
            if d == 0:
                body = str(magnitude)
            else:
                power = "X" if d == 1 else f"X^{d}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def __str__(self):
        return self.render()


def product(factors: Iterable[IntPolynomial]) -> IntPolynomial:
    result = IntPolynomial.one()
    for f in factors:
        result = result * f
    return result


def q_int(k: int) -> IntPolynomial:
    """(k) = 1 - X^k for k >= 1, and (0) = 1."""
    if k < 0:
        raise PreconditionError(f"q-integer of negative argument {k}")
    if k == 0:
        return IntPolynomial.one()
    return IntPolynomial.one() - IntPolynomial.monomial(k)


def q_factorial(n: int) -> IntPolynomial:
    """(n)! = (1)(2)...(n); (0)! = 1."""
    if n < 0:
        raise PreconditionError(f"q-factorial of negative argument {n}")
    return product(q_int(k) for k in range(1, n + 1))


def _cancel_and_divide(numerator: Counter, denominator: Counter) -> IntPolynomial:
    """
    The quotient of two products of q-integers, given as multisets of k.

    Common factors cancel first; the remaining denominator factors are divided
    out one at a time, largest first.
    """
    common = numerator & denominator
    numerator = numerator - common
    denominator = denominator - common
    result = product(q_int(k) for k in sorted(numerator.elements()))
    for k in sorted(denominator.elements(), reverse=True):
        result = result.exact_div(q_int(k))
    return result


def q_binomial(a: int, b: int) -> IntPolynomial:
    """binom(a, b)_X = (a)! / ((a-b)! (b)!)."""
    if not 0 <= b <= a:
        raise PreconditionError(f"binomial needs 0 <= b <= a, got a={a}, b={b}")
    numerator = Counter(range(1, a + 1))
    denominator = Counter(range(1, a - b + 1)) + Counter(range(1, b + 1))
    return _cancel_and_divide(numerator, denominator)


def q_multinomial(n: int, subset: IndexSet) -> IntPolynomial:
    """
    binom(n, I)_X = binom(n, i_l) binom(i_l, i_(l-1)) ... binom(i_2, i_1) over the
    nonzero members i_1 < ... < i_l of I; a member 0 contributes nothing.
    """
    if subset.n != n:
        raise PreconditionError(f"index set of degree {subset.n} used with n={n}")
    chain = list(subset.without_zero()) + [n]
    result = IntPolynomial.one()
    for smaller, larger in zip(chain, chain[1:]):
        result = result * q_binomial(larger, smaller)
    return result


def f_poly(n: int, subset: IndexSet) -> IntPolynomial:
    """
    f_{n,I}(X) = (n)! / (i_1)! * prod over r of 1 / prod_{s=1}^{floor((i_{r+1}-i_r)/2)} (2s).

    Here I = {i_1 < ... < i_l}, i_{l+1} = n, and i_1 = n when I is empty.

    Args:
        n (int): Degree, at least 1
        subset (IndexSet): I, a subset of [n-1]_0

    Returns:
        IntPolynomial: f_{n,I}
    """
    if n < 1:
        raise PreconditionError(f"degree must be positive, got {n}")
    if subset.n != n:
        raise PreconditionError(f"index set of degree {subset.n} used with n={n}")
    members = list(subset.sorted())
    first = subset.least_or_degree()
    numerator = Counter(range(1, n + 1))
    denominator = Counter(range(1, first + 1))
    bounds = members + [n]
    for lower, upper in zip(bounds, bounds[1:]):
        denominator.update(2 * s for s in range(1, (upper - lower) // 2 + 1))
    try:
        return _cancel_and_divide(numerator, denominator)
    except ExactDivisionError:
        logger.error(f"f_{{{n},{subset.render()}}} is not a polynomial")
        raise


def odd_q_product(m: int) -> IntPolynomial:
    """(1)(3)...(m~) with m~ the largest odd integer <= m; 1 when m < 1."""
    return product(q_int(k) for k in range(1, m + 1, 2))


def even_closed_form(n: int, subset: IndexSet) -> IntPolynomial:
    """
    binom(n/2, I/2)_{X^2} (1)(3)...(n-1) / ((1)(3)...(i_1 - 1)) for even n and even I.
    """
    if n % 2 or not subset.is_even():
        raise PreconditionError(f"closed form needs even n and even I, got n={n}, I={subset.render()}")
    first = subset.least_or_degree()
    binomial = q_multinomial(n // 2, subset.halved()).substitute_power(2)
    numerator = Counter(range(1, n, 2))
    denominator = Counter(range(1, first, 2))
    return binomial * _cancel_and_divide(numerator, denominator)


def eval_reciprocal_power(p: IntPolynomial, q: int, e: int) -> int:
    """
    q^e p(1/q) as an exact integer.

    Raises:
        PreconditionError: if e is smaller than the degree of p
    """
    if e < p.degree:
        raise PreconditionError(f"exponent {e} is below the degree {p.degree}")
    return sum(c * q ** (e - d) for d, c in enumerate(p.coefficients))
