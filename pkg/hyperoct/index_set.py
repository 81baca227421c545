"""
Subsets of [n-1]_0, used both as descent sets and as conjecture parameters.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Tuple

from hyperoct.errors import InvalidElementError


@dataclass(frozen=True)
class IndexSet:
    """A subset of {0, 1, ..., n-1}."""

    n: int
    members: FrozenSet[int]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidElementError(f"ambient degree must be positive, got {self.n}")
        bad = sorted(m for m in self.members if not 0 <= m <= self.n - 1)
        if bad:
            raise InvalidElementError(
                f"indices {bad} lie outside [{self.n - 1}]_0 = {{0,...,{self.n - 1}}}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "IndexSet":
        """Build an index set from any iterable of integers."""
        return cls(n, frozenset(int(m) for m in members))

    @classmethod
    def empty(cls, n: int) -> "IndexSet":
        return cls(n, frozenset())

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        """Return [n-1]_0."""
        return cls(n, frozenset(range(n)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "IndexSet":
        return cls(n, frozenset(i for i in range(n) if mask >> i & 1))

    @classmethod
    def parse(cls, n: int, text: str) -> "IndexSet":
        """
        Parse the comma-separated text format, e.g. "0,2,4"; "" is the empty set.

        Args:
            n (int): Ambient degree
            text (str): Comma-separated integers

        Returns:
            IndexSet: The parsed subset of [n-1]_0
        """
        text = text.strip()
        if not text:
            return cls.empty(n)
        members = []
        for part in text.split(","):
            part = part.strip()
            try:
                members.append(int(part))
            except ValueError:
                raise InvalidElementError(f"not an integer in index set: {part!r}")
        if len(set(members)) != len(members):
            raise InvalidElementError(f"repeated index in {text!r}")
        return cls.of(n, members)

    @classmethod
    def all_subsets(cls, n: int) -> Iterator["IndexSet"]:
        """All 2^n subsets of [n-1]_0 in increasing bitmask order."""
        for mask in range(1 << n):
            yield cls.from_mask(n, mask)

    @property
    def mask(self) -> int:
        return sum(1 << m for m in self.members)

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return item in self.members

    def issubset(self, other: "IndexSet") -> bool:
        return self.members <= other.members

    def complement(self) -> "IndexSet":
        return IndexSet(self.n, frozenset(range(self.n)) - self.members)

    def is_even(self) -> bool:
        """True if every member is even, i.e. I is a subset of 2Z."""
        return all(m % 2 == 0 for m in self.members)

    def halved(self) -> "IndexSet":
        """I/2 as a subset of [n/2 - 1]_0; requires even n and even I."""
        if self.n % 2 or not self.is_even():
            raise InvalidElementError(f"cannot halve {self} in degree {self.n}")
        return IndexSet(self.n // 2, frozenset(m // 2 for m in self.members))

    def with_zero(self) -> "IndexSet":
        """I_0 = I together with 0."""
        return IndexSet(self.n, self.members | {0})

    def without_zero(self) -> Tuple[int, ...]:
        return tuple(m for m in self.sorted() if m != 0)

    def least_or_degree(self) -> int:
        """i_1 = min(I together with n)."""
        return min(self.members | {self.n})

    def to_list(self):
        return list(self.sorted())

    def __str__(self):
        return ",".join(str(m) for m in self.sorted())

    def render(self) -> str:
        """Set-builder rendering for text reports, e.g. '{0,2}'."""
        return "{" + str(self) + "}"
