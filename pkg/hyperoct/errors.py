"""
Exceptions raised by hyperoct.
"""


class HyperoctError(Exception):
    """Base class for all errors raised by this package."""


class InvalidElementError(HyperoctError, ValueError):
    """A window, index set or other textual input is malformed."""


class DegreeMismatchError(HyperoctError, ValueError):
    """Two signed permutations of different degree were combined."""


class PreconditionError(HyperoctError, ValueError):
    """An operation was called on an element outside its domain."""


class ExactDivisionError(HyperoctError, ArithmeticError):
    """A polynomial division left a nonzero remainder."""


class NegativeWeightError(HyperoctError, ValueError):
    """A generating-function weight evaluated to a negative exponent."""


class BudgetExceededError(HyperoctError, RuntimeError):
    """An enumeration would visit more objects than the configured budget."""


class InternalConsistencyError(HyperoctError, AssertionError):
    """A runtime assertion about the combinatorics failed."""


class UsageError(HyperoctError, ValueError):
    """Command-line parameters failed validation."""
