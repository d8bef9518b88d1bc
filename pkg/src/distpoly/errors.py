"""Exception types shared across the package.

The CLI maps these onto exit codes: ParseError -> 2, ResourceError -> 3,
CountingError -> 4.
"""

from __future__ import annotations


class DistPolyError(Exception):
    """Base class for all package errors."""


class ParseError(DistPolyError, ValueError):
    """Malformed graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceError(DistPolyError):
    """A computation would exceed its configured budget."""


class GroupTooLarge(ResourceError):
    def __init__(self, cap: int, partial: int):
        self.cap = cap
        self.partial = partial
        super().__init__(
            f"automorphism group too large: more than {cap} elements "
            f"(stopped after {partial})"
        )


class BudgetExceeded(ResourceError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} colorings, budget is {budget}")


class CountingError(DistPolyError, AssertionError):
    """An internal consistency check failed; indicates a counting bug."""
