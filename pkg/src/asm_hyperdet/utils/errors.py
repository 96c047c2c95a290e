"""Exception types shared across the toolkit blocks."""

from __future__ import annotations

from .warnings import format_warning


class BudgetExceededError(RuntimeError):
    """Raised when a summation would enumerate more terms than the configured budget."""

    def __init__(self, what: str, estimate: int, budget: int) -> None:
        self.what = what
        self.estimate = estimate
        self.budget = budget
        super().__init__(format_warning("BUDGET_EXCEEDED", f"{what} needs ~{estimate} terms, budget is {budget}"))


class InputFormatError(ValueError):
    """Raised when a JSON/YAML input document does not match its schema."""

    def __init__(self, detail: str) -> None:
        super().__init__(format_warning("INPUT_FORMAT", detail))


class ConfigError(ValueError):
    """Raised when configuration values violate their invariants."""


class CacheError(OSError):
    """Raised when the Macdonald disk cache cannot be read or written."""


def check_budget(what: str, estimate: int, budget: int) -> None:
    """Raise :class:`BudgetExceededError` when *estimate* exceeds *budget*."""

    if estimate > budget:
        raise BudgetExceededError(what, estimate, budget)


__all__ = [
    "BudgetExceededError",
    "CacheError",
    "ConfigError",
    "InputFormatError",
    "check_budget",
]
