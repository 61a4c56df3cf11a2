"""Shared exception types and enumeration budgets."""

import os

DEFAULT_ELEMENT_BUDGET = 10**6       # group / family enumeration, element count
DEFAULT_PAIR_BUDGET = 10**9          # pairwise operation count
DEFAULT_TUPLE_BUDGET = 5 * 10**7     # |G|**d tuples materialized by the naive word path
DEFAULT_FIELD_BOUND = 1 << 16        # largest permitted field size q

BUDGET_ENV_VAR = "WORDMAPLAB_BUDGET"


class WordmapLabError(Exception):
    """Base class for all package errors."""


class FieldBoundError(WordmapLabError):
    pass


class BudgetExceededError(WordmapLabError):
    """An enumeration would exceed the configured budget.

    Carries the budget that would have been required, so callers can
    re-run with an explicit override.
    """

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class ParseError(WordmapLabError):
    """Syntax error in a word or group specifier; position attached when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class InvariantError(WordmapLabError):
    """An internal cross-check failed; names the violated invariant."""


def element_budget(override: int | None = None) -> int:
    """Effective element budget: explicit override > env var > default."""
    if override is not None:
        return override
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_ELEMENT_BUDGET
