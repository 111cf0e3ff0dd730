"""Shared plumbing for the system generators.

Every generator instantiates a meta-rule family over a finite universe,
and most of those families are exponential in some input measure.  Each
generator therefore *counts before it builds*: the number of rule
instances is computed arithmetically and checked against a cap, so a
hopeless instantiation fails fast instead of eating memory.
"""

from __future__ import annotations

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_CLOSURE_BUDGET",
    "GenError",
    "InstantiationTooLarge",
    "ClosureBudgetExceeded",
    "MalformedEquations",
    "guard_cap",
]

DEFAULT_CAP = 1_000_000
DEFAULT_CLOSURE_BUDGET = 10_000


class GenError(Exception):
    """Base class for generator failures."""


class InstantiationTooLarge(GenError):
    """The instantiation would emit more rules than the cap allows."""

    def __init__(self, needed: int, cap: int):
        super().__init__(f"instantiation needs {needed} rules, cap is {cap}")
        self.needed = needed
        self.cap = cap


class ClosureBudgetExceeded(GenError):
    """An evaluation closure kept growing past its budget."""

    def __init__(self, budget: int):
        super().__init__(f"evaluation closure exceeds {budget} expressions; "
                         f"the call structure is not regular at this budget")
        self.budget = budget


class MalformedEquations(GenError):
    """The equation system violates the shape a generator needs."""


def guard_cap(needed: int, cap: int) -> None:
    if needed > cap:
        raise InstantiationTooLarge(needed, cap)
