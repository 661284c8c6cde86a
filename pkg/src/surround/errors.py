"""Exceptions shared by the solving modules."""
from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """The state space needed to answer a question is larger than allowed."""

    def __init__(self, what: str, required: int, budget: int) -> None:
        super().__init__(f"{what}: {required} required, budget is {budget}")
        self.what = what
        self.required = required
        self.budget = budget


class StrategyError(AssertionError):
    """A stored strategy failed verification; indicates a bug."""
