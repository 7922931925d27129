"""Exception types shared across the package."""


class PredimError(Exception):
    """Base class for all package errors."""


class InputError(PredimError):
    """Malformed or inconsistent user input (bad graph, bad subset, bad matrix...)."""


class BudgetExhausted(PredimError):
    """A bounded search ran out of its step budget before reaching a verdict."""

    def __init__(self, message="step budget exhausted", spent=None):
        super().__init__(message)
        self.spent = spent
