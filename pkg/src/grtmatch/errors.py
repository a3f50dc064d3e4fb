class PreconditionError(ValueError):
    """An algorithm was called on an input violating its stated preconditions."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its enumeration budget."""
