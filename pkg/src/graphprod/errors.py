"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """A computation would exceed its configured size budget."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class ExtractionError(ArithmeticError):
    """A power series is not consistent with the requested factorization."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class SeriesFormulaError(ArithmeticError):
    """The clique formula produced a coefficient that cannot be a dimension."""
