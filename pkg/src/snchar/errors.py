"""Shared exception types."""


class RingMismatchError(ValueError):
    """Operands live over different indeterminate sets."""


class SingularMatrixError(ArithmeticError):
    """An exact linear solve or determinant hit a singular matrix."""


class BudgetExceededError(RuntimeError):
    """A requested computation exceeds the configured size caps."""
