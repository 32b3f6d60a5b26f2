class DiamondError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceeded(DiamondError):
    """A brute-force route would exceed its configured work budget."""


class NonIntegralResult(DiamondError, ArithmeticError):
    """A counting formula produced a non-integer; always a bug, never rounded."""
