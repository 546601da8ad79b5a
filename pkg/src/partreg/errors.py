"""Exception types shared across the toolkit."""


class PartregError(Exception):
    """Base class for toolkit errors."""


class EquationParseError(PartregError, ValueError):
    """Raised when equation text cannot be parsed into a canonical form."""


class ColoringFormatError(PartregError, ValueError):
    """Raised when a coloring file or spec string is malformed."""


class BudgetExceededError(PartregError):
    """A node budget ran out before the search could conclude.

    Distinct from an exhausted search: exceeding a budget proves nothing.
    """

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class VerificationError(PartregError):
    """An independently re-checked structure failed its verification."""
