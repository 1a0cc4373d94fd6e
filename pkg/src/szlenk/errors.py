"""Exception types raised by the ordinal engine, the space algebra and the CLI."""


class SzlenkError(Exception):
    """Base class for every error raised by this package."""


class OrdinalDomainError(SzlenkError, ValueError):
    """An operation was called outside its domain (e.g. deg(0), gamma of a finite ordinal)."""


class OrdinalOverflowError(SzlenkError, ArithmeticError):
    """A Cantor-normal-form coefficient no longer fits the fixed-width coefficient type."""


class ExpressionSyntaxError(SzlenkError, ValueError):
    """Raised by the expression parsers; `position` is the 0-based offset of the offending token."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.position = position


class RewriteLimitError(SzlenkError, RuntimeError):
    """normalize() exceeded the configured step guard."""
