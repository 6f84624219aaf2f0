"""Exception types shared across the package."""

from __future__ import annotations


class CliqueDualError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceeded(CliqueDualError):
    """An enumeration produced more sets than its budget allows.

    ``stage`` names the computation that blew up (e.g. ``"dualize"``) so
    callers can report where the exponential growth happened.
    """

    def __init__(self, stage: str, limit: int, message: str | None = None):
        self.stage = stage
        self.limit = limit
        super().__init__(message or f"{stage}: budget of {limit} exceeded")


class ParseError(CliqueDualError, ValueError):
    """Malformed graph or hypergraph text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotInClassError(CliqueDualError, ValueError):
    """A specialized recognizer was handed a graph outside its class."""
