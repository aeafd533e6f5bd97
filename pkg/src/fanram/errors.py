"""Exception types shared across the package."""

from __future__ import annotations


class FanramError(Exception):
    """Base class for all package errors."""


class OrderCap(FanramError):
    """A graph would exceed the supported order (128 vertices)."""


class BadParam(FanramError):
    """A structurally invalid parameter (zero counts, bad part sizes, wrong pattern kind)."""


class ParseError(FanramError):
    """Malformed textual input. Carries the offset where parsing failed."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionViolated(FanramError):
    """An operation's stated precondition does not hold for the given input."""


class StructureNotFound(FanramError):
    """A structure guaranteed by theory was not found; signals a genuine failure."""


class UnknownFormula(FanramError):
    """closed_formula was asked for an id that is not registered."""


class MissingParam(FanramError):
    """A formula evaluation lacks one or more required parameters."""


class BudgetExhausted(FanramError):
    """A search exceeded its node budget. Carries partial statistics."""

    def __init__(self, message: str, stats=None):
        super().__init__(message)
        self.stats = stats


class RangeError(FanramError):
    """Every order in a scan range admitted a free coloring."""


class SamplingFailure(FanramError):
    """Random sampling could not produce a graph meeting its conditioning."""


class CorruptRecord(FanramError):
    """A stored record failed re-validation on load."""
