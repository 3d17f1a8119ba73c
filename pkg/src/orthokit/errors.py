"""Exception types shared across the toolkit."""

from __future__ import annotations


class OrthokitError(Exception):
    """Base class for all toolkit errors."""


class ArityError(OrthokitError):
    """A symbol was used with the wrong number of arguments."""


class InvalidPositionError(OrthokitError):
    """A position does not address a subterm of the given term."""


class InvalidGeometryError(OrthokitError):
    """Positions derived for a substitution update fall outside the binding."""


class RuleError(OrthokitError):
    """A rewrite rule violates well-formedness (variable lhs, unbound rhs variable)."""


class NotParallelError(OrthokitError):
    """A simultaneous replacement was requested at non-parallel positions."""


class InvalidStepError(OrthokitError):
    """A parallel step is malformed or does not fit the subject term."""


class InvalidRedexError(OrthokitError):
    """A redex triple does not fit the subject term."""


class CapExceededError(OrthokitError):
    """A bounded search outgrew its cap; the instance is too large, not wrong."""


class PreconditionError(OrthokitError):
    """An operation was called on a system outside its stated class."""


class OverlapViolationError(OrthokitError):
    """A redex overlaps the rigid part of an enclosing redex's pattern."""


class JoinCheckError(OrthokitError):
    """Internal consistency check of a constructed join failed.

    On inputs that really are orthogonal this cannot happen; it exists to
    surface implementation bugs together with a replayable context.
    """


class GenerationExhaustedError(OrthokitError):
    """Rejection sampling failed to produce a system within the retry budget."""


class ParseError(OrthokitError):
    """Input text rejected; carries the offending location and an error kind."""

    def __init__(self, message: str, line: int, col: int, kind: str = "parse-error"):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col
        self.kind = kind

    def __str__(self) -> str:
        return f"line {self.line}, col {self.col}: {self.message}"
