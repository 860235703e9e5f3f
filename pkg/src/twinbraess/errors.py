"""Exception hierarchy shared by every module.

Each class carries an ``exit_code`` so the CLI can map failures onto its
documented exit statuses without a lookup table.
"""

from __future__ import annotations


class TwinBraessError(Exception):
    """Base class for all library errors."""

    exit_code = 2


# -- input / usage errors (exit status 1) ---------------------------------


class InputError(TwinBraessError):
    exit_code = 1


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoop(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class InvalidEntry(InputError):
    pass


# -- precondition violations (exit status 2) -------------------------------


class PreconditionError(TwinBraessError):
    exit_code = 2


class Disconnected(PreconditionError):
    pass


class IsolatedVertex(PreconditionError):
    pass


class TrivialGraph(PreconditionError):
    """Raised for the single-vertex graph where a nontrivial one is required."""


class EdgeAlreadyPresent(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class PatternTooLarge(TooLarge):
    pass


class PatternNotSmaller(PreconditionError):
    pass


class GuardViolation(PreconditionError):
    pass


class AttemptsExhausted(PreconditionError):
    pass


# -- linear algebra --------------------------------------------------------


class LinalgError(PreconditionError):
    pass


class NotSquare(LinalgError):
    pass


class Singular(LinalgError):
    pass


class NotSymmetric(LinalgError):
    pass


# -- internal consistency (exit status 3) ----------------------------------


class CriterionMismatch(TwinBraessError):
    """The two routes to a twin-Braess verdict disagreed. Always a bug."""

    exit_code = 3
