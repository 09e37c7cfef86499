"""Exception hierarchy shared by all comdrift modules."""

from __future__ import annotations


class ComdriftError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(ComdriftError, ValueError):
    """A scalar argument is outside its documented domain (bad eta, m, step...)."""


class InvalidDistribution(ComdriftError, ValueError):
    """A migration distribution violates its invariants.

    Covers negative weights, weights that do not sum to one within
    tolerance, length mismatches against the community count, and an
    empty distribution supplied while some members stayed.
    """


class SnapshotError(ComdriftError, ValueError):
    """A community lookup failed against a snapshot."""


class DegenerateTransition(ComdriftError, ValueError):
    """One side of a transition has zero communities, so indices are undefined."""


class TimelineError(ComdriftError, ValueError):
    """A snapshot sequence is too short or its times do not strictly increase."""


class ParseError(ComdriftError):
    """Malformed membership or report input.

    ``line`` is the 1-based line number of the offending record when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateMember(ParseError):
    """The same (time, member) pair appeared twice in the input."""


class EmptyInput(ParseError):
    """The input stream contained no membership records at all."""
