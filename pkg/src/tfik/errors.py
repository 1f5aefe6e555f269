"""Exception types raised across the package."""

from __future__ import annotations


class TfikError(Exception):
    """Base class for all package errors."""


class InvalidEdge(TfikError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(TfikError):
    """The same unordered pair was given twice."""


class BadVertex(TfikError):
    """A vertex index is out of range."""


class NotAnEdge(TfikError):
    """The requested pair is not adjacent."""


class ParseError(TfikError):
    """Malformed graph6 input."""


class SamePair(TfikError):
    """A vertex pair with identical endpoints."""


class OutOfRegime(UserWarning):
    """Issued (as a warning) when a ledger is computed outside its stated regime."""


class NotATriangle(TfikError):
    pass


class NotAYVertex(TfikError):
    """Y-to-triangle requested at a vertex whose degree is not 3."""


class WouldCreateParallel(TfikError):
    """Y-to-triangle refused because two neighbours are already adjacent."""


class ClosureBudget(TfikError):
    """Family closure stopped at its member budget; ``partial`` holds what was found."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class UnknownGraph(TfikError):
    pass


class NoWitness(TfikError):
    pass


class OracleTooLarge(TfikError):
    pass


class Truncated(TfikError):
    """Enumeration hit its node budget; ``partial`` holds the graphs found so far."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
