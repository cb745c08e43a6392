"""Exception types shared across the package."""

from __future__ import annotations


class PovdError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(PovdError):
    """Invalid operation on a graph."""


class SelfLoopError(GraphError):
    """An edge with identical endpoints was supplied."""


class UnknownVertexError(GraphError):
    """A vertex id that is not live in the graph was supplied."""


class NoSuchEdgeError(GraphError):
    """The requested edge is not present."""


class PreconditionViolated(PovdError):
    """A caller-guaranteed precondition turned out to be false.

    Raised when a scan meant for triangle- and 4-cycle-free graphs
    detects one of those patterns, or when component classification is
    asked about a component that contains a forbidden subgraph.
    """


class TooLargeError(PovdError):
    """Input exceeds a brute-force guard limit."""


class InvalidSpecError(PovdError):
    """A generator spec is malformed."""


class ParseError(PovdError):
    """Malformed graph or solution file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IndexOutOfRangeError(ParseError):
    """A 1-indexed vertex reference is outside the declared range."""
