"""
Errors Module

Exception hierarchy shared by the graph, planar, construction and CLI layers.
"""

from typing import Optional, Tuple, Any


class Tk5Error(Exception):
    """Base class for every error raised by the toolkit."""


# ============================================================================
# Input errors
# ============================================================================

class InvalidInputError(Tk5Error, ValueError):
    """An argument violates a documented precondition."""


class AdjacencyError(InvalidInputError):
    """A vertex cut was requested between adjacent vertices."""


class GraphFormatError(InvalidInputError):
    """A graph file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None,
                 position: Optional[int] = None):
        location = ""
        if line is not None:
            location = f"line {line}: "
        elif position is not None:
            location = f"byte {position}: "
        super().__init__(f"{location}{message}")
        self.line = line
        self.position = position


class InfeasibleInstanceError(InvalidInputError):
    """A generator was asked for an instance that cannot exist."""


class PreconditionError(InvalidInputError):
    """A structural hypothesis of an operation does not hold."""

    def __init__(self, message: str, hypothesis: Optional[str] = None):
        super().__init__(message)
        self.hypothesis = hypothesis


class InvalidQueryError(InvalidInputError):
    """A predicate was asked about an object it does not apply to."""


class NoHammockError(Tk5Error):
    """The given 4-set does not separate the graph."""


class ResourceLimitError(Tk5Error):
    """The input exceeds a configured size limit."""


# ============================================================================
# Hypothesis errors (input graph is not a valid instance)
# ============================================================================

class HypothesisError(Tk5Error):
    """The input graph does not satisfy the construction hypotheses."""

    hypothesis = "hypothesis"

    def __init__(self, message: str):
        super().__init__(message)


class NotFiveConnectedError(HypothesisError):
    hypothesis = "5-connected"


class PlanarInputError(HypothesisError):
    hypothesis = "nonplanar"


class NotApexError(HypothesisError):
    hypothesis = "apex"


# ============================================================================
# Internal errors
# ============================================================================

class InternalConsistencyError(Tk5Error):
    """An invariant that the construction guarantees was found violated."""


class RuleGapError(InternalConsistencyError):
    """A vertex of the hammock is covered by no discharging rule."""


class ConstructionFailure(InternalConsistencyError):
    """Every construction route was exhausted without a result."""

    def __init__(self, message: str, trace: Any = None):
        super().__init__(message)
        self.trace = trace


class AssemblyError(InternalConsistencyError):
    """The assembled certificate fails verification."""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.pair = pair
