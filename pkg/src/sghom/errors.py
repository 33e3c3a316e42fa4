"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateColouredEdge(GraphError):
    """Two edges share the same unordered vertex pair and colour."""


class UnknownEndpoint(GraphError):
    """An edge endpoint is not a declared vertex."""


class NotSigned(GraphError):
    """An operation restricted to signed graphs met a colour outside {+1, -1}."""


class VertexSetMismatch(GraphError):
    """Two graphs that must share a labelled vertex set do not."""


class BadParameter(GraphError):
    """A generator or construction parameter violates its precondition."""


class BadVertices(GraphError):
    """A vertex argument is missing from the graph or otherwise invalid."""


class NoSuchEdge(GraphError):
    """The named edge does not exist in the graph."""


class InvalidIndicator(GraphError):
    """The indicator graph admits no automorphism exchanging its two pins."""


class PartialAssignment(GraphError):
    """A vertex map is not total on the source vertex set."""


class LimitExceeded(GraphError):
    """An enumeration produced more results than the configured limit."""

    def __init__(self, message: str, partial_count: int = 0):
        super().__init__(message)
        self.partial_count = partial_count


class BoundExceeded(GraphError):
    """A graph is larger than the configured size bound for this operation."""


class IncompleteRotation(GraphError):
    """A rotation system does not cover the graph's incidences exactly."""


class EulerViolation(GraphError):
    """Face tracing of a rotation system contradicts Euler's formula.

    Carries the offending component (a sorted vertex tuple) and its computed
    characteristic V - E + F.
    """

    def __init__(self, message: str, component=(), characteristic=None):
        super().__init__(message)
        self.component = tuple(component)
        self.characteristic = characteristic


class MissingEmbedding(GraphError):
    """A construction that needs a rotation system was not given one."""


class UncertifiedEmbedding(GraphError):
    """A supplied rotation system failed certification."""


class SearchTimeout(GraphError):
    """A solver call exceeded its wall-clock budget."""
