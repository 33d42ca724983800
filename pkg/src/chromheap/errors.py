"""Exception types shared across the package.

Every error raised on purpose derives from ChromheapError, so callers
(and the CLI) can distinguish "you asked for something invalid or too
big" from genuine bugs.
"""


class ChromheapError(Exception):
    """Base class for all errors raised deliberately by this package."""


class GraphFormatError(ChromheapError):
    """A graph text file or edge list could not be parsed."""


class LoopEdge(ChromheapError):
    """An edge joins a vertex to itself."""


class VertexOutOfRange(ChromheapError):
    """A vertex label lies outside 1..n."""


class TooManyVertices(ChromheapError):
    """The requested operation is capped at a smaller vertex count."""


class TooManyEdges(ChromheapError):
    """The requested operation is capped at a smaller edge count."""


class EmptyVertexSet(ChromheapError):
    """min() of the empty vertex set was requested."""


class NotAdjacent(ChromheapError):
    """The operation needs two adjacent vertices."""


class NotAClique(ChromheapError):
    """The operation needs a set of pairwise adjacent vertices."""


class Disconnected(ChromheapError):
    """The operation needs a connected graph."""


class BadLabeling(ChromheapError):
    """Vertex labels do not satisfy the ascending-adjacency condition."""


class CyclicOrientation(ChromheapError):
    """An orientation that must be acyclic contains a directed cycle."""


class ResourceBudgetExceeded(ChromheapError):
    """A computation would exceed its configured resource budget."""


class NonIntegerResult(ChromheapError):
    """An exact computation produced a non-integer where one was required."""


class InternalInvariantViolation(ChromheapError):
    """An internal cross-check failed; indicates a bug, not user error."""
