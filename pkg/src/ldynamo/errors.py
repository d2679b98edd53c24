"""Exception types shared across the package."""


class LdynamoError(Exception):
    """Base class for all library errors."""


class GraphFormatError(LdynamoError, ValueError):
    """Base class for edge-list / threshold-file parse errors."""


class MalformedLineError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class OddCycleError(LdynamoError, ValueError):
    """Raised when a bipartition is requested but an odd cycle exists.

    Carries the witness cycle as a list of vertices (closed walk of odd
    length; first vertex is not repeated at the end).
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"graph is not bipartite; odd cycle {self.cycle}")


class NotAForestError(LdynamoError, ValueError):
    pass


class CapExceededError(LdynamoError, ValueError):
    """A brute-force operation was asked to run above its configured cap."""


class DegenerateInstanceError(LdynamoError, ValueError):
    """A generated instance has parameters outside the construction's range."""
