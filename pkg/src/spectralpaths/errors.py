"""Exception hierarchy shared by all spectralpaths modules."""


class SpectralPathsError(Exception):
    """Base class for all domain errors raised by this package."""


class IndexOutOfRange(SpectralPathsError, IndexError):
    """A vertex index is outside 0..n-1."""


class NegativeWeight(SpectralPathsError, ValueError):
    """An edge or vertex weight is negative."""


class DuplicateEdge(SpectralPathsError, ValueError):
    """The same unordered vertex pair was supplied twice."""


class AllVertexWeightsZero(SpectralPathsError, ValueError):
    """Every vertex weight is zero; at least one must be positive."""


class DisconnectedGraph(SpectralPathsError, ValueError):
    """The operation requires a connected graph."""


class NotPositivelyConnected(SpectralPathsError, ValueError):
    """The positive-weight edge subgraph does not connect all vertices.

    ``which`` records whether the failure was detected on the full graph
    or on the graph with the special vertex removed.
    """

    def __init__(self, which: str = "G"):
        self.which = which
        super().__init__(f"{which} is not positively connected")


class NotPositiveDefinite(SpectralPathsError, ValueError):
    """Cholesky factorization hit a nonpositive pivot."""

    def __init__(self, pivot: int):
        self.pivot = pivot
        super().__init__(f"matrix is not positive definite (pivot {pivot})")


class ZeroWeightMatrix(SpectralPathsError, ValueError):
    """The diagonal weight matrix is identically zero."""


class ZeroWNorm(SpectralPathsError, ValueError):
    """The weighted norm of a function is zero."""


class NoConvergence(SpectralPathsError, RuntimeError):
    """An iterative solver exhausted its iteration budget."""

    def __init__(self, iterations: int, what: str = "iteration"):
        self.iterations = iterations
        super().__init__(f"{what} did not converge within {iterations} iterations")


class OrphanEncountered(SpectralPathsError, RuntimeError):
    """A greedy descent reached a vertex with no strictly smaller neighbor."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"descent stalled at vertex {vertex} (no strictly smaller neighbor)")


class InternalEdgeInCell(SpectralPathsError, ValueError):
    """A partition cell contains an edge, so the quotient is not defined."""

    def __init__(self, cell: int):
        self.cell = cell
        super().__init__(f"cell {cell} contains an internal edge")


class BadParams(SpectralPathsError, ValueError):
    """Family parameters are outside the valid range."""


class TZero(BadParams):
    """floor(t*k) = 0, so the double broom would have no pendant vertices."""


class UnsupportedFamily(SpectralPathsError, ValueError):
    """The requested family has no analytic quotient."""
