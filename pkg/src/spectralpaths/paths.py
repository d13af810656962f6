"""Grounded eigenfunctions, spectral trees, and spectral paths.

The eigenfunction f_i grounded at a special vertex i is positive on the
rest of the graph and strictly decreases toward i across some neighbor
of every positive-weight vertex.  Descending it greedily therefore walks
to i; the walk is the spectral path.  Its length can wildly exceed the
hop distance of its endpoints, which is the phenomenon the family
generators in this package reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import eigen
from .errors import BadParams, OrphanEncountered
from .graph import PathRecord, WeightedGraph

ROOT = -1
ORPHAN = -2

# two neighbor values this close (relatively) count as a tie
TIE_RTOL = 1e-9


@dataclass
class PotentialFunction:
    """A descent potential on a graph: zero at the special vertex,
    positive elsewhere, unit norm in the relevant inner product.

    kind is one of "grounded-eigen" (eigenvalue = dominant mu of
    L_i^{-1} W), "spread" (eigenvalue = the step s), or "rw-fiedler"
    (eigenvalue = the second-smallest random-walk eigenvalue).
    """

    special: int
    values: np.ndarray
    eigenvalue: float
    kind: str = "grounded-eigen"
    gap: float = np.nan

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)


def grounded_eigenfunction(
    graph: WeightedGraph,
    i: int,
    tol: float = eigen.DEFAULT_TOL,
    max_iter: int = eigen.DEFAULT_MAX_ITER,
    compute_gap: bool = True,
) -> PotentialFunction:
    """The unique positive unit-w-norm minimizer of the Dirichlet energy
    among functions vanishing at i.

    Both the graph and the graph minus i must be positively connected;
    that regime makes the minimizer unique and positive, and the descent
    guarantees below apply to it.
    """
    graph._check_vertex(i)
    graph.require_positively_connected()
    graph.require_positively_connected(skip=i)
    L_i, keep = eigen.grounded_laplacian(graph, i)
    w = eigen.restricted_weights(graph, i)
    pair = eigen.dominant_pair(L_i, w, tol=tol, max_iter=max_iter, compute_gap=compute_gap)
    values = np.zeros(graph.n)
    values[keep] = pair.vector
    return PotentialFunction(
        special=i,
        values=values,
        eigenvalue=pair.value,
        kind="grounded-eigen",
        gap=pair.gap,
    )


@dataclass
class SpectralTree:
    """Greedy-descent structure of a potential.

    parent[u] is the neighbor of u minimizing the potential, recorded
    only when strictly smaller than the value at u; the special vertex
    holds ROOT and vertices with no strictly smaller neighbor hold
    ORPHAN.  ties lists, per vertex, the neighbors whose values came
    within relative TIE_RTOL of the chosen minimum.
    """

    special: int
    parent: np.ndarray
    ties: list[tuple[int, list[int]]] = field(default_factory=list)
    orphans: set[int] = field(default_factory=set)
    values: np.ndarray | None = None

    def tie_map(self) -> dict[int, list[int]]:
        return {u: tied for u, tied in self.ties}


def spectral_tree(graph: WeightedGraph, i: int, f: PotentialFunction) -> SpectralTree:
    """Build the descent tree of f grounded at i.

    The argmin uses exact float comparison, breaking exact ties by the
    smallest vertex index; near-ties are surfaced in the result rather
    than silently resolved.
    """
    graph._check_vertex(i)
    vals = f.values
    parent = np.full(graph.n, ORPHAN, dtype=int)
    parent[i] = ROOT
    ties: list[tuple[int, list[int]]] = []
    orphans: set[int] = set()
    for u in range(graph.n):
        if u == i:
            continue
        best = ORPHAN
        best_val = vals[u]
        for v, _ in graph.neighbors(u):
            if vals[v] < best_val or (vals[v] == best_val and best != ORPHAN and v < best):
                best = v
                best_val = vals[v]
        if best == ORPHAN:
            orphans.add(u)
            continue
        parent[u] = best
        tied = [
            v
            for v, _ in graph.neighbors(u)
            if v != best
            and vals[v] < vals[u]
            and abs(vals[v] - best_val) <= TIE_RTOL * max(abs(vals[v]), abs(best_val))
        ]
        if tied:
            ties.append((u, sorted([best] + tied)))
    return SpectralTree(special=i, parent=parent, ties=ties, orphans=orphans, values=vals)


def _walk_to_root(graph: WeightedGraph, tree: SpectralTree, j: int) -> list[int]:
    """Follow parent pointers from j to the special vertex."""
    vertices = [j]
    u = j
    for _ in range(graph.n):
        if u == tree.special:
            return vertices
        p = int(tree.parent[u])
        if p == ORPHAN:
            raise OrphanEncountered(u)
        u = p
        vertices.append(u)
    if u == tree.special:
        return vertices
    raise OrphanEncountered(u)  # unreachable for strictly decreasing potentials


def _record_from_walk(
    graph: WeightedGraph, tree: SpectralTree, vertices: list[int]
) -> PathRecord:
    j, i = vertices[0], vertices[-1]
    length = len(vertices) - 1
    dist = 0 if i == j else int(graph.hop_distance(j, i))
    tie_map = tree.tie_map()
    tie_vertices = [u for u in vertices[:-1] if u in tie_map]
    return PathRecord(
        vertices=vertices,
        length=length,
        endpoint_distance=dist,
        stretch=None if i == j else Fraction(length, dist),
        had_tie=bool(tie_vertices),
        tie_vertices=tie_vertices,
    )


def spectral_path(
    graph: WeightedGraph,
    i: int,
    j: int,
    f: PotentialFunction | None = None,
    tree: SpectralTree | None = None,
) -> PathRecord:
    """The spectral path from j to i: greedy descent of f_i starting at j.

    Descent from a zero-weight vertex can stall at a local minimum of
    the potential; that surfaces as OrphanEncountered rather than a
    truncated path.
    """
    graph._check_vertex(i)
    graph._check_vertex(j)
    if tree is None:
        if f is None:
            f = grounded_eigenfunction(graph, i, compute_gap=False)
        tree = spectral_tree(graph, i, f)
    return _record_from_walk(graph, tree, _walk_to_root(graph, tree, j))


def symmetric_spectral_path(
    graph: WeightedGraph,
    i: int,
    j: int,
    tree_i: SpectralTree | None = None,
    tree_j: SpectralTree | None = None,
) -> PathRecord:
    """The shorter of the spectral path from j to i and the one from i
    to j; on equal lengths the i-to-j direction is returned."""
    path_to_i = spectral_path(graph, i, j, tree=tree_i)
    path_to_j = spectral_path(graph, j, i, tree=tree_j)
    if path_to_j.length <= path_to_i.length:
        return path_to_j
    return path_to_i


def stretch(graph: WeightedGraph, i: int, j: int) -> Fraction:
    """Spectral path length from j to i divided by their hop distance."""
    if i == j:
        raise BadParams("stretch requires two distinct vertices")
    return spectral_path(graph, i, j).stretch


@dataclass
class DescentReport:
    """Per-vertex audit of the descent guarantees for a potential."""

    positivity_failures: list[int]
    weak_failures: list[int]
    strict_failures: list[int]

    @property
    def ok(self) -> bool:
        return not (self.positivity_failures or self.weak_failures or self.strict_failures)


def verify_descent(graph: WeightedGraph, i: int, f: PotentialFunction) -> DescentReport:
    """Check that f is positive away from i, that every vertex has a
    weakly smaller neighbor, and that the inequality is strict wherever
    the vertex weight is positive."""
    vals = f.values
    positivity = [u for u in range(graph.n) if u != i and not vals[u] > 0]
    weak: list[int] = []
    strict: list[int] = []
    slack = 1e-12
    for u in range(graph.n):
        if u == i:
            continue
        m = min(vals[v] for v, _ in graph.neighbors(u))
        if m > vals[u] + slack * max(1.0, abs(vals[u])):
            weak.append(u)
        if graph.vertex_weight[u] > 0 and not m < vals[u]:
            strict.append(u)
    return DescentReport(positivity, weak, strict)


def averaging_residual(graph: WeightedGraph, f: PotentialFunction) -> float:
    """Largest deviation from the zero-weight averaging identity.

    At a vertex u other than the special one with w_V(u) = 0, the
    eigenfunction equals the edge-weighted mean of its neighbors (the
    special vertex contributes value 0 but full weight to the mean).
    Returns 0 when no such vertex exists.
    """
    vals = f.values
    worst = 0.0
    for u in range(graph.n):
        if u == f.special or graph.vertex_weight[u] > 0:
            continue
        num = 0.0
        den = 0.0
        for v, wt in graph.neighbors(u):
            num += wt * vals[v]
            den += wt
        if den > 0:
            worst = max(worst, abs(vals[u] - num / den))
    return worst
