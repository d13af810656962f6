"""Weighted graphs with vertex and edge weights, plus the handful of
combinatorial utilities everything else is built on.

Vertices are integers 0..n-1.  Edges are unordered pairs with nonnegative
float weights; vertex weights are a nonnegative float vector.  Graphs are
immutable once constructed: mutating operations return new graphs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    AllVertexWeightsZero,
    DisconnectedGraph,
    DuplicateEdge,
    IndexOutOfRange,
    NegativeWeight,
    NotPositivelyConnected,
)


class WeightedGraph:
    """Undirected graph with nonnegative edge and vertex weights.

    Parameters
    ----------
    n:
        Number of vertices.
    edges:
        Iterable of (u, v, weight) triples.  Each unordered pair may
        appear at most once, u != v.
    vertex_weights:
        Length-n nonnegative vector.  At least one entry must be positive.
    labels:
        Optional list of human-readable vertex names.
    """

    def __init__(self, n, edges, vertex_weights, labels=None):
        if n <= 0:
            raise IndexOutOfRange(f"need at least one vertex, got n={n}")
        self.n = int(n)

        w = np.asarray(vertex_weights, dtype=float)
        if w.shape != (self.n,):
            raise IndexOutOfRange(
                f"vertex weight vector has shape {w.shape}, expected ({self.n},)"
            )
        if np.any(w < 0):
            bad = int(np.argmin(w))
            raise NegativeWeight(f"vertex {bad} has negative weight {w[bad]}")
        if not np.any(w > 0):
            raise AllVertexWeightsZero("all vertex weights are zero")
        self.vertex_weight = w
        self.vertex_weight.setflags(write=False)

        edge_dict: dict[tuple[int, int], float] = {}
        for u, v, wt in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise IndexOutOfRange(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise DuplicateEdge(f"self loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in edge_dict:
                raise DuplicateEdge(f"edge {key} supplied twice")
            wt = float(wt)
            if wt < 0:
                raise NegativeWeight(f"edge {key} has negative weight {wt}")
            edge_dict[key] = wt
        self.edges = edge_dict

        if labels is not None:
            labels = [str(x) for x in labels]
            if len(labels) != self.n:
                raise IndexOutOfRange(
                    f"got {len(labels)} labels for {self.n} vertices"
                )
        self.labels = labels

        # adjacency with weights, precomputed once
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for (u, v), wt in edge_dict.items():
            adj[u].append((v, wt))
            adj[v].append((u, wt))
        for lst in adj:
            lst.sort()
        self._adj = adj

    def neighbors(self, u: int) -> list[tuple[int, float]]:
        """Sorted (neighbor, edge weight) pairs of u."""
        self._check_vertex(u)
        return list(self._adj[u])

    def edge_weight(self, u: int, v: int) -> float:
        self._check_vertex(u)
        self._check_vertex(v)
        key = (u, v) if u < v else (v, u)
        return self.edges.get(key, 0.0)

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self._adj[u])

    def label_of(self, u: int) -> str:
        self._check_vertex(u)
        if self.labels is None:
            return str(u)
        return self.labels[u]

    def index_of(self, label: str) -> int:
        """Vertex index for a label.  Accepts exact labels, the label with
        braces and commas collapsed to underscores, or a bare integer."""
        if self.labels is not None:
            if label in self.labels:
                return self.labels.index(label)
            squashed = [
                lab.replace("{", "").replace("}", "").replace(",", "_")
                for lab in self.labels
            ]
            if label in squashed:
                return squashed.index(label)
        try:
            u = int(label)
        except ValueError:
            raise IndexOutOfRange(f"no vertex labelled {label!r}") from None
        self._check_vertex(u)
        return u

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise IndexOutOfRange(f"vertex {u} out of range for n={self.n}")

    # matrices -----------------------------------------------------------

    def laplacian(self) -> np.ndarray:
        """Weighted graph Laplacian as a dense array."""
        L = np.zeros((self.n, self.n))
        for (u, v), wt in self.edges.items():
            L[u, u] += wt
            L[v, v] += wt
            L[u, v] -= wt
            L[v, u] -= wt
        return L

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for (u, v), wt in self.edges.items():
            A[u, v] = wt
            A[v, u] = wt
        return A

    # connectivity -------------------------------------------------------

    def is_connected(self, positive_only: bool = False, skip: int | None = None) -> bool:
        """BFS connectivity test.

        With positive_only, edges of weight zero are ignored.  With skip,
        that vertex is removed before testing (the remaining n-1 vertices
        must be mutually reachable).
        """
        if skip is not None:
            self._check_vertex(skip)
        start = 0 if skip != 0 else 1
        if start >= self.n:
            return True  # zero or one vertex left
        seen = [False] * self.n
        seen[start] = True
        if skip is not None:
            seen[skip] = True  # never enter it
        queue = deque([start])
        count = 1
        while queue:
            u = queue.popleft()
            for v, wt in self._adj[u]:
                if seen[v] or (positive_only and wt <= 0):
                    continue
                seen[v] = True
                count += 1
                queue.append(v)
        want = self.n if skip is None else self.n - 1
        return count == want

    def component_of(self, start: int, skip: int | None = None) -> list[int]:
        """Vertices reachable from start, optionally with one vertex
        treated as deleted.  Sorted ascending."""
        self._check_vertex(start)
        if start == skip:
            raise IndexOutOfRange("component source equals the skipped vertex")
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, _ in self._adj[u]:
                if v != skip and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return sorted(seen)

    def require_positively_connected(self, skip: int | None = None) -> None:
        """Raise NotPositivelyConnected if positive-weight edges do not
        connect the graph (optionally with one vertex removed)."""
        if not self.is_connected(positive_only=True, skip=skip):
            raise NotPositivelyConnected("G" if skip is None else "G-i")

    # distances ----------------------------------------------------------

    def hop_distances_from(self, source: int) -> np.ndarray:
        """Unweighted BFS distances from source; unreachable is -1."""
        self._check_vertex(source)
        dist = np.full(self.n, -1, dtype=int)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v, _ in self._adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def hop_distance(self, u: int, v: int) -> int | float:
        """Minimum edge count between u and v, over all edges regardless
        of weight; math.inf when v is unreachable from u."""
        d = int(self.hop_distances_from(u)[v])
        if d < 0:
            return math.inf
        return d

    def diameter(self) -> int:
        """Largest hop distance over all vertex pairs."""
        best = 0
        for s in range(self.n):
            d = self.hop_distances_from(s)
            if np.any(d < 0):
                raise DisconnectedGraph("graph is disconnected")
            best = max(best, int(d.max()))
        return best

    # derived graphs -----------------------------------------------------

    def delete_vertex(self, i: int) -> "WeightedGraph":
        """Graph with vertex i removed and indices shifted down past i.

        Old vertex j maps to j when j < i and to j-1 when j > i.
        Validation applies as in the constructor, so removing the only
        positive-weight vertex raises AllVertexWeightsZero.
        """
        self._check_vertex(i)
        if self.n == 1:
            raise IndexOutOfRange("cannot delete the only vertex")
        shift = lambda j: j if j < i else j - 1  # noqa: E731
        edges = [
            (shift(u), shift(v), wt)
            for (u, v), wt in self.edges.items()
            if u != i and v != i
        ]
        weights = np.delete(self.vertex_weight, i)
        labels = None
        if self.labels is not None:
            labels = [lab for j, lab in enumerate(self.labels) if j != i]
        return WeightedGraph(self.n - 1, edges, weights, labels)

    def induced_subgraph(self, vertices) -> tuple["WeightedGraph", np.ndarray]:
        """Subgraph on the given vertex set (sorted), plus the array of
        original indices so results can be mapped back."""
        keep = np.array(sorted(set(int(v) for v in vertices)), dtype=int)
        for v in keep:
            self._check_vertex(v)
        pos = {int(v): idx for idx, v in enumerate(keep)}
        edges = [
            (pos[u], pos[v], wt)
            for (u, v), wt in self.edges.items()
            if u in pos and v in pos
        ]
        weights = self.vertex_weight[keep]
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in keep]
        return WeightedGraph(len(keep), edges, weights, labels), keep

    def strip_zero_edges(self) -> "WeightedGraph":
        """Copy without edges of weight zero."""
        edges = [(u, v, wt) for (u, v), wt in self.edges.items() if wt > 0]
        return WeightedGraph(self.n, edges, self.vertex_weight.copy(), self.labels)

    def reweighted(self, edge_scale: float = 1.0, vertex_scale: float = 1.0) -> "WeightedGraph":
        """Copy with all edge and vertex weights scaled."""
        edges = [(u, v, wt * edge_scale) for (u, v), wt in self.edges.items()]
        return WeightedGraph(
            self.n, edges, self.vertex_weight * vertex_scale, self.labels
        )

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={len(self.edges)})"


def build_graph(n, edges, vertex_weights=None, labels=None) -> WeightedGraph:
    """Construct a WeightedGraph; vertex weights default to all ones."""
    if vertex_weights is None:
        vertex_weights = np.ones(n)
    return WeightedGraph(n, edges, vertex_weights, labels)


@dataclass
class PathRecord:
    """A simple path together with how it compares to the hop metric.

    length is the edge count.  endpoint_distance is the hop distance of
    the endpoints; stretch is the exact ratio length/endpoint_distance,
    left as None when the endpoints coincide.  had_tie flags that some
    vertex on the path chose its successor among near-equal candidates
    (listed in tie_vertices).
    """

    vertices: list[int]
    length: int
    endpoint_distance: int | None = None
    stretch: Fraction | None = None
    had_tie: bool = False
    tie_vertices: list[int] = field(default_factory=list)

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def as_labels(self, graph: WeightedGraph) -> list[str]:
        return [graph.label_of(v) for v in self.vertices]


# functional aliases over the graph methods


def hop_distance(g: WeightedGraph, a: int, b: int) -> int | float:
    return g.hop_distance(a, b)


def is_positively_connected(g: WeightedGraph) -> bool:
    return g.is_connected(positive_only=True)


def delete_vertex(g: WeightedGraph, v: int) -> WeightedGraph:
    return g.delete_vertex(v)


def strip_zero_edges(g: WeightedGraph) -> WeightedGraph:
    return g.strip_zero_edges()


def diameter(g: WeightedGraph) -> int:
    return g.diameter()
