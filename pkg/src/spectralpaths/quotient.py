"""Symmetry reduction of grounded eigenproblems.

Color refinement starting from the partition {special vertex} vs
{same vertex weight} converges to the coarsest equitable partition
respecting the grounding.  When no cell contains an internal edge, the
quotient graph (cells as vertices, cell sizes as vertex weights, total
cross weight as edge weights) has the same grounded eigenvalue, and the
eigenfunction lifts back by composition with the cell map.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import eigen
from .errors import InternalEdgeInCell
from .graph import WeightedGraph, build_graph
from .paths import PotentialFunction, grounded_eigenfunction

# w-norm of a lifted function may drift from 1 by accumulated rounding;
# anything past this is a logic error, not noise
LIFT_NORM_TOL = 1e-10


@dataclass
class Partition:
    """A partition of the vertices with the grounded vertex isolated.

    cells are sorted internally and ordered by their smallest member, so
    cell 0 is always the singleton {special}.  cell_of[u] is the index
    of the cell containing u.
    """

    cells: list[list[int]]
    cell_of: np.ndarray
    special_cell: int


def refine_partition(graph: WeightedGraph, i: int) -> Partition:
    """Coarsest equitable partition separating vertex i.

    Vertices start colored by (is it i, vertex weight) and are split by
    the multiset of (neighbor color, edge weight) pairs until stable.
    """
    graph._check_vertex(i)
    # colors are renamed to dense ints every round so signatures stay
    # small; the rename is by sorted signature, hence deterministic
    initial = [(u == i, float(graph.vertex_weight[u])) for u in range(graph.n)]
    cmap = {c: idx for idx, c in enumerate(sorted(set(initial)))}
    color = [cmap[c] for c in initial]
    ncolors = len(cmap)
    while True:
        sig = [
            (color[u], tuple(sorted((color[v], w) for v, w in graph.neighbors(u))))
            for u in range(graph.n)
        ]
        distinct = sorted(set(sig))
        if len(distinct) == ncolors:
            break
        smap = {s: idx for idx, s in enumerate(distinct)}
        color = [smap[s] for s in sig]
        ncolors = len(distinct)
    groups: dict[int, list[int]] = {}
    for u in range(graph.n):
        groups.setdefault(color[u], []).append(u)
    cells = sorted((sorted(g) for g in groups.values()), key=lambda c: c[0])
    cell_of = np.empty(graph.n, dtype=int)
    for idx, cell in enumerate(cells):
        for u in cell:
            cell_of[u] = idx
    return Partition(cells=cells, cell_of=cell_of, special_cell=int(cell_of[i]))


@dataclass
class QuotientGraph:
    """A reduced graph together with the map from original vertices.

    graph has one vertex per cell; phi[u] is the cell of u.  cells keeps
    the members per cell (sizes are the quotient vertex weights).
    weight_poly, when present, expresses each quotient weight as a sum
    of (coefficient, degree) monomials in the family width k, with the
    coefficient itself possibly carrying one power of the pendant rate t.
    """

    graph: WeightedGraph
    phi: np.ndarray
    special_cell: int
    cells: list[list[int]]
    weight_poly: dict | None = None


def quotient_graph(graph: WeightedGraph, i: int, partition: Partition | None = None) -> QuotientGraph:
    """Collapse each cell of the refined partition to one vertex.

    Quotient vertex weights count cell members; quotient edge weights
    total the edge weight crossing between two cells.  An edge inside a
    cell would make the collapsed problem disagree with the original, so
    it is rejected outright.
    """
    if partition is None:
        partition = refine_partition(graph, i)
    cells, cell_of = partition.cells, partition.cell_of
    m = len(cells)
    cross: dict[tuple[int, int], float] = {}
    for (u, v), w in graph.edges.items():
        a, b = int(cell_of[u]), int(cell_of[v])
        if a == b:
            raise InternalEdgeInCell(a)
        key = (min(a, b), max(a, b))
        cross[key] = cross.get(key, 0.0) + w
    qgraph = build_graph(
        m,
        [(a, b, w) for (a, b), w in cross.items()],
        vertex_weights=[float(len(c)) for c in cells],
        labels=[graph.label_of(c[0]) + ("" if len(c) == 1 else "*") for c in cells],
    )
    return QuotientGraph(
        graph=qgraph,
        phi=cell_of.copy(),
        special_cell=partition.special_cell,
        cells=cells,
    )


def lift(qf: PotentialFunction, q: QuotientGraph) -> PotentialFunction:
    """Pull a quotient potential back to the original vertices.

    Composition with phi preserves the w-norm exactly in exact
    arithmetic because the quotient vertex weights count cell members;
    the float version is renormalized after checking it only moved by
    rounding.
    """
    values = qf.values[q.phi]
    qw = q.graph.vertex_weight
    norm = float(np.sqrt(np.sum(qw * qf.values**2)))
    if abs(norm - 1.0) > LIFT_NORM_TOL:
        raise AssertionError(f"lifted function has w-norm {norm!r}, expected 1")
    special = q.cells[q.special_cell][0]
    return PotentialFunction(
        special=special,
        values=values / norm,
        eigenvalue=qf.eigenvalue,
        kind=qf.kind,
        gap=qf.gap,
    )


def lifted_eigenfunction(graph: WeightedGraph, i: int, **kwargs) -> PotentialFunction:
    """Grounded eigenfunction computed on the quotient and lifted back."""
    q = quotient_graph(graph, i)
    qf = grounded_eigenfunction(q.graph, q.special_cell, **kwargs)
    return lift(qf, q)
