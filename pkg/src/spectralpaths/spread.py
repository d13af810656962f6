"""Spread functions: min-max edge-difference potentials whose greedy
descent paths are provably shortest.

Grounding at i and minimizing the largest edge difference over unit
2-norm functions vanishing at i is solved in closed form by the scaled
hop-distance function f~ = d(.,i)/||d||2 with step s = 1/||d||2: every
vertex has a neighbor exactly s lower, so descent reaches i in exactly
d(j,i) steps.  The ungrounded variant (minimize over the unit sphere
meeting the mean-zero hyperplane) has no closed form and ships as a
clearly approximate multistart estimator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParams, DisconnectedGraph
from .graph import PathRecord, WeightedGraph
from .paths import PotentialFunction, spectral_path, spectral_tree


@dataclass
class SpreadSolution:
    """Closed-form grounded spread optimizer.

    f_tilde is zero at the special vertex and positive elsewhere with
    unit 2-norm; s is the largest edge difference; L_map holds, per
    vertex, the drop to its lowest neighbor (identically s away from
    the special vertex, -s at it).
    """

    special: int
    f_tilde: np.ndarray
    s: float
    L_map: np.ndarray


def spread_function(graph: WeightedGraph, i: int) -> SpreadSolution:
    """Solve the grounded min-max edge-difference problem at i.

    Hop distances ignore edge weights: the spread construction lives in
    the unweighted convention.
    """
    graph._check_vertex(i)
    if graph.n == 1:
        z = np.zeros(1)
        return SpreadSolution(special=i, f_tilde=z, s=0.0, L_map=z.copy())
    dist = graph.hop_distances_from(i)
    if np.any(dist < 0):
        raise DisconnectedGraph("spread function needs a connected graph")
    d = dist.astype(float)
    norm = float(np.linalg.norm(d))
    f = d / norm
    s = max(
        abs(f[a] - f[b]) for (a, b) in graph.edges
    )
    L = np.empty(graph.n)
    for u in range(graph.n):
        L[u] = f[u] - min(f[v] for v, _ in graph.neighbors(u))
    return SpreadSolution(special=i, f_tilde=f, s=s, L_map=L)


def spread_potential(graph: WeightedGraph, i: int) -> PotentialFunction:
    """The spread solution wrapped as a descent potential."""
    sol = spread_function(graph, i)
    return PotentialFunction(
        special=i, values=sol.f_tilde, eigenvalue=sol.s, kind="spread"
    )


def spread_path(graph: WeightedGraph, i: int, j: int) -> PathRecord:
    """Greedy descent of the spread function from j to i.

    Ties (equidistant lower neighbors) resolve to the smallest index.
    The result is always a shortest path: length equals hop distance.
    """
    f = spread_potential(graph, i)
    tree = spectral_tree(graph, i, f)
    return spectral_path(graph, i, j, tree=tree)


def _max_edge_diff(graph: WeightedGraph, f: np.ndarray) -> float:
    return max(abs(f[a] - f[b]) for (a, b) in graph.edges)


def estimate_global_spread(
    graph: WeightedGraph,
    restarts: int = 200,
    tol: float = 1e-9,
    seed: int = 0,
    max_iter: int = 2000,
) -> tuple[float, np.ndarray]:
    """Heuristically minimize the largest edge difference over the unit
    sphere intersected with the mean-zero hyperplane.

    Multi-start projected subgradient descent; returns the best value
    found and its witness.  The value is an upper bound on the true
    optimum, not a certificate.
    """
    if not graph.is_connected():
        raise DisconnectedGraph("global spread needs a connected graph")
    if graph.n < 2:
        raise BadParams("global spread needs at least two vertices")
    n = graph.n
    edge_idx = np.array(sorted(graph.edges), dtype=int)
    rng = np.random.default_rng(seed)

    def project(f):
        f = f - f.mean()
        norm = np.linalg.norm(f)
        if norm == 0:
            return None
        return f / norm

    def objective(f):
        return float(np.max(np.abs(f[edge_idx[:, 0]] - f[edge_idx[:, 1]])))

    best_val = np.inf
    best_f = None
    for _ in range(restarts):
        f = project(rng.standard_normal(n))
        if f is None:
            continue
        val = objective(f)
        step = 0.5
        since_improved = 0
        for _ in range(max_iter):
            diffs = f[edge_idx[:, 0]] - f[edge_idx[:, 1]]
            worst = int(np.argmax(np.abs(diffs)))
            a, b = edge_idx[worst]
            grad = np.zeros(n)
            sign = 1.0 if diffs[worst] >= 0 else -1.0
            grad[a] = sign
            grad[b] = -sign
            cand = project(f - step * grad)
            if cand is None:
                break
            cand_val = objective(cand)
            if cand_val < val - tol * max(1.0, val):
                f, val = cand, cand_val
                since_improved = 0
            else:
                step *= 0.7
                since_improved += 1
                if step < 1e-12 or since_improved > 60:
                    break
        if val < best_val:
            best_val, best_f = val, f
    return best_val, best_f
