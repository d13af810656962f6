"""Shared corpora for the test suite.

Everything random is seeded; the generators below are the only source
of random graphs so failures reproduce exactly.
"""

from __future__ import annotations

import re

import numpy as np
import pytest

from spectralpaths.graph import WeightedGraph, build_graph


def random_connected_graph(rng: np.random.Generator, n: int) -> WeightedGraph:
    """Unweighted connected graph: random spanning tree plus extra edges."""
    edges = set()
    order = rng.permutation(n)
    for a, b in zip(order, order[1:]):
        edges.add((min(int(a), int(b)), max(int(a), int(b))))
    extra = rng.integers(0, max(1, n))
    for _ in range(int(extra)):
        a, b = rng.integers(0, n, size=2)
        if a != b:
            edges.add((min(int(a), int(b)), max(int(a), int(b))))
    return build_graph(n, [(a, b, 1.0) for a, b in edges])


def random_weighted_graph(
    rng: np.random.Generator, n: int, zero_weight_fraction: float = 0.2
) -> tuple[WeightedGraph, int]:
    """Positively connected weighted graph plus a ground vertex.

    Edge weights are positive; a fraction of the vertex weights is
    zeroed (never all of them).  The ground is chosen so the graph
    minus it stays connected.
    """
    base = random_connected_graph(rng, n)
    edges = [(a, b, float(rng.uniform(0.2, 3.0))) for (a, b) in sorted(base.edges)]
    vw = rng.uniform(0.5, 2.0, size=n)
    mask = rng.random(n) < zero_weight_fraction
    if mask.all():
        mask[int(rng.integers(0, n))] = False
    vw[mask] = 0.0
    g = build_graph(n, edges, vertex_weights=vw)
    grounds = [i for i in range(n) if g.is_connected(skip=i) and vw[i] > 0]
    if not grounds:
        return random_weighted_graph(rng, n, zero_weight_fraction / 2)
    return g, grounds[int(rng.integers(0, len(grounds)))]


def plant_twins(rng: np.random.Generator, n: int, copies: int = 2) -> tuple[WeightedGraph, int, list[int]]:
    """Graph with one vertex cloned into an independent set of twins.

    Returns the graph, a ground vertex outside the twin set, and the
    twin vertices.  All twins share neighbors and weights, so any
    refinement grounded outside them must keep them in one cell.  Draws
    whose refinement would put an edge inside a cell are rejected, so
    the result always admits a quotient.
    """
    from spectralpaths.quotient import refine_partition

    base = random_connected_graph(rng, n)
    candidates = [u for u in range(n) if base.degree(u) >= 2]
    star = int(candidates[int(rng.integers(0, len(candidates)))])
    nbrs = [v for v, _ in base.neighbors(star)]
    edges = [(a, b, 1.0) for (a, b) in sorted(base.edges)]
    twins = [star]
    total = n
    for _ in range(copies - 1):
        clone = total
        total += 1
        edges.extend((min(clone, v), max(clone, v), 1.0) for v in nbrs)
        twins.append(clone)
    g = build_graph(total, edges)
    grounds = [
        u
        for u in range(total)
        if u not in twins and u not in nbrs and g.is_connected(skip=u)
    ]
    if not grounds:
        return plant_twins(rng, n, copies)
    ground = grounds[int(rng.integers(0, len(grounds)))]
    cell_of = refine_partition(g, ground).cell_of
    if any(cell_of[a] == cell_of[b] for (a, b) in g.edges):
        return plant_twins(rng, n, copies)
    return g, ground, twins


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260813)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    outcomes: dict[int, str] = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", rep.nodeid)
            if m:
                num = int(m.group(1))
                verdict = "PASS" if status == "passed" else "FAIL"
                if outcomes.get(num) != "FAIL":
                    outcomes[num] = verdict
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(outcomes):
        terminalreporter.write_line(f"ACCEPTANCE {num}: {outcomes[num]}")
