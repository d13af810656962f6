"""Reproduction harness: parameter sweeps, perturbation trials, the
random-pair probability curve, and the random-walk stretch-bound report.

The sweeps run on the analytic quotients, so the family width k enters
only through weights and each row costs a fixed small eigensolve.  Rows
are uniformly rescaled by 1/k (the grounded problem is invariant under
joint edge/vertex weight scaling), which keeps the finite rows on the
same numeric footing as the k->infinity limit row.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import eigen
from .errors import BadParams, OrphanEncountered, SpectralPathsError
from .families import FamilyParams, analytic_quotient, gen_block_path, limit_graph
from .graph import PathRecord, WeightedGraph, build_graph
from .paths import (
    PotentialFunction,
    grounded_eigenfunction,
    spectral_path,
    spectral_tree,
    symmetric_spectral_path,
)
from .quotient import quotient_graph

DEFAULT_MAX_K = 2**14

CSV_COLUMNS = [
    "family",
    "ell",
    "k",
    "t",
    "d",
    "spectral_len",
    "hop_dist",
    "stretch",
    "tie_flag",
    "eigen_gap",
    "wall_time",
]


@dataclass
class SweepRow:
    """One measured point of a family sweep.  k = None marks the
    k->infinity limit row."""

    params: FamilyParams
    spectral_len: int
    hop_dist: int
    stretch: Fraction
    tie_flag: bool
    eigen_gap: float
    wall_time: float

    def as_record(self) -> dict:
        p = self.params
        return {
            "family": p.family,
            "ell": p.ell,
            "k": "inf" if p.k is None else p.k,
            "t": "" if p.t is None else str(p.t),
            "d": "" if p.d is None else p.d,
            "spectral_len": self.spectral_len,
            "hop_dist": self.hop_dist,
            "stretch": str(self.stretch),
            "tie_flag": "true" if self.tie_flag else "false",
            "eigen_gap": f"{self.eigen_gap:.12g}",
            "wall_time": f"{self.wall_time:.6f}",
        }


@dataclass
class SweepResult:
    """All rows of a sweep plus the stabilization summary.

    stabilization_k is the smallest listed k whose row already shows the
    limit length and every larger listed k agrees; None when the sweep
    never stabilizes within the list.
    """

    family: str
    ell: int
    t: Fraction | None
    rows: list[SweepRow]
    limit_len: int
    stabilization_k: int | None
    tol: float
    notes: dict = field(default_factory=dict)


def doubling_schedule(start: int = 1, cap: int = DEFAULT_MAX_K) -> list[int]:
    """Powers of two from start up to the cap."""
    if start < 1 or cap < start:
        raise BadParams("need 1 <= start <= cap")
    out = []
    k = start
    while k <= cap:
        out.append(k)
        k *= 2
    return out


def _stabilization(rows: list[SweepRow], target: int) -> int | None:
    finite = [r for r in rows if r.params.k is not None]
    best = None
    for row in reversed(finite):
        if row.spectral_len == target:
            best = row.params.k
        else:
            break
    return best


def _component_path(
    graph: WeightedGraph, i: int, start: int, tol: float
) -> tuple[PathRecord, PotentialFunction]:
    """Spectral path computed on the component of the start vertex.

    When deleting i disconnects the graph, the grounded problem
    separates across the components of G - i; the path from start only
    sees the component containing it, so the eigenproblem is solved
    there (keeping i).  On an already connected G - i this is the plain
    pipeline.
    """
    comp = graph.component_of(start, skip=i)
    if len(comp) == graph.n - 1:
        f = grounded_eigenfunction(graph, i, tol=tol)
        return spectral_path(graph, i, start, f=f), f
    sub, keep = graph.induced_subgraph(set(comp) | {i})
    pos = {int(v): idx for idx, v in enumerate(keep)}
    f = grounded_eigenfunction(sub, pos[i], tol=tol)
    rec = spectral_path(sub, pos[i], pos[start], f=f)
    back = [int(keep[v]) for v in rec.vertices]
    return (
        PathRecord(
            vertices=back,
            length=rec.length,
            endpoint_distance=rec.endpoint_distance,
            stretch=rec.stretch,
            had_tie=rec.had_tie,
            tie_vertices=[int(keep[v]) for v in rec.tie_vertices],
        ),
        f,
    )


def sweep_weighted_cycle(
    ell: int, k_list: list[int] | None = None, tol: float = eigen.DEFAULT_TOL
) -> SweepResult:
    """Spectral path length from x_{ell-1,*} to u across widths k.

    Each row solves the (ell+1)-cell quotient; the final row is the
    rescaled limit graph, where the only remaining route is the full
    path of length ell-1.  hop_dist is the finite-instance value 2
    (through v) for every row, including the limit row, so stretch
    always compares against the true shortcut.
    """
    if ell < 2:
        raise BadParams("weighted-cycle sweep requires ell >= 2")
    if k_list is None:
        k_list = doubling_schedule(1, DEFAULT_MAX_K)
    start = ell - 1
    hop = 2 if ell >= 3 else 1
    rows = []
    for k in k_list:
        params = FamilyParams("weighted-cycle", ell, k)
        t0 = time.perf_counter()
        q = analytic_quotient(params)
        scaled = q.graph.reweighted(1.0 / k, 1.0 / k)
        f = grounded_eigenfunction(scaled, 0, tol=tol)
        rec = spectral_path(scaled, 0, start, f=f)
        rows.append(
            SweepRow(
                params=params,
                spectral_len=rec.length,
                hop_dist=hop,
                stretch=Fraction(rec.length, hop),
                tie_flag=rec.had_tie,
                eigen_gap=f.gap,
                wall_time=time.perf_counter() - t0,
            )
        )
    t0 = time.perf_counter()
    limit = limit_graph(analytic_quotient(FamilyParams("weighted-cycle", ell, k_list[0])))
    f = grounded_eigenfunction(limit, 0, tol=tol)
    rec = spectral_path(limit, 0, start, f=f)
    rows.append(
        SweepRow(
            params=FamilyParams("weighted-cycle", ell, None),
            spectral_len=rec.length,
            hop_dist=hop,
            stretch=Fraction(rec.length, hop),
            tie_flag=rec.had_tie,
            eigen_gap=f.gap,
            wall_time=time.perf_counter() - t0,
        )
    )
    limit_len = rec.length
    return SweepResult(
        family="weighted-cycle",
        ell=ell,
        t=None,
        rows=rows,
        limit_len=limit_len,
        stabilization_k=_stabilization(rows, limit_len),
        tol=tol,
    )


def sweep_double_broom(
    ell: int, t, k_list: list[int] | None = None, tol: float = eigen.DEFAULT_TOL
) -> SweepResult:
    """Symmetric-pendant sweep: spectral path v_1 -> u_1 across widths.

    Rows solve the (ell+8)-cell quotient grounded at u_* restricted to
    the component of v' (the pendant cell u' separates), then append the
    final pendant edge u u_1, so spectral_len is the full-graph path
    length from v_1 to u_1.  hop_dist is the pendant-pair distance 7.
    The limit row measures the same object on the rescaled limit tree;
    its raw quotient path (without the appendage) lands in
    notes["limit_quotient_len"].
    """
    if ell <= 6:
        raise BadParams("double-broom sweep requires ell > 6")
    if k_list is None:
        k_list = doubling_schedule(4, DEFAULT_MAX_K)
    hop = 7
    rows = []
    vprime = ell + 7
    for k in k_list:
        params = FamilyParams("double-broom", ell, k, t=t)
        t0 = time.perf_counter()
        q = analytic_quotient(params)
        scaled = q.graph.reweighted(1.0 / k, 1.0 / k)
        rec, f = _component_path(scaled, 0, vprime, tol)
        rows.append(
            SweepRow(
                params=params,
                spectral_len=rec.length + 1,
                hop_dist=hop,
                stretch=Fraction(rec.length + 1, hop),
                tie_flag=rec.had_tie,
                eigen_gap=f.gap,
                wall_time=time.perf_counter() - t0,
            )
        )
    t0 = time.perf_counter()
    limit = limit_graph(analytic_quotient(FamilyParams("double-broom", ell, k_list[0], t=t)))
    rec, f = _component_path(limit, 0, vprime, tol)
    rows.append(
        SweepRow(
            params=FamilyParams("double-broom", ell, None, t=t),
            spectral_len=rec.length + 1,
            hop_dist=hop,
            stretch=Fraction(rec.length + 1, hop),
            tie_flag=rec.had_tie,
            eigen_gap=f.gap,
            wall_time=time.perf_counter() - t0,
        )
    )
    limit_len = rec.length + 1
    return SweepResult(
        family="double-broom",
        ell=ell,
        t=Fraction(t),
        rows=rows,
        limit_len=limit_len,
        stabilization_k=_stabilization(rows, limit_len),
        tol=tol,
        notes={
            "limit_quotient_len": rec.length,
            "limit_path_cells": rec.vertices,
        },
    )


@dataclass
class BlockPathReport:
    """Measured diameter and symmetric spectral path of a block path,
    next to the closed-form claims 5d + ell - 4 and (ell+1)d + 2."""

    params: FamilyParams
    n: int
    diameter: int
    diameter_formula: int
    diameter_match: bool
    spectral_len: int
    claimed_len: int
    length_match: bool
    endpoint_distance: int
    stretch: Fraction
    stretch_vs_diameter: Fraction
    claimed_stretch_vs_diameter: Fraction
    tie_flag: bool
    method: str
    wall_time: float
    path_labels: list[str]


def block_path_report(
    ell: int,
    k: int,
    d: int,
    tol: float = eigen.DEFAULT_TOL,
    method: str = "auto",
) -> BlockPathReport:
    """Measures the block-path family at one parameter point: diameter,
    symmetric spectral path between the outer pendants x_1 and y_1, and
    ratios against the closed forms.

    method picks how the eigenfunctions are solved: "full" on the whole
    graph, "quotient" on the symmetry reduction (the cell count does not
    grow with k), or "auto" to switch at a size cutoff.  Both give the
    same path length; the reduction cannot see the ulp-level ties between
    symmetric strands, so tie_flag is method dependent.
    """
    params = FamilyParams("block-path", ell, k, d=d)
    if method not in ("auto", "full", "quotient"):
        raise BadParams(f"unknown method {method!r}")
    t0 = time.perf_counter()
    g = gen_block_path(ell, k, d)
    diam = g.diameter()
    x1, y1 = g.index_of("x_1"), g.index_of("y_1")
    if method == "auto":
        method = "full" if g.n <= 600 else "quotient"
    if method == "full":
        tree_x = spectral_tree(g, x1, grounded_eigenfunction(g, x1, tol=tol, compute_gap=False))
        tree_y = spectral_tree(g, y1, grounded_eigenfunction(g, y1, tol=tol, compute_gap=False))
        rec = symmetric_spectral_path(g, x1, y1, tree_i=tree_x, tree_j=tree_y)
        labels = rec.as_labels(g)
    else:
        qx = quotient_graph(g, x1)
        qy = quotient_graph(g, y1)
        fx = grounded_eigenfunction(qx.graph, qx.special_cell, tol=tol, compute_gap=False)
        fy = grounded_eigenfunction(qy.graph, qy.special_cell, tol=tol, compute_gap=False)
        rec_j = spectral_path(qx.graph, qx.special_cell, int(qx.phi[y1]), f=fx)
        rec_i = spectral_path(qy.graph, qy.special_cell, int(qy.phi[x1]), f=fy)
        rec, q = (rec_j, qx) if rec_j.length <= rec_i.length else (rec_i, qy)
        labels = rec.as_labels(q.graph)
    wall = time.perf_counter() - t0
    claimed = (ell + 1) * d + 2
    formula = 5 * d + ell - 4
    return BlockPathReport(
        params=params,
        n=g.n,
        diameter=diam,
        diameter_formula=formula,
        diameter_match=diam == formula,
        spectral_len=rec.length,
        claimed_len=claimed,
        length_match=rec.length == claimed,
        endpoint_distance=rec.endpoint_distance,
        stretch=rec.stretch,
        stretch_vs_diameter=Fraction(rec.length, diam),
        claimed_stretch_vs_diameter=Fraction(claimed, diam),
        tie_flag=rec.had_tie,
        method=method,
        wall_time=wall,
        path_labels=labels,
    )


@dataclass
class PerturbationStat:
    """Outcome counts for one perturbation magnitude."""

    epsilon: float
    trials: int
    valid: int
    invalid: int
    preserved: int
    contains_forced: int
    orphaned: int

    @property
    def fully_preserved(self) -> bool:
        return self.invalid == 0 and self.preserved == self.trials


@dataclass
class PerturbationReport:
    """Stability of one spectral path under random weight noise."""

    special: int
    start: int
    forced: int
    baseline: PathRecord
    seed: int
    stats: list[PerturbationStat]
    best_epsilon: float | None


def perturbation_trial(
    graph: WeightedGraph,
    i: int,
    path_pair: tuple[int, int],
    epsilon_list: list[float],
    trials: int = 200,
    seed: int = 0,
    tol: float = eigen.DEFAULT_TOL,
) -> PerturbationReport:
    """Re-run the spectral path under random weight perturbations.

    path_pair = (start, forced): the baseline path runs from start to i
    and must pass through forced.  Each trial jitters every edge and
    vertex weight by an independent uniform draw in [-eps, eps], clamped
    at zero.  A trial is invalid (skipped, not failed) when the clamp
    deletes an edge at a vertex of the baseline path, when positive
    connectivity of G or G - i breaks, or when the start vertex loses
    all its weight; the guarantees assume none of that happens.
    """
    start, forced = path_pair
    f0 = grounded_eigenfunction(graph, i, tol=tol, compute_gap=False)
    baseline = spectral_path(graph, i, start, f=f0)
    if forced not in baseline.vertices:
        raise BadParams(
            f"forced vertex {forced} is not on the baseline path {baseline.vertices}"
        )
    protected = set(baseline.vertices)
    edge_keys = sorted(graph.edges)
    base_w = np.array([graph.edges[e] for e in edge_keys])
    base_v = graph.vertex_weight.copy()
    rng = np.random.default_rng(seed)
    stats = []
    for eps in epsilon_list:
        valid = invalid = preserved = with_forced = orphaned = 0
        for _ in range(trials):
            ew = np.maximum(base_w + rng.uniform(-eps, eps, base_w.size), 0.0)
            vw = np.maximum(base_v + rng.uniform(-eps, eps, base_v.size), 0.0)
            touched_protected = any(
                w == 0.0 and (a in protected or b in protected)
                for (a, b), w in zip(edge_keys, ew)
            )
            if touched_protected or vw[start] == 0.0:
                invalid += 1
                continue
            try:
                pg = build_graph(
                    graph.n,
                    [(a, b, w) for (a, b), w in zip(edge_keys, ew)],
                    vertex_weights=vw,
                    labels=list(graph.labels) if graph.labels else None,
                )
                pg.require_positively_connected()
                pg.require_positively_connected(skip=i)
            except SpectralPathsError:
                invalid += 1
                continue
            valid += 1
            try:
                rec = spectral_path(
                    pg, i, start, f=grounded_eigenfunction(pg, i, tol=tol, compute_gap=False)
                )
            except OrphanEncountered:
                orphaned += 1
                continue
            if rec.vertices == baseline.vertices:
                preserved += 1
            if forced in rec.vertices:
                with_forced += 1
        stats.append(
            PerturbationStat(
                epsilon=eps,
                trials=trials,
                valid=valid,
                invalid=invalid,
                preserved=preserved,
                contains_forced=with_forced,
                orphaned=orphaned,
            )
        )
    best = None
    for st in stats:
        if st.fully_preserved and (best is None or st.epsilon > best):
            best = st.epsilon
    return PerturbationReport(
        special=i,
        start=start,
        forced=forced,
        baseline=baseline,
        seed=seed,
        stats=stats,
        best_epsilon=best,
    )


def random_pair_probability(ell: int, k: int, t) -> Fraction:
    """Chance that two uniformly random distinct-ordered vertices of the
    double broom are a pendant pair (u_i, v_j): 2T^2/(2T+4+k(ell+2))^2.

    Exact rational; T = floor(t*k) computed without float flooring.
    Grows monotonically to 1/2 as t does.
    """
    params = FamilyParams("double-broom", ell, k, t=t)
    T = params.T
    n = 2 * T + 4 + k * (ell + 2)
    return Fraction(2 * T * T, n * n)


@dataclass
class StretchBoundReport:
    """Per-vertex audit of the random-walk Fiedler descent bound.

    f_D is the Fiedler right-eigenvector of D^{-1}L (unit 2-norm, sign
    fixed so its largest-magnitude entry is positive), lam its
    eigenvalue, L_D the signed drop to the lowest neighbor.  violations
    lists vertices with f_D >= 0 where L_D < lam * f_D beyond rounding
    (expected empty: the mean of neighbors is (1 - lam) f_D, and the min
    cannot exceed the mean).
    """

    f_D: np.ndarray
    lam: float
    L_D: np.ndarray
    Delta: int
    alpha: float
    violations: list[int]
    min_L_D: float
    diameter: int


def rw_stretch_report(graph: WeightedGraph) -> StretchBoundReport:
    """Fiedler-vector stretch bound for the random-walk Laplacian.

    Uses the unweighted convention: every edge counts 1, D is the
    degree-count matrix.  The eigenproblem is solved through the
    symmetric similarity D^{-1/2} L D^{-1/2}.
    """
    n = graph.n
    if n < 2:
        raise BadParams("stretch bound needs at least two vertices")
    diam = graph.diameter()
    deg = np.array([len(graph.neighbors(u)) for u in range(n)], dtype=float)
    S = np.zeros((n, n))
    for (a, b) in graph.edges:
        S[a, b] = S[b, a] = -1.0 / math.sqrt(deg[a] * deg[b])
    np.fill_diagonal(S, 1.0)
    values, vectors = eigen.full_eigen(S)
    lam = float(values[-2])
    z = vectors[:, -2]
    f = z / np.sqrt(deg)
    f = f / np.linalg.norm(f)
    if f[int(np.argmax(np.abs(f)))] < 0:
        f = -f
    L_D = np.empty(n)
    for u in range(n):
        m = min(f[v] for v, _ in graph.neighbors(u))
        L_D[u] = (f[u] - m) if f[u] >= 0 else (-f[u] + m)
    violations = [
        u
        for u in range(n)
        if f[u] >= 0 and L_D[u] < lam * f[u] - 1e-12 * max(1.0, abs(lam * f[u]))
    ]
    return StretchBoundReport(
        f_D=f,
        lam=lam,
        L_D=L_D,
        Delta=int(deg.max()),
        alpha=float(np.abs(f).max()),
        violations=violations,
        min_L_D=float(L_D.min()),
        diameter=diam,
    )


# delimited output ---------------------------------------------------------


def sweep_csv(result: SweepResult) -> str:
    """Sweep rows in the fixed documented column order."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in result.rows:
        writer.writerow(row.as_record())
    return buf.getvalue()


def sweep_json(result: SweepResult) -> str:
    """Sweep summary: parameters, tolerance, stabilization, all rows."""
    payload = {
        "family": result.family,
        "ell": result.ell,
        "t": None if result.t is None else str(result.t),
        "tol": result.tol,
        "limit_len": result.limit_len,
        "stabilization_k": result.stabilization_k,
        "notes": result.notes,
        "rows": [row.as_record() for row in result.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def block_report_json(report: BlockPathReport) -> str:
    p = report.params
    payload = {
        "family": p.family,
        "ell": p.ell,
        "k": p.k,
        "d": p.d,
        "n": report.n,
        "diameter": report.diameter,
        "diameter_formula": report.diameter_formula,
        "diameter_match": report.diameter_match,
        "spectral_len": report.spectral_len,
        "claimed_len": report.claimed_len,
        "length_match": report.length_match,
        "endpoint_distance": report.endpoint_distance,
        "stretch": str(report.stretch),
        "stretch_vs_diameter": str(report.stretch_vs_diameter),
        "stretch_vs_diameter_float": float(report.stretch_vs_diameter),
        "claimed_stretch_vs_diameter": str(report.claimed_stretch_vs_diameter),
        "claimed_stretch_vs_diameter_float": float(report.claimed_stretch_vs_diameter),
        "tie_flag": report.tie_flag,
        "method": report.method,
        "wall_time": report.wall_time,
        "path": report.path_labels,
    }
    return json.dumps(payload, indent=2) + "\n"


def perturbation_json(report: PerturbationReport, graph: WeightedGraph) -> str:
    payload = {
        "special": graph.label_of(report.special),
        "start": graph.label_of(report.start),
        "forced": graph.label_of(report.forced),
        "baseline_path": report.baseline.as_labels(graph),
        "seed": report.seed,
        "best_epsilon": report.best_epsilon,
        "stats": [
            {
                "epsilon": st.epsilon,
                "trials": st.trials,
                "valid": st.valid,
                "invalid": st.invalid,
                "preserved": st.preserved,
                "contains_forced": st.contains_forced,
                "orphaned": st.orphaned,
            }
            for st in report.stats
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def rw_report_json(report: StretchBoundReport, graph: WeightedGraph) -> str:
    payload = {
        "n": graph.n,
        "lambda": report.lam,
        "Delta": report.Delta,
        "alpha": report.alpha,
        "min_L_D": report.min_L_D,
        "diameter": report.diameter,
        "violations": [graph.label_of(u) for u in report.violations],
        "f_D": [float(x) for x in report.f_D],
        "L_D": [float(x) for x in report.L_D],
    }
    return json.dumps(payload, indent=2) + "\n"
