"""Generators for three graph families with unboundedly long spectral paths.

All three families hang k parallel copies of a cheap detour next to an
expensive shortcut; as k grows the grounded eigenfunction flattens
across the parallel part and greedy descent takes the long way around.
Each generator documents its vertex order so instances are byte-stable,
and the symmetric families come with their exact weighted quotients and
the k->infinity rescaled limits.

Families and parameters:
  weighted-cycle  G(ell, k): k parallel u-v paths of length ell plus
                  the edge uv.
  double-broom    H(ell, k, t): a broom block B(ell, k) plus T = floor(t*k)
                  pendants at each connector.
  block-path      J(ell, k, d): d broom blocks chained end to end with
                  k pendants at each outer connector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadParams, TZero, UnsupportedFamily
from .graph import WeightedGraph, build_graph
from .quotient import QuotientGraph

FAMILIES = ("weighted-cycle", "double-broom", "block-path")


def _as_fraction(t) -> Fraction:
    try:
        return Fraction(t)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise BadParams(f"cannot interpret t={t!r} as a rational") from exc


@dataclass(frozen=True)
class FamilyParams:
    """Validated parameter tuple for one family instance.

    k = None stands for the k->infinity limit in experiment rows.  t is
    kept as an exact rational so the pendant count T = floor(t*k) never
    suffers float flooring (t = 5/3 must give T = 5 at k = 3).
    """

    family: str
    ell: int
    k: int | None
    t: Fraction | None = None
    d: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParams(f"unknown family {self.family!r}")
        if not isinstance(self.ell, int) or self.ell < 1:
            raise BadParams("ell must be a positive integer")
        if self.k is not None and (not isinstance(self.k, int) or self.k < 1):
            raise BadParams("k must be a positive integer (or None for the limit)")
        if self.t is not None:
            object.__setattr__(self, "t", _as_fraction(self.t))
        if self.family == "weighted-cycle":
            if self.t is not None or self.d is not None:
                raise BadParams("weighted-cycle takes only ell and k")
        elif self.family == "double-broom":
            if self.d is not None:
                raise BadParams("double-broom takes no d")
            if self.ell <= 2 or (self.k is not None and self.k <= 2):
                raise BadParams("double-broom requires ell > 2 and k > 2")
            if self.t is None or self.t <= 0:
                raise BadParams("double-broom requires t > 0")
        else:
            if self.t is not None:
                raise BadParams("block-path takes no t")
            if self.ell % 2 != 0 or self.ell <= 5:
                raise BadParams("block-path requires even ell > 5")
            if self.k is not None and self.k <= 2:
                raise BadParams("block-path requires k > 2")
            if self.d is None or not isinstance(self.d, int) or self.d <= self.ell:
                raise BadParams("block-path requires integer d > ell")

    @property
    def T(self) -> int | None:
        """Pendant count floor(t*k), exact thanks to rational t."""
        if self.t is None or self.k is None:
            return None
        return math.floor(self.t * self.k)


def gen_weighted_cycle(ell: int, k: int) -> WeightedGraph:
    """k internally disjoint u-v paths of length ell plus the edge uv.

    Vertex order: u, then x_{r,i} grouped by rank r (r = 1..ell-1, path
    index i = 1..k inside each rank), then v.  n = k(ell-1) + 2.
    ell = 1 would collapse every path onto the edge uv, so it is
    rejected as degenerate.
    """
    FamilyParams("weighted-cycle", ell, k)
    if ell < 2:
        raise BadParams("weighted-cycle requires ell >= 2 (ell = 1 is degenerate)")
    n = k * (ell - 1) + 2
    u, v = 0, n - 1

    def x(r, i):
        return 1 + (r - 1) * k + (i - 1)

    labels = ["u"] + [
        f"x_{{{r},{i}}}" for r in range(1, ell) for i in range(1, k + 1)
    ] + ["v"]
    edges = [(u, v, 1.0)]
    for i in range(1, k + 1):
        edges.append((u, x(1, i), 1.0))
        for r in range(1, ell - 1):
            edges.append((x(r, i), x(r + 1, i), 1.0))
        edges.append((x(ell - 1, i), v, 1.0))
    return build_graph(n, edges, labels=labels)


def planar_coordinates(params: FamilyParams) -> np.ndarray:
    """Planar embedding witness: coordinates under which no two edges
    cross.

    Only the weighted-cycle family is planar for all parameters.  The
    k parallel paths become nested arcs above the segment uv: path i
    runs at height i*sin(pi*r/ell) over abscissa r/ell.
    """
    if params.family != "weighted-cycle":
        raise UnsupportedFamily(f"no planar embedding for {params.family}")
    ell, k = params.ell, params.k
    n = k * (ell - 1) + 2
    coords = np.zeros((n, 2))
    coords[n - 1] = (1.0, 0.0)
    for r in range(1, ell):
        for i in range(1, k + 1):
            coords[1 + (r - 1) * k + (i - 1)] = (r / ell, i * math.sin(math.pi * r / ell))
    return coords


def _broom_edges(x, y1, y2, y3, y4, u, v, ell, k):
    """Edges of one broom block given vertex index functions.

    x(r, i) addresses the x-paths (r = 1..ell), y1/y4 the per-path y
    vertices, y2/y3 the merged middle pair.  The k parallel middle
    edges collapse to the single edge y2-y3.
    """
    edges = []
    for i in range(1, k + 1):
        edges.append((u, x(1, i), 1.0))
        for r in range(1, ell):
            edges.append((x(r, i), x(r + 1, i), 1.0))
        edges.append((x(ell, i), v, 1.0))
        edges.append((u, y1(i), 1.0))
        edges.append((y1(i), y2, 1.0))
        edges.append((y3, y4(i), 1.0))
        edges.append((y4(i), v, 1.0))
    edges.append((y2, y3, 1.0))
    return edges


def gen_broom_block(ell: int, k: int) -> WeightedGraph:
    """The block B(ell, k): k x-paths of length ell+1 and k y-paths of
    length 5 between connectors u and v, with all middle y-edges merged
    into the single edge y_{2,*} y_{3,*}.

    Vertex order: u, x_{r,i} grouped by rank, y_{1,i}, y_{2,*}, y_{3,*},
    y_{4,i}, v.  n = 4 + k(ell+2).  The y-route gives d(u,v) = 5 while
    the x-route costs ell+1.
    """
    if ell <= 2 or k <= 2:
        raise BadParams("broom block requires ell > 2 and k > 2")
    n = 4 + k * (ell + 2)
    u = 0

    def x(r, i):
        return 1 + (r - 1) * k + (i - 1)

    def y1(i):
        return ell * k + i

    y2 = (ell + 1) * k + 1
    y3 = (ell + 1) * k + 2

    def y4(i):
        return (ell + 1) * k + 2 + i

    v = (ell + 2) * k + 3
    labels = (
        ["u"]
        + [f"x_{{{r},{i}}}" for r in range(1, ell + 1) for i in range(1, k + 1)]
        + [f"y_{{1,{i}}}" for i in range(1, k + 1)]
        + ["y_{2,*}", "y_{3,*}"]
        + [f"y_{{4,{i}}}" for i in range(1, k + 1)]
        + ["v"]
    )
    edges = _broom_edges(x, y1, y2, y3, y4, u, v, ell, k)
    return build_graph(n, edges, labels=labels)


def gen_double_broom(ell: int, k: int, t) -> WeightedGraph:
    """B(ell, k) plus T = floor(t*k) pendants at each connector.

    Vertex order: u, u_1..u_T, then the block interior in gen_broom_block
    order, then v, v_1..v_T.  n = 2T + 4 + k(ell+2) and every pendant
    pair u_i, v_j sits at hop distance 7 once ell > 4.
    """
    params = FamilyParams("double-broom", ell, k, t=t)
    T = params.T
    if T == 0:
        raise TZero(f"floor(t*k) = 0 for t={params.t}, k={k}")
    n = 2 * T + 4 + k * (ell + 2)
    u = 0

    def x(r, i):
        return T + 1 + (r - 1) * k + (i - 1)

    def y1(i):
        return T + ell * k + i

    y2 = T + (ell + 1) * k + 1
    y3 = T + (ell + 1) * k + 2

    def y4(i):
        return T + (ell + 1) * k + 2 + i

    v = T + (ell + 2) * k + 3
    labels = (
        ["u"]
        + [f"u_{i}" for i in range(1, T + 1)]
        + [f"x_{{{r},{i}}}" for r in range(1, ell + 1) for i in range(1, k + 1)]
        + [f"y_{{1,{i}}}" for i in range(1, k + 1)]
        + ["y_{2,*}", "y_{3,*}"]
        + [f"y_{{4,{i}}}" for i in range(1, k + 1)]
        + ["v"]
        + [f"v_{j}" for j in range(1, T + 1)]
    )
    edges = _broom_edges(x, y1, y2, y3, y4, u, v, ell, k)
    edges += [(u, u0, 1.0) for u0 in range(1, T + 1)]
    edges += [(v, v + j, 1.0) for j in range(1, T + 1)]
    return build_graph(n, edges, labels=labels)


def gen_block_path(ell: int, k: int, d: int) -> WeightedGraph:
    """d broom blocks chained by identifying consecutive connectors,
    plus k pendants x_1..x_k at the first connector and y_1..y_k at the
    last.

    Vertex order: u_1, the pendants x_1..x_k, then block 1 interior
    followed by its far connector, block 2 interior and connector, and
    so on, with pendants y_1..y_k last.  Connectors are labeled u_1..u_d
    and v_d; interior vertices carry an @m block suffix.
    """
    FamilyParams("block-path", ell, k, d=d)
    block_interior = k * (ell + 2) + 2
    n = 1 + 2 * k + d * (block_interior + 1)
    labels = ["u_1"] + [f"x_{i}" for i in range(1, k + 1)]
    edges = [(0, i, 1.0) for i in range(1, k + 1)]
    left = 0
    base = k + 1
    for m in range(1, d + 1):

        def x(r, i, base=base):
            return base + (r - 1) * k + (i - 1)

        def y1(i, base=base):
            return base + ell * k + i - 1

        y2 = base + (ell + 1) * k
        y3 = y2 + 1

        def y4(i, base=base):
            return base + (ell + 1) * k + 1 + i

        right = base + block_interior
        labels += (
            [f"x_{{{r},{i}}}@{m}" for r in range(1, ell + 1) for i in range(1, k + 1)]
            + [f"y_{{1,{i}}}@{m}" for i in range(1, k + 1)]
            + [f"y_{{2,*}}@{m}", f"y_{{3,*}}@{m}"]
            + [f"y_{{4,{i}}}@{m}" for i in range(1, k + 1)]
            + [f"u_{m + 1}" if m < d else f"v_{d}"]
        )
        edges += _broom_edges(x, y1, y2, y3, y4, left, right, ell, k)
        left = right
        base = right + 1
    labels += [f"y_{j}" for j in range(1, k + 1)]
    edges += [(left, base + j, 1.0) for j in range(0, k)]
    return build_graph(n, edges, labels=labels)


def generate(params: FamilyParams) -> WeightedGraph:
    """Dispatch a FamilyParams to its generator."""
    if params.k is None:
        raise BadParams("cannot generate an instance at k = None (the limit)")
    if params.family == "weighted-cycle":
        return gen_weighted_cycle(params.ell, params.k)
    if params.family == "double-broom":
        return gen_double_broom(params.ell, params.k, params.t)
    return gen_block_path(params.ell, params.k, params.d)


# weight polynomials: weight = sum of coeff * k^deg over (coeff, deg)
# monomials, with rational coefficients (t itself for pendant bundles)
def _poly_value(poly, k):
    return float(sum(Fraction(c) * k**deg for c, deg in poly))


def _poly_limit(poly):
    """Coefficient of the k->infinity limit after dividing by k."""
    return float(sum(Fraction(c) for c, deg in poly if deg == 1))


def analytic_quotient(params: FamilyParams, special: str = "u") -> QuotientGraph:
    """The explicit weighted quotient of a family instance grounded at
    the connector u, bypassing refinement.

    weighted-cycle: cells u, x_{1,*}..x_{ell-1,*}, v_*; every vertex
    weight is k except the two singletons, every edge weight is k except
    u v_*.  double-broom: cells u_*, u', x_1'..x_ell', y_1'..y_4', v_*,
    v'; edge weights k except y_2'y_3' = 1 and the pendant bundles
    u_*u' = v_*v' = T.  Pendant specials reduce to u: the quotient of
    the problem grounded at u_1 agrees off the pendant cell.

    The block-path family has no published closed-form quotient; use
    refine_partition on the generated instance instead.
    """
    if special != "u":
        raise UnsupportedFamily(f"analytic quotient is grounded at u, not {special!r}")
    if params.family == "weighted-cycle":
        return _weighted_cycle_quotient(params)
    if params.family == "double-broom":
        return _double_broom_quotient(params)
    raise UnsupportedFamily("no analytic quotient for block-path")


def _weighted_cycle_quotient(params: FamilyParams) -> QuotientGraph:
    ell, k = params.ell, params.k
    if k is None:
        raise BadParams("analytic quotient needs a finite k")
    if ell < 2:
        raise BadParams("weighted-cycle requires ell >= 2 (ell = 1 is degenerate)")
    m = ell + 1
    labels = ["u"] + [f"x_{{{r},*}}" for r in range(1, ell)] + ["v_*"]
    kk = float(k)
    edges = [(r, r + 1, kk) for r in range(0, ell)]
    edges.append((0, ell, 1.0))
    weights = [1.0] + [kk] * (ell - 1) + [1.0]
    qgraph = build_graph(m, edges, vertex_weights=weights, labels=labels)
    n = k * (ell - 1) + 2
    phi = np.empty(n, dtype=int)
    phi[0] = 0
    phi[n - 1] = ell
    for r in range(1, ell):
        phi[1 + (r - 1) * k : 1 + r * k] = r
    cells = [[0]] + [
        list(range(1 + (r - 1) * k, 1 + r * k)) for r in range(1, ell)
    ] + [[n - 1]]
    kpoly = ((1, 1),)
    one = ((1, 0),)
    weight_poly = {
        "vertex": [one] + [kpoly] * (ell - 1) + [one],
        "edge": {(r, r + 1): kpoly for r in range(0, ell)} | {(0, ell): one},
    }
    return QuotientGraph(
        graph=qgraph, phi=phi, special_cell=0, cells=cells, weight_poly=weight_poly
    )


def _double_broom_quotient(params: FamilyParams) -> QuotientGraph:
    ell, k, t = params.ell, params.k, params.t
    if k is None:
        raise BadParams("analytic quotient needs a finite k")
    T = params.T
    if T == 0:
        raise TZero(f"floor(t*k) = 0 for t={t}, k={k}")
    # cell indices: 0 u_*, 1 u', 1+r x_r', ell+2 y_1', ell+3 y_2',
    # ell+4 y_3', ell+5 y_4', ell+6 v_*, ell+7 v'
    m = ell + 8
    u_, up = 0, 1
    y1_, y2_, y3_, y4_ = ell + 2, ell + 3, ell + 4, ell + 5
    v_, vp = ell + 6, ell + 7
    labels = (
        ["u_*", "u'"]
        + [f"x_{r}'" for r in range(1, ell + 1)]
        + ["y_1'", "y_2'", "y_3'", "y_4'", "v_*", "v'"]
    )
    kk, TT = float(k), float(T)
    edges = [(u_, up, TT), (u_, 1 + 1, kk)]
    edges += [(1 + r, 2 + r, kk) for r in range(1, ell)]
    edges += [
        (1 + ell, v_, kk),
        (u_, y1_, kk),
        (y1_, y2_, kk),
        (y2_, y3_, 1.0),
        (y3_, y4_, kk),
        (y4_, v_, kk),
        (v_, vp, TT),
    ]
    weights = [1.0, TT] + [kk] * ell + [kk, 1.0, 1.0, kk, 1.0, TT]
    qgraph = build_graph(m, edges, vertex_weights=weights, labels=labels)
    n = 2 * T + 4 + k * (ell + 2)
    phi = np.empty(n, dtype=int)
    phi[0] = u_
    phi[1 : T + 1] = up
    for r in range(1, ell + 1):
        phi[T + 1 + (r - 1) * k : T + 1 + r * k] = 1 + r
    phi[T + ell * k + 1 : T + (ell + 1) * k + 1] = y1_
    phi[T + (ell + 1) * k + 1] = y2_
    phi[T + (ell + 1) * k + 2] = y3_
    phi[T + (ell + 1) * k + 3 : T + (ell + 2) * k + 3] = y4_
    phi[T + (ell + 2) * k + 3] = v_
    phi[T + (ell + 2) * k + 4 :] = vp
    cells = [sorted(np.flatnonzero(phi == c).tolist()) for c in range(m)]
    kpoly, one, tpoly = ((1, 1),), ((1, 0),), ((t, 1),)
    weight_poly = {
        "vertex": [one, tpoly] + [kpoly] * ell + [kpoly, one, one, kpoly, one, tpoly],
        "edge": {
            (u_, up): tpoly,
            (u_, 2): kpoly,
            **{(1 + r, 2 + r): kpoly for r in range(1, ell)},
            (1 + ell, v_): kpoly,
            (u_, y1_): kpoly,
            (y1_, y2_): kpoly,
            (y2_, y3_): one,
            (y3_, y4_): kpoly,
            (y4_, v_): kpoly,
            (v_, vp): tpoly,
        },
    }
    return QuotientGraph(
        graph=qgraph, phi=phi, special_cell=0, cells=cells, weight_poly=weight_poly
    )


def limit_graph(q: QuotientGraph) -> WeightedGraph:
    """Rescale a family quotient by 1/k and take k to infinity.

    Works symbolically on the stored (coefficient, degree) monomials:
    the limit of weight/k is the degree-1 coefficient.  Edges whose
    weight vanishes are deleted; vertices are kept even at weight zero.
    The special cell keeps weight 1 so the limit stays a valid grounded
    instance (its own weight never enters the grounded problem).
    """
    if q.weight_poly is None:
        raise BadParams("quotient carries no weight polynomials; not a family quotient")
    g = q.graph
    weights = [_poly_limit(p) for p in q.weight_poly["vertex"]]
    weights[q.special_cell] = 1.0
    edges = []
    for (a, b), poly in q.weight_poly["edge"].items():
        w = _poly_limit(poly)
        if w > 0:
            edges.append((a, b, w))
    labels = [g.label_of(c) for c in range(g.n)]
    return build_graph(g.n, edges, vertex_weights=weights, labels=labels)
