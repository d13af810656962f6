"""Family generators: sizes, distances, embeddings, quotients, limits."""

import itertools
import math
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from spectralpaths.errors import BadParams, TZero, UnsupportedFamily
from spectralpaths.families import (
    FamilyParams,
    analytic_quotient,
    gen_block_path,
    gen_broom_block,
    gen_double_broom,
    gen_weighted_cycle,
    generate,
    limit_graph,
    planar_coordinates,
)
from spectralpaths.quotient import quotient_graph


def to_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges.keys())
    return G


# ---------------------------------------------------------------- params


def test_params_rejects_unknown_family():
    with pytest.raises(BadParams, match="unknown family"):
        FamilyParams("moebius", 5, 3)


@pytest.mark.parametrize("ell", [0, -1, 2.5])
def test_params_rejects_bad_ell(ell):
    with pytest.raises(BadParams, match="ell"):
        FamilyParams("weighted-cycle", ell, 3)


def test_params_weighted_cycle_rejects_extras():
    with pytest.raises(BadParams, match="only ell and k"):
        FamilyParams("weighted-cycle", 5, 3, t=1)
    with pytest.raises(BadParams, match="only ell and k"):
        FamilyParams("weighted-cycle", 5, 3, d=7)


def test_params_double_broom_domain():
    with pytest.raises(BadParams, match="ell > 2 and k > 2"):
        FamilyParams("double-broom", 2, 3, t=1)
    with pytest.raises(BadParams, match="ell > 2 and k > 2"):
        FamilyParams("double-broom", 7, 2, t=1)
    with pytest.raises(BadParams, match="t > 0"):
        FamilyParams("double-broom", 7, 3)
    with pytest.raises(BadParams, match="t > 0"):
        FamilyParams("double-broom", 7, 3, t=0)
    with pytest.raises(BadParams, match="no d"):
        FamilyParams("double-broom", 7, 3, t=1, d=8)


def test_params_block_path_domain():
    with pytest.raises(BadParams, match="even ell > 5"):
        FamilyParams("block-path", 7, 3, d=9)
    with pytest.raises(BadParams, match="even ell > 5"):
        FamilyParams("block-path", 4, 3, d=9)
    with pytest.raises(BadParams, match="k > 2"):
        FamilyParams("block-path", 6, 2, d=9)
    with pytest.raises(BadParams, match="d > ell"):
        FamilyParams("block-path", 6, 3, d=6)
    with pytest.raises(BadParams, match="d > ell"):
        FamilyParams("block-path", 6, 3)
    with pytest.raises(BadParams, match="no t"):
        FamilyParams("block-path", 6, 3, t=1, d=9)


def test_pendant_count_is_exact_rational():
    # floor(t*k) computed on the exact rational, not on a float
    assert FamilyParams("double-broom", 7, 3, t=Fraction(5, 3)).T == 5
    assert FamilyParams("double-broom", 7, 3, t="5/3").T == 5
    assert FamilyParams("double-broom", 7, 3, t=Fraction(1, 3)).T == 1
    # the float detour floors to 0 because 1/3 rounds down in binary
    binary_third = Fraction(1 / 3)
    assert math.floor(binary_third * 3) == 0
    with pytest.raises(TZero):
        gen_double_broom(7, 3, 1 / 3)


def test_pendant_count_none_at_limit():
    assert FamilyParams("double-broom", 7, None, t=2).T is None
    assert FamilyParams("weighted-cycle", 5, 3).T is None


def test_generate_needs_finite_k():
    with pytest.raises(BadParams, match="k = None"):
        generate(FamilyParams("weighted-cycle", 5, None))


# ---------------------------------------------------- weighted cycle G


@pytest.mark.parametrize("ell,k", [(2, 1), (5, 3), (8, 2), (12, 6)])
def test_weighted_cycle_shape(ell, k):
    g = gen_weighted_cycle(ell, k)
    assert g.n == k * (ell - 1) + 2
    u, v = 0, g.n - 1
    assert g.label_of(u) == "u" and g.label_of(v) == "v"
    assert g.degree(u) == k + 1 and g.degree(v) == k + 1
    assert g.hop_distance(u, v) == 1
    # strand i walks u, x_{1,i}, ..., x_{ell-1,i}, v in ell hops
    x11 = g.index_of("x_{1,1}")
    assert g.edge_weight(u, x11) == 1.0
    assert len(g.edges) == 1 + ell * k
    assert g.is_connected()


def test_weighted_cycle_rejects_degenerate_ell():
    with pytest.raises(BadParams, match="degenerate"):
        gen_weighted_cycle(1, 3)


@pytest.mark.parametrize("ell,k", [(3, 2), (5, 3), (6, 5)])
def test_weighted_cycle_is_planar(ell, k):
    g = gen_weighted_cycle(ell, k)
    ok, _ = nx.check_planarity(to_networkx(g))
    assert ok


def test_planar_coordinates_witness():
    params = FamilyParams("weighted-cycle", 5, 3)
    g = gen_weighted_cycle(5, 3)
    coords = planar_coordinates(params)
    assert coords.shape == (g.n, 2)
    seen = {tuple(row) for row in coords}
    assert len(seen) == g.n
    # strands are nested arcs: height grows with the strand index
    for r in range(1, 5):
        heights = [coords[g.index_of(f"x_{{{r},{i}}}")][1] for i in (1, 2, 3)]
        assert heights[0] < heights[1] < heights[2]
    assert tuple(coords[0]) == (0.0, 0.0)
    assert tuple(coords[g.n - 1]) == (1.0, 0.0)


def test_planar_coordinates_only_for_cycle():
    with pytest.raises(UnsupportedFamily):
        planar_coordinates(FamilyParams("double-broom", 7, 3, t=2))


# ------------------------------------------------------- broom block B


@pytest.mark.parametrize("ell,k", [(3, 3), (6, 3), (8, 4)])
def test_broom_block_shape(ell, k):
    g = gen_broom_block(ell, k)
    assert g.n == 4 + k * (ell + 2)
    u, v = 0, g.n - 1
    assert g.label_of(u) == "u" and g.label_of(v) == "v"
    # the merged y middle gives a 5 hop shortcut, each x path costs ell+1
    assert g.hop_distance(u, v) == min(5, ell + 1)
    assert g.hop_distance(u, g.index_of("y_{2,*}")) == 2
    x_first = g.index_of("x_{1,1}")
    x_last = g.index_of(f"x_{{{ell},1}}")
    assert g.hop_distance(u, x_first) == 1
    assert g.hop_distance(x_first, x_last) == ell - 1
    assert g.degree(u) == 2 * k
    assert g.degree(g.index_of("y_{2,*}")) == k + 1
    assert g.is_connected()


def test_broom_block_rejects_small_params():
    with pytest.raises(BadParams):
        gen_broom_block(2, 3)
    with pytest.raises(BadParams):
        gen_broom_block(5, 2)


# ------------------------------------------------------ double broom H


@pytest.mark.parametrize("ell,k,t,T", [(7, 3, 2, 6), (5, 4, Fraction(1, 2), 2)])
def test_double_broom_shape(ell, k, t, T):
    g = gen_double_broom(ell, k, t)
    assert g.n == 2 * T + 4 + k * (ell + 2)
    u = 0
    v = g.index_of("v")
    assert g.hop_distance(u, v) == 5
    # every pendant pair straddles the shortcut: 1 + 5 + 1 hops
    for i, j in [(1, 1), (1, T), (T, 1)]:
        ui = g.index_of(f"u_{i}")
        vj = g.index_of(f"v_{j}")
        assert g.hop_distance(ui, vj) == 7
        assert g.degree(ui) == 1 and g.degree(vj) == 1
    assert g.degree(u) == 2 * k + T
    assert g.is_connected()


def test_double_broom_t_zero():
    with pytest.raises(TZero, match="floor"):
        gen_double_broom(7, 3, Fraction(1, 4))


# -------------------------------------------------------- block path J


@pytest.mark.parametrize("ell,k,d", [(6, 3, 7), (8, 3, 9)])
def test_block_path_shape(ell, k, d):
    g = gen_block_path(ell, k, d)
    block = k * (ell + 2) + 2
    assert g.n == 1 + 2 * k + d * (block + 1)
    x1 = g.index_of("x_1")
    y1 = g.index_of("y_1")
    # pendant to pendant: 1 hop on, 5 per block, 1 hop off
    assert g.hop_distance(x1, y1) == 5 * d + 2
    assert g.hop_distance(0, g.index_of(f"v_{d}")) == 5 * d
    assert g.label_of(0) == "u_1"
    assert g.degree(x1) == 1 and g.degree(y1) == 1
    assert g.is_connected()


def test_block_path_connector_labels():
    g = gen_block_path(6, 3, 7)
    for m in range(2, 8):
        c = g.index_of(f"u_{m}")
        # interior connectors join two blocks: 2k x ends, 2k y ends
        assert g.degree(c) == 4 * 3
    assert g.degree(g.index_of("v_7")) == 2 * 3 + 3
    assert g.index_of("y_{2,*}@3") is not None
    assert g.index_of("x_{6,2}@7") is not None


def test_block_path_diameter_and_witness():
    g = gen_block_path(8, 3, 9)
    assert g.diameter() == 49
    a = g.index_of("x_{2,1}@1")
    b = g.index_of("x_{7,1}@9")
    assert g.hop_distance(a, b) == 49


def test_block_path_junction_removal_components():
    ell, k, d = 6, 3, 7
    g = gen_block_path(ell, k, d)
    G = to_networkx(g)
    junctions = [g.index_of(f"u_{m}") for m in range(1, d + 1)]
    junctions.append(g.index_of(f"v_{d}"))
    G.remove_nodes_from(junctions)
    # per block: k cut x paths plus one y tree; plus 2k isolated pendants
    assert nx.number_connected_components(G) == d * (k + 1) + 2 * k


# ------------------------------------------------- analytic quotients


def test_analytic_quotient_grounding_restriction():
    with pytest.raises(UnsupportedFamily, match="grounded at u"):
        analytic_quotient(FamilyParams("weighted-cycle", 5, 3), special="v")
    with pytest.raises(UnsupportedFamily, match="block-path"):
        analytic_quotient(FamilyParams("block-path", 6, 3, d=7))


def test_weight_polynomials_match_quotient_weights():
    cases = [
        FamilyParams("weighted-cycle", 5, 4),
        FamilyParams("double-broom", 7, 3, t=Fraction(5, 3)),
    ]
    from spectralpaths.families import _poly_value

    for params in cases:
        q = analytic_quotient(params)
        k = params.k
        for c in range(q.graph.n):
            want = _poly_value(q.weight_poly["vertex"][c], k)
            got = float(q.graph.vertex_weight[c])
            if params.family == "double-broom" and want != got:
                # pendant bundles carry floor(t*k), the monomial t*k
                assert math.floor(Fraction(want)) == got
            else:
                assert want == got
        for (a, b), poly in q.weight_poly["edge"].items():
            want = _poly_value(poly, k)
            got = q.graph.edge_weight(a, b)
            if want != got:
                assert math.floor(Fraction(want)) == got


def test_analytic_quotient_matches_refinement():
    params = FamilyParams("double-broom", 5, 3, t=1)
    q_exact = analytic_quotient(params)
    q_ref = quotient_graph(generate(params), 0)
    assert q_exact.cells == q_ref.cells
    np.testing.assert_allclose(
        q_exact.graph.vertex_weight, q_ref.graph.vertex_weight
    )
    assert q_exact.graph.edges == q_ref.graph.edges


# ----------------------------------------------------------- limits


def test_weighted_cycle_limit_is_unit_path():
    q = analytic_quotient(FamilyParams("weighted-cycle", 5, 8))
    lim = limit_graph(q)
    assert lim.n == 6
    # rescaled shortcut weight 1/k vanishes, leaving the bare path
    assert (0, 5) not in lim.edges
    assert sorted(lim.edges) == [(r, r + 1) for r in range(5)]
    assert all(w == 1.0 for w in lim.edges.values())
    assert lim.vertex_weight.tolist() == [1.0, 1.0, 1.0, 1.0, 1.0, 0.0]
    assert lim.label_of(5) == "v_*"


def test_double_broom_limit_is_tree():
    q = analytic_quotient(FamilyParams("double-broom", 7, 3, t=2))
    lim = limit_graph(q)
    assert lim.n == 15
    assert len(lim.edges) == 14
    assert lim.is_connected()
    y2, y3 = lim.index_of("y_2'"), lim.index_of("y_3'")
    assert (y2, y3) not in lim.edges
    assert lim.edge_weight(0, lim.index_of("u'")) == 2.0
    assert lim.vertex_weight[lim.index_of("u'")] == 2.0
    assert lim.vertex_weight[y2] == 0.0
    assert lim.vertex_weight[y3] == 0.0
    assert lim.vertex_weight[lim.index_of("v_*")] == 0.0
    assert lim.vertex_weight[0] == 1.0


def test_limit_requires_weight_polynomials():
    g = gen_weighted_cycle(4, 3)
    q = quotient_graph(g, 0)
    with pytest.raises(BadParams, match="weight polynomials"):
        limit_graph(q)
