"""Serialization: canonical text format, round trips, dot export."""

import pytest

from spectralpaths.errors import IndexOutOfRange
from spectralpaths.graph import build_graph
from spectralpaths.graphio import format_graph, parse_graph, read_graph, to_dot, write_graph

from conftest import random_connected_graph

SAMPLE = """\
# comment line

n 3
v 0 1.0 u
v 1 0.5 mid
e 0 1 2.0
e 1 2 1.0
"""


def test_parse_defaults_and_labels():
    g = parse_graph(SAMPLE)
    assert g.n == 3
    assert g.vertex_weight.tolist() == [1.0, 0.5, 1.0]
    assert g.label_of(0) == "u" and g.label_of(1) == "mid" and g.label_of(2) == "2"
    assert g.edge_weight(0, 1) == 2.0


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_graph("v 0 1.0\n")
    with pytest.raises(ValueError):
        parse_graph("n 2\nq 1 2\n")
    with pytest.raises(ValueError):
        parse_graph("n 2\ne 0 x 1.0\n")
    with pytest.raises(IndexOutOfRange):
        parse_graph("n 2\nv 5 1.0\n")


def test_format_is_fixed_point():
    g = parse_graph(SAMPLE)
    text = format_graph(g)
    assert format_graph(parse_graph(text)) == text
    assert "np." not in text


def test_file_round_trip(tmp_path):
    g = build_graph(
        3, [(0, 1, 0.1), (1, 2, 3.5)], vertex_weights=[1.0, 0.0, 2.0], labels=["a", "b", "c"]
    )
    path = tmp_path / "g.tsv"
    write_graph(g, str(path))
    h = read_graph(str(path))
    assert h.n == g.n
    assert h.edges == g.edges
    assert h.vertex_weight.tolist() == g.vertex_weight.tolist()
    assert h.labels == g.labels


def test_round_trip_preserves_exact_floats(rng):
    for _ in range(10):
        n = int(rng.integers(2, 25))
        base = random_connected_graph(rng, n)
        edges = [(a, b, float(rng.uniform(0.01, 9.0))) for (a, b) in sorted(base.edges)]
        g = build_graph(n, edges, vertex_weights=rng.uniform(0.0, 2.0, size=n) + 0.01)
        h = parse_graph(format_graph(g))
        assert h.edges == g.edges
        assert h.vertex_weight.tolist() == g.vertex_weight.tolist()


def test_dot_highlight():
    g = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)], labels=["a", "b", "c"])
    dot = to_dot(g, highlight=[2, 1])
    assert "graph G {" in dot
    assert 'label="a"' in dot
    assert "color=red" in dot and "penwidth=2" in dot
    plain = to_dot(g)
    assert "color=red" not in plain
