"""Plain-text graph serialization.

The format is line oriented:

    n <vertex count>
    v <index> <weight> [label]
    e <u> <v> <weight>

Blank lines and lines starting with # are ignored.  Vertices without a
v line get weight 1.  The writer is canonical (v lines in index order,
e lines sorted, floats via repr) so write -> read -> write is a fixed
point.
"""

from __future__ import annotations

import io

from .errors import IndexOutOfRange
from .graph import WeightedGraph, build_graph


def parse_graph(text: str) -> WeightedGraph:
    n = None
    vws: dict[int, float] = {}
    labels: dict[int, str] = {}
    edges: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "n":
                n = int(parts[1])
            elif tag == "v":
                idx = int(parts[1])
                vws[idx] = float(parts[2])
                if len(parts) > 3:
                    labels[idx] = parts[3]
            elif tag == "e":
                edges.append((int(parts[1]), int(parts[2]), float(parts[3])))
            else:
                raise ValueError(f"unknown record type {tag!r}")
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}: {exc}") from exc
    if n is None:
        raise ValueError("missing 'n' line")
    weights = [vws.get(i, 1.0) for i in range(n)]
    for idx in vws:
        if not (0 <= idx < n):
            raise IndexOutOfRange(f"v record for vertex {idx} out of range for n={n}")
    label_list = None
    if labels:
        label_list = [labels.get(i, str(i)) for i in range(n)]
    return build_graph(n, edges, weights, label_list)


def read_graph(path: str) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(graph: WeightedGraph) -> str:
    out = io.StringIO()
    out.write(f"n {graph.n}\n")
    for i in range(graph.n):
        w = float(graph.vertex_weight[i])
        if graph.labels is not None:
            out.write(f"v {i} {w!r} {graph.labels[i]}\n")
        else:
            out.write(f"v {i} {w!r}\n")
    for (u, v) in sorted(graph.edges):
        out.write(f"e {u} {v} {float(graph.edges[(u, v)])!r}\n")
    return out.getvalue()


def write_graph(graph: WeightedGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(graph))


def to_dot(graph: WeightedGraph, highlight: list[int] | None = None) -> str:
    """Graphviz rendering with edge weights as labels.

    highlight, if given, is a vertex sequence whose vertices and edges
    are drawn in red.
    """
    hi_vertices = set(highlight or [])
    hi_edges = set()
    if highlight:
        for a, b in zip(highlight, highlight[1:]):
            hi_edges.add((a, b) if a < b else (b, a))
    out = io.StringIO()
    out.write("graph G {\n")
    for i in range(graph.n):
        attrs = [f'label="{graph.label_of(i)}"']
        if i in hi_vertices:
            attrs.append("color=red")
        out.write(f"  {i} [{', '.join(attrs)}];\n")
    for (u, v) in sorted(graph.edges):
        attrs = [f'label="{graph.edges[(u, v)]:g}"']
        if (u, v) in hi_edges:
            attrs.append("color=red")
            attrs.append("penwidth=2")
        out.write(f"  {u} -- {v} [{', '.join(attrs)}];\n")
    out.write("}\n")
    return out.getvalue()
