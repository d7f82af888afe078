"""Reading and writing graphs as edge-list text or JSON.

Edge-list format: one ``i j w`` triple per line (``w`` optional,
default 1.0), whitespace separated, ``i == j`` encoding a loop. Blank
lines and ``#`` comments are skipped. Labels need not be dense: they
are relabeled to 1..n in sorted order and the original labels kept on
the graph. Duplicate vertex pairs are an error.

JSON format: ``{"n": int, "edges": [[i, j, w], ...], "potential":
[...]}`` with 1-based indices and an optional per-vertex potential.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .graphs import Graph, GraphError
from .surface import Potential

__all__ = [
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "edge_list_text",
    "parse_graph_json",
    "read_graph_json",
    "write_graph_json",
    "graph_json_text",
    "read_graph",
    "read_potential_file",
]


def parse_edge_list(text: str) -> Graph:
    triples: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphError(f"line {lineno}: expected 'i j [w]', got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
        triples.append((i, j, w))
    if not triples:
        raise GraphError("edge list is empty")
    labels = sorted({v for i, j, _ in triples for v in (i, j)})
    relabel = {lab: k + 1 for k, lab in enumerate(labels)}
    g = Graph.from_edges(len(labels), [(relabel[i], relabel[j], w) for i, j, w in triples])
    if labels != list(range(1, len(labels) + 1)):
        return g.with_labels(labels)
    return g


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(edge_list_text(g))


def _graph_to_dict(g: Graph, u: Potential | None = None) -> dict:
    edges = []
    a = g.adj
    for i in range(g.n):
        for j in range(i, g.n):
            if a[i, j] != 0.0:
                edges.append([i + 1, j + 1, float(a[i, j])])
    out: dict = {"n": g.n, "edges": edges}
    if u is not None:
        out["potential"] = [float(s) for s in u.sigma]
    return out


def parse_graph_json(text: str) -> tuple[Graph, Potential | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphError('graph JSON must be an object with "n" and "edges"')
    g = Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    u = None
    if data.get("potential") is not None:
        u = Potential.of(data["potential"])
        if len(u.sigma) != g.n:
            raise GraphError("potential length must equal the vertex count")
    return g, u


def read_graph_json(path: str | Path) -> tuple[Graph, Potential | None]:
    return parse_graph_json(Path(path).read_text())


def write_graph_json(g: Graph, path: str | Path, u: Potential | None = None) -> None:
    Path(path).write_text(json.dumps(_graph_to_dict(g, u)) + "\n")


def read_graph(path: str | Path, fmt: str | None = None) -> tuple[Graph, Potential | None]:
    """Load a graph file, inferring the format from the extension."""
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "edgelist"
    if fmt == "json":
        return read_graph_json(path)
    if fmt == "edgelist":
        return read_edge_list(path), None
    raise GraphError(f"unknown graph format {fmt!r} (expected 'edgelist' or 'json')")


def read_potential_file(path: str | Path, n: int) -> Potential:
    """Read whitespace-separated potential values (or a JSON list)."""
    text = Path(path).read_text().strip()
    if text.startswith("["):
        values = json.loads(text)
    else:
        values = [float(tok) for tok in text.split()]
    u = Potential.of(values)
    if len(u.sigma) != n:
        raise GraphError(f"potential has {len(u.sigma)} entries, expected {n}")
    return u


def graph_json_text(g: Graph, u: Potential | None = None) -> str:
    return json.dumps(_graph_to_dict(g, u))


def edge_list_text(g: Graph) -> str:
    a = g.adj
    lines = []
    for i in range(g.n):
        for j in range(i, g.n):
            if a[i, j] != 0.0:
                # repr of a Python float is the shortest round-trip decimal.
                lines.append(f"{i + 1} {j + 1} {float(a[i, j])!r}")
    return "\n".join(lines) + "\n"
