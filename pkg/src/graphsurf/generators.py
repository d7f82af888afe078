"""Generators for the named graph families plus randomized test corpora.

All generators return unweighted, loop-free graphs with deterministic
1-based vertex numbering.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .graphs import Graph, GraphError

__all__ = [
    "complete",
    "barbell",
    "bipartite_complete",
    "star",
    "star_path",
    "path",
    "cycle",
    "grid",
    "wheel",
    "generate",
    "FAMILIES",
    "random_tree",
    "random_connected_graph",
    "random_weighted_graph",
]


def _from_pairs(n: int, pairs) -> Graph:
    adj = np.zeros((n, n))
    for i, j in pairs:
        adj[i - 1, j - 1] = 1.0
        adj[j - 1, i - 1] = 1.0
    return Graph(adj)


def complete(n: int) -> Graph:
    """K_n; needs n >= 2 so no vertex ends up isolated."""
    if n < 2:
        raise GraphError("complete(n) requires n >= 2")
    return _from_pairs(n, combinations(range(1, n + 1), 2))


def barbell(n: int) -> Graph:
    """Two disjoint copies of K_n joined by the single bridge (n, n+1)."""
    if n < 2:
        raise GraphError("barbell(n) requires n >= 2")
    pairs = list(combinations(range(1, n + 1), 2))
    pairs += [(i + n, j + n) for i, j in combinations(range(1, n + 1), 2)]
    pairs.append((n, n + 1))
    return _from_pairs(2 * n, pairs)


def bipartite_complete(d: int) -> Graph:
    """K_{d,d} with sides {1..d} and {d+1..2d}."""
    if d < 1:
        raise GraphError("bipartite_complete(d) requires d >= 1")
    return _from_pairs(2 * d, ((i, d + j) for i in range(1, d + 1) for j in range(1, d + 1)))


def star(m: int) -> Graph:
    """Star with center 1 and leaves 2..m+1."""
    if m < 1:
        raise GraphError("star(m) requires m >= 1")
    return _from_pairs(m + 1, ((1, k) for k in range(2, m + 2)))


def star_path(m: int, n: int) -> Graph:
    """Star on m outer vertices whose center starts a path of n edges.

    Vertices: center 1, leaves 2..m+1, path vertices m+2..m+n+1, so
    m+n+1 in total. The center has degree m+1; the far path end has
    degree 1. Note that for n = 1 the graph degenerates to a star on
    m+1 leaves (there is no interior path vertex of degree 2).
    """
    if m <= 2:
        raise GraphError("star_path(m, n) requires m > 2")
    if n < 1:
        raise GraphError("star_path(m, n) requires n >= 1")
    pairs = [(1, k) for k in range(2, m + 2)]
    chain = [1] + list(range(m + 2, m + n + 2))
    pairs += list(zip(chain[:-1], chain[1:]))
    return _from_pairs(m + n + 1, pairs)


def path(k: int) -> Graph:
    """Path with k edges on k+1 vertices."""
    if k < 1:
        raise GraphError("path(k) requires k >= 1")
    return _from_pairs(k + 1, ((i, i + 1) for i in range(1, k + 1)))


def cycle(k: int) -> Graph:
    """Cycle on k vertices."""
    if k < 3:
        raise GraphError("cycle(k) requires k >= 3")
    pairs = [(i, i + 1) for i in range(1, k)] + [(k, 1)]
    return _from_pairs(k, pairs)


def grid(p: int, q: int) -> Graph:
    """p x q lattice, row-major numbering."""
    if p < 1 or q < 1 or p * q < 2:
        raise GraphError("grid(p, q) requires p, q >= 1 and at least 2 vertices")
    pairs = []
    for r in range(p):
        for c in range(q):
            v = r * q + c + 1
            if c + 1 < q:
                pairs.append((v, v + 1))
            if r + 1 < p:
                pairs.append((v, v + q))
    return _from_pairs(p * q, pairs)


def wheel(k: int) -> Graph:
    """Hub 1 joined to every vertex of the cycle 2..k+1."""
    if k < 3:
        raise GraphError("wheel(k) requires k >= 3")
    rim = list(range(2, k + 2))
    pairs = [(1, v) for v in rim]
    pairs += list(zip(rim, rim[1:] + rim[:1]))
    return _from_pairs(k + 1, pairs)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "barbell": barbell,
    "bipartite_complete": bipartite_complete,
    "star": star,
    "star_path": star_path,
    "path": path,
    "cycle": cycle,
    "grid": grid,
    "wheel": wheel,
}


def generate(family: str, params: Sequence[int]) -> Graph:
    """Dispatch to a named family with integer parameters."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}") from None
    return builder(*[int(p) for p in params])


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform-attachment random tree on n >= 2 vertices."""
    if n < 2:
        raise GraphError("random_tree(n) requires n >= 2")
    pairs = [(int(rng.integers(1, v)), v) for v in range(2, n + 1)]
    return _from_pairs(n, pairs)


def random_connected_graph(n: int, rng: np.random.Generator, extra_edge_prob: float = 0.3) -> Graph:
    """Random tree plus independent extra edges; always connected."""
    g = random_tree(n, rng)
    adj = np.array(g.adj)
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j] == 0.0 and rng.random() < extra_edge_prob:
                adj[i, j] = adj[j, i] = 1.0
    return Graph(adj)


def random_weighted_graph(
    n: int,
    rng: np.random.Generator,
    loop_prob: float = 0.0,
    weight_high: float = 2.0,
) -> Graph:
    """Connected random graph with weights drawn from (0, weight_high]."""
    g = random_connected_graph(n, rng)
    adj = np.array(g.adj)
    for i in range(n):
        for j in range(i, n):
            if i == j:
                if loop_prob and rng.random() < loop_prob:
                    adj[i, i] = weight_high * (1.0 - rng.random())
            elif adj[i, j] != 0.0:
                w = weight_high * (1.0 - rng.random())  # in (0, weight_high]
                adj[i, j] = adj[j, i] = w
    return Graph(adj)
