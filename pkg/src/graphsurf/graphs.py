"""Graph container, validation, and elementary structural quantities.

Graphs are finite, undirected, non-negatively weighted, with optional
loops (a nonzero diagonal entry encodes a loop). Vertices are labeled
1..n throughout the public API. Storage is a dense symmetric matrix:
every downstream consumer (eigensolvers, subset enumeration) is dense
anyway, and the intended scale is desk-sized (n up to a couple
thousand).

Degree conventions, used consistently everywhere:

* weighted degree  deg(j) = sum_i a_ij   (a loop counts once),
* unweighted degree = number of incident edges, a loop counting twice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc, shortest_path

__all__ = [
    "Graph",
    "GraphError",
    "Partition",
    "weighted_degree",
    "unweighted_degree",
    "volume",
    "boundary_weight",
    "is_connected",
    "connected_components",
    "diameter",
    "edge_count",
    "max_degree",
    "euler_planarity_check",
]


class GraphError(ValueError):
    """Structurally invalid graph or bad vertex reference."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Symmetric weighted adjacency with strictly positive degrees.

    ``adj[i, j]`` holds the weight of the edge {i+1, j+1}; a positive
    diagonal entry is a loop. Instances are immutable after
    construction (the matrix is marked read-only), so they are safe to
    share across threads.
    """

    adj: np.ndarray
    labels: tuple[int, ...] | None = None  # original vertex labels, if relabeled on load
    deg: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        adj = np.array(self.adj, dtype=float)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] < 1:
            raise GraphError(f"adjacency must be a non-empty square matrix, got shape {adj.shape}")
        if not np.isfinite(adj).all():
            raise GraphError("adjacency entries must be finite")
        if (adj < 0).any():
            raise GraphError("edge weights must be non-negative")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency must be exactly symmetric")
        deg = adj.sum(axis=0)
        if (deg <= 0).any():
            bad = int(np.where(deg <= 0)[0][0]) + 1
            raise GraphError(f"vertex {bad} is isolated (zero degree)")
        if self.labels is not None and len(self.labels) != adj.shape[0]:
            raise GraphError("label table length must equal the vertex count")
        adj.setflags(write=False)
        deg.setflags(write=False)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "deg", deg)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def unweighted(self) -> bool:
        """True when every entry is 0 or 1."""
        a = self.adj
        return bool(((a == 0.0) | (a == 1.0)).all())

    @property
    def loop_free(self) -> bool:
        return bool((np.diagonal(self.adj) == 0.0).all())

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[float]]) -> "Graph":
        """Build a graph from 1-based ``(i, j)`` or ``(i, j, w)`` triples.

        ``i == j`` encodes a loop. A vertex pair appearing twice (in
        either orientation) is an error rather than an accumulation.
        """
        if n < 1:
            raise GraphError("vertex count must be at least 1")
        adj = np.zeros((n, n))
        seen: set[tuple[int, int]] = set()
        for entry in edges:
            if len(entry) == 2:
                i, j = entry
                w = 1.0
            elif len(entry) == 3:
                i, j, w = entry
            else:
                raise GraphError(f"edge must be (i, j) or (i, j, w), got {entry!r}")
            i, j = int(i), int(j)
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge ({i}, {j}) references a vertex outside 1..{n}")
            w = float(w)
            if not math.isfinite(w) or w < 0:
                raise GraphError(f"edge ({i}, {j}) has invalid weight {w}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphError(f"duplicate edge ({i}, {j})")
            seen.add(key)
            adj[i - 1, j - 1] = w
            adj[j - 1, i - 1] = w
        return cls(adj)

    def with_labels(self, labels: Sequence[int]) -> "Graph":
        return Graph(self.adj, labels=tuple(int(x) for x in labels))


def _vertex_index(g: Graph, j: int) -> int:
    if not (1 <= j <= g.n):
        raise GraphError(f"vertex {j} out of range 1..{g.n}")
    return j - 1


def _subset_indices(g: Graph, members: Iterable[int]) -> np.ndarray:
    """Validate a 1-based vertex subset and return unique 0-based indices."""
    idx = np.unique(np.asarray(list(members), dtype=int))
    if idx.size and (idx[0] < 1 or idx[-1] > g.n):
        raise GraphError(f"vertex subset not contained in 1..{g.n}")
    return idx - 1


@dataclass(frozen=True)
class Partition:
    """Disjoint bipartition of the vertex set, both sides non-empty."""

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(sorted(set(int(v) for v in self.part_a)))
        b = tuple(sorted(set(int(v) for v in self.part_b)))
        if not a or not b:
            raise GraphError("both partition sides must be non-empty")
        if set(a) & set(b):
            raise GraphError("partition sides must be disjoint")
        object.__setattr__(self, "part_a", a)
        object.__setattr__(self, "part_b", b)

    def validate_for(self, g: Graph) -> None:
        if set(self.part_a) | set(self.part_b) != set(range(1, g.n + 1)):
            raise GraphError("partition must cover the whole vertex set")

    @classmethod
    def from_side(cls, g: Graph, side: Iterable[int]) -> "Partition":
        a = set(int(v) for v in side)
        b = set(range(1, g.n + 1)) - a
        return cls(tuple(sorted(a)), tuple(sorted(b)))


def weighted_degree(g: Graph, j: int) -> float:
    """Column sum of the adjacency at vertex ``j`` (a loop counts once)."""
    return float(g.deg[_vertex_index(g, j)])


def unweighted_degree(g: Graph, j: int) -> int:
    """Number of edges incident to ``j``, a loop contributing two."""
    col = g.adj[:, _vertex_index(g, j)]
    count = int(np.count_nonzero(col))
    if col[_vertex_index(g, j)] != 0.0:
        count += 1
    return count


def volume(g: Graph, members: Iterable[int]) -> float:
    """Sum of weighted degrees over a vertex subset (empty set gives 0)."""
    idx = _subset_indices(g, members)
    return float(g.deg[idx].sum()) if idx.size else 0.0


def boundary_weight(g: Graph, members: Iterable[int]) -> float:
    """Total weight of edges crossing the cut (X, V\\X).

    ``members`` must be a non-empty proper subset.
    """
    idx = _subset_indices(g, members)
    if idx.size == 0 or idx.size == g.n:
        raise GraphError("cut requires a non-empty proper vertex subset")
    x = np.zeros(g.n)
    x[idx] = 1.0
    # vol(X) counts every edge at X once per endpoint; edges inside X
    # (and loops) are recovered by the quadratic term.
    return float(g.deg @ x - x @ g.adj @ x)


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components over the support of the adjacency, 1-based."""
    ncomp, owner = _cc(csr_matrix(g.adj != 0.0), directed=False)
    comps: list[list[int]] = [[] for _ in range(ncomp)]
    for v, c in enumerate(owner):
        comps[c].append(v + 1)
    comps.sort(key=lambda c: c[0])
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def diameter(g: Graph) -> int | float:
    """Largest hop distance between vertex pairs; ``inf`` when disconnected."""
    if g.n == 1:
        return 0
    dist = shortest_path(csr_matrix((g.adj != 0.0).astype(float)), unweighted=True, directed=False)
    worst = dist.max()
    return math.inf if math.isinf(worst) else int(round(worst))


def edge_count(g: Graph) -> int:
    """Number of edges: off-diagonal pairs counted once, plus loops."""
    a = g.adj
    upper = int(np.count_nonzero(np.triu(a, k=1)))
    loops = int(np.count_nonzero(np.diagonal(a)))
    return upper + loops


def max_degree(g: Graph) -> float:
    return float(g.deg.max())


def euler_planarity_check(g: Graph) -> str:
    """Necessary-condition planarity gate via the edge-count bound.

    Returns ``"violated"`` when |E| > 3n - 6 (impossible for a planar
    simple graph on n >= 3 vertices), ``"plausible"`` otherwise, and
    ``"not_applicable"`` for weighted or loopy input. A "plausible"
    answer is not a planarity certificate.
    """
    if not g.unweighted or not g.loop_free:
        return "not_applicable"
    if g.n < 3:
        return "plausible"
    return "violated" if edge_count(g) > 3 * g.n - 6 else "plausible"
