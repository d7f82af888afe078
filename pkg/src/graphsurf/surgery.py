"""Surgery transformations and their surface-area monotonicity.

Three operations: gluing two graphs at a vertex (surface area can only
shrink), cutting a bridge edge (surface area can only grow, summed
over the two components), and attaching a pendant edge (surface area
grows). Each returns the transformed graph(s) together with the
before/after surface areas and a verdict flag computed in exact
rational arithmetic, since the inequalities are theorems rather than
numerical estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, GraphError, connected_components
from .surface import surface_area, surface_area_exact

__all__ = ["SurgeryOutcome", "glue_at_vertices", "cut_edge", "attach_pending_edge"]


@dataclass(frozen=True)
class SurgeryOutcome:
    """Result graph(s) plus surface areas on both sides of the inequality."""

    result: tuple[Graph, ...]
    before_surface: tuple[float, ...]
    after_surface: tuple[float, ...]
    inequality: str  # human-readable orientation, e.g. "after <= before"
    inequality_ok: bool


def _exact_total(graphs: tuple[Graph, ...]) -> Fraction:
    return sum((surface_area_exact(g) for g in graphs), Fraction(0))


def glue_at_vertices(g1: Graph, g2: Graph, i1: int, i2: int) -> SurgeryOutcome:
    """Identify vertex i1 of g1 with vertex i2 of g2.

    The merged graph keeps g1's numbering; g2's remaining vertices
    follow in order. The merged vertex degree is the sum of both glue
    degrees, so S(glued) <= S(g1) + S(g2).
    """
    if not (1 <= i1 <= g1.n):
        raise GraphError(f"vertex {i1} out of range 1..{g1.n}")
    if not (1 <= i2 <= g2.n):
        raise GraphError(f"vertex {i2} out of range 1..{g2.n}")
    n1, n2 = g1.n, g2.n
    n = n1 + n2 - 1
    adj = np.zeros((n, n))
    adj[:n1, :n1] = g1.adj

    # Map g2's indices into the merged numbering.
    mapping = np.empty(n2, dtype=int)
    mapping[i2 - 1] = i1 - 1
    rest = [k for k in range(n2) if k != i2 - 1]
    for offset, k in enumerate(rest):
        mapping[k] = n1 + offset
    for a in range(n2):
        for b in range(a, n2):
            w = g2.adj[a, b]
            if w != 0.0:
                adj[mapping[a], mapping[b]] += w
                if mapping[a] != mapping[b]:
                    adj[mapping[b], mapping[a]] += w
    glued = Graph(adj)

    ok = surface_area_exact(glued) <= surface_area_exact(g1) + surface_area_exact(g2)
    return SurgeryOutcome(
        result=(glued,),
        before_surface=(surface_area(g1), surface_area(g2)),
        after_surface=(surface_area(glued),),
        inequality="after <= before",
        inequality_ok=bool(ok),
    )


def cut_edge(g: Graph, i: int, j: int) -> SurgeryOutcome:
    """Remove a bridge edge, returning the two components.

    The edge must exist, must disconnect the graph into exactly two
    components, and neither component may contain an isolated vertex
    (cutting the only edge at a leaf is rejected, since surface area is
    undefined for a degree-zero vertex).
    """
    if not (1 <= i <= g.n and 1 <= j <= g.n):
        raise GraphError(f"edge ({i}, {j}) references a vertex outside 1..{g.n}")
    if i == j:
        raise GraphError("a loop is never a bridge")
    if g.adj[i - 1, j - 1] == 0.0:
        raise GraphError(f"({i}, {j}) is not an edge")
    adj = np.array(g.adj)
    adj[i - 1, j - 1] = 0.0
    adj[j - 1, i - 1] = 0.0
    if adj[:, i - 1].sum() == 0.0 or adj[:, j - 1].sum() == 0.0:
        raise GraphError(
            f"cutting ({i}, {j}) would leave an isolated vertex; surface area is undefined there"
        )

    comps = connected_components(Graph(adj))
    if len(comps) != 2:
        raise GraphError(
            f"({i}, {j}) is not a bridge: removal leaves {len(comps)} component(s), expected 2"
        )
    parts = tuple(Graph(adj[np.ix_([v - 1 for v in c], [v - 1 for v in c])]) for c in comps)

    ok = surface_area_exact(g) <= _exact_total(parts)
    return SurgeryOutcome(
        result=parts,
        before_surface=(surface_area(g),),
        after_surface=tuple(surface_area(p) for p in parts),
        inequality="before <= after",
        inequality_ok=bool(ok),
    )


def attach_pending_edge(g: Graph, i: int) -> SurgeryOutcome:
    """Attach a new degree-one vertex to vertex i (unweighted graphs only)."""
    if not g.unweighted:
        raise GraphError("pendant attachment is defined for unweighted graphs only")
    if not (1 <= i <= g.n):
        raise GraphError(f"vertex {i} out of range 1..{g.n}")
    n = g.n + 1
    adj = np.zeros((n, n))
    adj[: g.n, : g.n] = g.adj
    adj[i - 1, n - 1] = 1.0
    adj[n - 1, i - 1] = 1.0
    bigger = Graph(adj)

    ok = surface_area_exact(g) <= surface_area_exact(bigger)
    return SurgeryOutcome(
        result=(bigger,),
        before_surface=(surface_area(g),),
        after_surface=(surface_area(bigger),),
        inequality="before <= after",
        inequality_ok=bool(ok),
    )
