"""Cheeger constants: exhaustive minimum and the Fiedler sweep heuristic.

The exact routine enumerates every proper non-empty vertex subset
containing vertex 1 (complements are equivalent), vectorized over
bitmask chunks so graphs up to the default cap of 22 vertices stay
fast. The sweep evaluates the n-1 prefix cuts of the vertices ordered
by the degree-scaled Fiedler vector and is an upper bound on h by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, GraphError, is_connected
from .spectral import DEFAULT_IDENTITY_TOL, Potential, build_operator, eigenvalues, fiedler_vector

__all__ = ["CutResult", "cut_ratio", "cheeger_exact", "cheeger_sweep", "cheeger_lambda2_check"]

DEFAULT_EXACT_MAX = 22
_CHUNK_BITS = 16


@dataclass(frozen=True)
class CutResult:
    """One side of a cut with its conductance-style ratio."""

    cut_set: tuple[int, ...]
    ratio: float
    method: str  # "exact" or "sweep"


def cut_ratio(g: Graph, members) -> float:
    """E(X, V\\X) / min(vol(X), vol(V\\X)) for a proper non-empty X."""
    x = np.zeros(g.n)
    idx = [int(v) - 1 for v in members]
    x[idx] = 1.0
    vol = float(g.deg @ x)
    total = float(g.deg.sum())
    cut = vol - float(x @ g.adj @ x)
    return cut / min(vol, total - vol)


def cheeger_exact(g: Graph, max_n: int = DEFAULT_EXACT_MAX) -> CutResult:
    """Exhaustive minimum over all cuts, deterministic tie-breaking.

    Ties on the ratio resolve to the lexicographically smallest sorted
    cut set (always containing vertex 1). Refuses graphs above the cap;
    use cheeger_sweep for larger inputs.
    """
    if g.n > max_n:
        raise GraphError(
            f"exact Cheeger enumeration capped at n = {max_n} (got {g.n}); "
            "use cheeger_sweep for larger graphs"
        )
    if g.n < 2:
        raise GraphError("Cheeger constant needs at least 2 vertices")
    if not is_connected(g):
        raise GraphError("Cheeger constant requires a connected graph")

    n = g.n
    deg = g.deg
    total = float(deg.sum())
    shifts = np.arange(n - 1, dtype=np.uint64)
    full = (1 << (n - 1)) - 1  # all of 2..n selected -> X = V, excluded

    best_ratio = np.inf
    best_set: tuple[int, ...] | None = None
    for start in range(0, full, 1 << _CHUNK_BITS):
        stop = min(start + (1 << _CHUNK_BITS), full)
        masks = np.arange(start, stop, dtype=np.uint64)
        members = np.empty((masks.size, n))
        members[:, 0] = 1.0  # vertex 1 is always inside
        members[:, 1:] = (masks[:, None] >> shifts[None, :]) & np.uint64(1)
        vol = members @ deg
        within = ((members @ g.adj) * members).sum(axis=1)
        ratios = (vol - within) / np.minimum(vol, total - vol)
        i_min = int(ratios.argmin())
        r_min = float(ratios[i_min])
        if r_min > best_ratio:
            continue
        for i in np.flatnonzero(ratios == r_min):
            cand = tuple(int(v) + 1 for v in np.flatnonzero(members[i]))
            if r_min < best_ratio or (best_set is not None and cand < best_set):
                best_ratio, best_set = r_min, cand
    assert best_set is not None
    return CutResult(cut_set=best_set, ratio=best_ratio, method="exact")


def cheeger_sweep(g: Graph) -> CutResult:
    """Best prefix cut of the D^{-1/2}-scaled Fiedler order (>= h always)."""
    if g.n < 2:
        raise GraphError("Cheeger constant needs at least 2 vertices")
    v = fiedler_vector(g)
    order = np.argsort(v / np.sqrt(g.deg), kind="stable")
    deg = g.deg
    total = float(deg.sum())
    adj = g.adj

    best_ratio = np.inf
    best_k = 1
    vol = 0.0
    within = 0.0
    inside = np.zeros(g.n, dtype=bool)
    for k, vtx in enumerate(order[:-1], start=1):
        vol += deg[vtx]
        within += 2.0 * adj[vtx, inside].sum() + adj[vtx, vtx]
        inside[vtx] = True
        ratio = (vol - within) / min(vol, total - vol)
        if ratio < best_ratio:
            best_ratio, best_k = float(ratio), k
    cut = tuple(sorted(int(w) + 1 for w in order[:best_k]))
    return CutResult(cut_set=cut, ratio=best_ratio, method="sweep")


def cheeger_lambda2_check(g: Graph, tol: float = DEFAULT_IDENTITY_TOL, max_n: int = DEFAULT_EXACT_MAX) -> dict:
    """Confirm lambda_2(0) <= 2 h(Gamma) on an exactly enumerable graph."""
    cut = cheeger_exact(g, max_n=max_n)
    spec = eigenvalues(build_operator(g, Potential.zeros(g.n)), want_vectors=False)
    lam2 = float(spec.values[1])
    return {
        "lambda2": lam2,
        "h": cut.ratio,
        "cut_set": list(cut.cut_set),
        "pass": bool(lam2 <= 2.0 * cut.ratio + tol * max(1.0, abs(lam2))),
    }
