"""Shared oracles and hypothesis strategies.

The oracles here recompute quantities along independent paths (plain
Fractions over the raw matrix, itertools subset enumeration, Rayleigh
quotients through the operator matrix) so the package implementations
are checked against something other than themselves.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from graphsurf import Graph, Potential, build_operator


def rational_surface(adj) -> Fraction:
    """Reciprocal-degree sum over a raw matrix, exact."""
    adj = np.asarray(adj, dtype=float)
    n = adj.shape[0]
    total = Fraction(0)
    for j in range(n):
        d = sum(Fraction(adj[i, j]) for i in range(n) if adj[i, j] != 0.0)
        total += Fraction(1) / d
    return total


def brute_cheeger(g: Graph) -> tuple[float, frozenset[int]]:
    """Minimum cut ratio by full subset enumeration (no canonicalization)."""
    n = g.n
    deg = g.deg
    total = float(deg.sum())
    best = (math.inf, frozenset())
    for r in range(1, n):
        for comb in itertools.combinations(range(n), r):
            x = np.zeros(n)
            x[list(comb)] = 1.0
            vol = float(deg @ x)
            cut = vol - float(x @ g.adj @ x)
            ratio = cut / min(vol, total - vol)
            if ratio < best[0]:
                best = (ratio, frozenset(v + 1 for v in comb))
    return best


def brute_sign_bound(g: Graph, u: Potential | None = None) -> tuple[float, tuple[int, ...]]:
    """Max Rayleigh quotient of f_j = +-1/sqrt(deg j) over bipartitions.

    Evaluated directly through the operator matrix, independently of
    the closed-form expansion used by the library.
    """
    if u is None:
        u = Potential.zeros(g.n)
    h = build_operator(g, u).matrix
    inv_sqrt = 1.0 / np.sqrt(g.deg)
    best = (-math.inf, ())
    for bits in itertools.product((1.0, -1.0), repeat=g.n - 1):
        s = np.array((1.0,) + bits)
        if (s > 0).all():
            continue  # one side would be empty
        f = s * inv_sqrt
        rq = float(f @ h @ f) / float(f @ f)
        if rq > best[0]:
            best = (rq, tuple(i + 1 for i in range(g.n) if s[i] > 0))
    return best


def seeded_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


@st.composite
def connected_unweighted(draw, min_n: int = 2, max_n: int = 10) -> Graph:
    """Random tree plus extra edges; always connected, no loops."""
    n = draw(st.integers(min_n, max_n))
    adj = np.zeros((n, n))
    for child in range(1, n):
        parent = draw(st.integers(0, child - 1))
        adj[child, parent] = adj[parent, child] = 1.0
    extras = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for i, j in extras:
        if i != j:
            adj[i, j] = adj[j, i] = 1.0
    return Graph(adj)


@st.composite
def weighted_graphs(draw, min_n: int = 2, max_n: int = 8, loops: bool = True) -> Graph:
    """Connected graph with weights in (0.1, 2] and optional loops."""
    base = draw(connected_unweighted(min_n, max_n))
    n = base.n
    adj = np.array(base.adj)
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j] != 0.0:
                w = draw(st.floats(0.1, 2.0, allow_nan=False, allow_infinity=False))
                adj[i, j] = adj[j, i] = w
    if loops:
        for i in range(n):
            if draw(st.booleans()):
                adj[i, i] = draw(st.floats(0.1, 2.0, allow_nan=False, allow_infinity=False))
    return Graph(adj)


@st.composite
def graphs_with_potentials(draw, min_n: int = 2, max_n: int = 8, loops: bool = True):
    g = draw(weighted_graphs(min_n, max_n, loops))
    sigma = [draw(st.floats(0.0, 3.0, allow_nan=False, allow_infinity=False)) for _ in range(g.n)]
    return g, Potential.of(sigma)
