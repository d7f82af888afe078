"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines. Criterion 3 is split: the closed forms for the star-path family
hold for tails of length n >= 2, while the n = 1 column is kept as a
faithful (and knowingly failing) check, because star_path(m, 1)
degenerates to a star with no degree-2 vertex, so the generic closed
forms for delta and Theta provably do not describe that graph.
"""

import json
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import rational_surface
from graphsurf import (
    Graph,
    Partition,
    Potential,
    attach_pending_edge,
    barbell,
    bipartite_complete,
    build_operator,
    complete,
    connected_components,
    cut_edge,
    cycle,
    degree_levels,
    edge_count,
    eigenvalues,
    full_report,
    gap_gamma,
    glue_at_vertices,
    grid,
    jost_mulas_q,
    lambda_n_lower,
    path,
    planar_lambda2_bound,
    star,
    star_path,
    surface_area,
    surface_area_exact,
    theta,
    trace_formula_check,
    wheel,
)
from graphsurf.bounds import (
    star_path_delta_closed,
    star_path_surface_closed,
    star_path_theta_closed,
)
from graphsurf.cheeger import cheeger_exact, cheeger_sweep
from graphsurf.cli import main as cli_main
from graphsurf.generators import random_connected_graph, random_tree, random_weighted_graph


def _verdict(criterion: str, ok: bool, detail: str = "") -> None:
    print(f"[acceptance] {criterion}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())


def test_criterion_1_trace_formula_random_graphs():
    """Both trace identities at <= 1e-9 relative error on 200 random graphs."""
    rng = np.random.default_rng(20240811)
    start = time.time()
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 51))
        g = random_weighted_graph(n, rng, loop_prob=0.1, weight_high=2.0)
        u = Potential(rng.uniform(0.0, 3.0, n))
        report = trace_formula_check(g, u, tol=1e-9)
        worst = max(worst, max(report["relative_errors"]))
        assert report["pass"], report
    elapsed = time.time() - start
    _verdict("criterion 1 (trace formula)", True, f"worst rel err {worst:.2e}, {elapsed:.1f}s")
    assert worst <= 1e-9
    assert elapsed <= 30.0


def test_criterion_2_complete_graph_surface_and_spectrum():
    """S(K_n) = n/(n-1) exactly; spectrum {0, n/(n-1) x (n-1)} to 1e-10."""
    worst = 0.0
    for n in range(2, 101):
        g = complete(n)
        assert surface_area_exact(g) == Fraction(n, n - 1)
        values = eigenvalues(build_operator(g), want_vectors=False).values
        expected = np.array([0.0] + [n / (n - 1)] * (n - 1))
        worst = max(worst, float(np.abs(values - expected).max()))
        assert np.abs(values - expected).max() <= 1e-10
    _verdict("criterion 2 (complete family)", True, f"worst eig err {worst:.2e}")


def test_criterion_3_star_path_closed_forms_and_gap():
    """Closed forms and gap agreement over m in 3..40, n in 2..120.

    The negativity onset of gamma(m, 3m) is recorded from the sweep
    rather than asserted a priori.
    """
    for m in range(3, 41):
        for n in range(2, 121):
            g = star_path(m, n)
            delta = degree_levels(g).delta
            th = theta(g)
            s = surface_area(g)
            assert abs(delta - star_path_delta_closed(m)) <= 1e-12 * star_path_delta_closed(m)
            assert abs(th - star_path_theta_closed(m)) <= 1e-12 * star_path_theta_closed(m)
            assert abs(s - star_path_surface_closed(m, n)) <= 1e-12 * star_path_surface_closed(m, n)
            out = gap_gamma(m, n)
            assert abs(out["direct"] - out["closed_form"]) <= 1e-12 * abs(out["closed_form"])

    sweep = {m: gap_gamma(m, 3 * m)["direct"] for m in range(3, 41)}
    negative = [m for m, gamma in sweep.items() if gamma < 0]
    assert negative, "gamma(m, 3m) never turned negative in the sweep"
    onset = min(negative)
    assert all(sweep[m] < 0 for m in range(onset, 41))
    _verdict(
        "criterion 3 (star-path closed forms, n >= 2)",
        True,
        f"gamma(m,3m) < 0 from m = {onset} on",
    )


def test_criterion_3_star_path_closed_forms_at_n_equal_1():
    """The stated n = 1 column of criterion 3, kept faithful and failing.

    star_path(m, 1) is a star on m+1 leaves: there is no interior path
    vertex, so the degree levels are {1, m+1} and
    delta = 1 + 1/(m+1) != 3/2 + 1/(m+1) (off by exactly 1/2), and
    Theta = 2(m+1) + 2/(m+1) != 2m + 3 + 2/(m+1) (off by exactly 1).
    The generic closed forms require n >= 2; this check documents the
    boundary defect rather than papering over it.
    """
    mismatches = []
    for m in range(3, 41):
        g = star_path(m, 1)
        delta = degree_levels(g).delta
        if abs(delta - star_path_delta_closed(m)) > 1e-12 * star_path_delta_closed(m):
            mismatches.append((m, delta, star_path_delta_closed(m)))
    _verdict(
        "criterion 3 (n = 1 column)",
        not mismatches,
        f"delta off by 1/2 at every m (e.g. {mismatches[0] if mismatches else ''})",
    )
    assert not mismatches, (
        "star_path(m, 1) has no degree-2 vertex; the generic closed forms "
        f"cannot match (first mismatch: {mismatches[0]})"
    )


def test_criterion_4_planar_bound_corpus():
    """lambda_2(0) <= (8 delta + Theta)/S + 1e-9 across the planar corpus."""
    start = time.time()
    corpus = []
    corpus += [path(k) for k in range(1, 51)]
    corpus += [cycle(k) for k in range(3, 51)]
    corpus += [grid(p, q) for p in range(1, 8) for q in range(p, 8) if p * q >= 2]
    corpus += [wheel(k) for k in range(3, 31)]
    corpus += [star(m) for m in range(1, 31)]
    corpus += [star_path(m, n) for m in range(3, 16) for n in range(1, 31)]
    corpus.append(complete(4))
    rng = np.random.default_rng(4)
    corpus += [random_tree(int(rng.integers(2, 41)), rng) for _ in range(50)]

    worst_slack = -np.inf
    for g in corpus:
        bound = planar_lambda2_bound(g, planar_asserted=True)["bound"]
        lam2 = float(eigenvalues(build_operator(g), want_vectors=False).values[1])
        worst_slack = max(worst_slack, lam2 - bound)
        assert lam2 <= bound + 1e-9
    elapsed = time.time() - start
    _verdict(
        "criterion 4 (planar bound corpus)",
        True,
        f"{len(corpus)} graphs, max lambda2 - bound = {worst_slack:.3e}, {elapsed:.1f}s",
    )
    assert elapsed <= 60.0


def test_criterion_5_cheeger_enumeration_and_barbell():
    """lambda_2/2 <= h <= sweep on 500 random graphs; exact barbell cuts."""
    rng = np.random.default_rng(55)
    for _ in range(500):
        g = random_connected_graph(int(rng.integers(2, 9)), rng)
        h = cheeger_exact(g).ratio
        swept = cheeger_sweep(g).ratio
        lam2 = float(eigenvalues(build_operator(g), want_vectors=False).values[1])
        assert lam2 / 2 <= h + 1e-9
        assert h <= swept + 1e-12
        assert lam2 <= 2 * h + 1e-9

    for n in range(3, 11):
        cut = cheeger_exact(barbell(n))
        assert cut.ratio <= 1 / ((n - 1) ** 2 + n) + 1e-12
        assert cut.cut_set == tuple(range(1, n + 1))
    _verdict("criterion 5 (Cheeger chain + barbell witness)", True)


def test_criterion_6_lambda_n_lower_bound():
    """Exhaustive partition bound <= lambda_n(U) + 1e-9; K_{d,d} reaches 2."""
    rng = np.random.default_rng(66)
    for _ in range(200):
        n = int(rng.integers(2, 15))
        g = random_weighted_graph(n, rng, loop_prob=0.1, weight_high=2.0)
        u = Potential(rng.uniform(0.0, 3.0, n))
        res = lambda_n_lower(g, u, strategy="exhaustive", max_n=14)
        assert res.bound <= res.lambda_n + 1e-9

    for d in range(2, 7):
        res = lambda_n_lower(bipartite_complete(d), strategy="exhaustive")
        assert abs(res.bound - 2.0) <= 1e-10
        assert res.partition.part_a == tuple(range(1, d + 1))
    _verdict("criterion 6 (lambda_n lower bound)", True)


def test_criterion_7_jost_mulas_sandwich():
    """S/|E| <= Q <= lambda_n(0) <= 0.54 n Q on 500 random graphs."""
    rng = np.random.default_rng(77)
    for _ in range(500):
        g = random_connected_graph(int(rng.integers(2, 13)), rng)
        q = jost_mulas_q(g)
        lam_n = float(eigenvalues(build_operator(g), want_vectors=False).values[-1])
        edges = edge_count(g)
        assert surface_area(g) / edges <= q + 1e-9
        assert q <= lam_n + 1e-9
        assert lam_n <= 0.54 * g.n * q + 1e-9
    _verdict("criterion 7 (Q sandwich)", True)


def test_criterion_8_surgery_inequalities_exact():
    """1000 rational-exact applications per operation, zero violations."""
    rng = np.random.default_rng(88)

    for _ in range(1000):
        g1 = random_connected_graph(int(rng.integers(2, 11)), rng)
        g2 = random_connected_graph(int(rng.integers(2, 11)), rng)
        i1 = int(rng.integers(1, g1.n + 1))
        i2 = int(rng.integers(1, g2.n + 1))
        out = glue_at_vertices(g1, g2, i1, i2)
        assert out.inequality_ok
        assert rational_surface(out.result[0].adj) <= rational_surface(g1.adj) + rational_surface(g2.adj)

    done = 0
    while done < 1000:
        g = random_tree(int(rng.integers(4, 11)), rng)
        candidates = []
        for i in range(g.n):
            for j in range(i + 1, g.n):
                if g.adj[i, j] == 0.0:
                    continue
                trimmed = np.array(g.adj)
                trimmed[i, j] = trimmed[j, i] = 0.0
                if trimmed[:, i].sum() == 0.0 or trimmed[:, j].sum() == 0.0:
                    continue
                candidates.append((i + 1, j + 1))
        if not candidates:
            continue
        i, j = candidates[int(rng.integers(0, len(candidates)))]
        out = cut_edge(g, i, j)
        assert out.inequality_ok
        total = sum((rational_surface(p.adj) for p in out.result), Fraction(0))
        assert rational_surface(g.adj) <= total
        done += 1

    for _ in range(1000):
        g = random_connected_graph(int(rng.integers(2, 11)), rng)
        out = attach_pending_edge(g, int(rng.integers(1, g.n + 1)))
        assert out.inequality_ok
        assert rational_surface(g.adj) <= rational_surface(out.result[0].adj)
    _verdict("criterion 8 (surgery monotonicity, exact)", True, "3000 applications")


def test_criterion_9_social_classification_and_determinism(capsys):
    """complete -> social, path -> not_social, byte-identical CLI reruns."""
    outputs = {}
    for family in ("complete", "path"):
        runs = []
        for _ in range(2):
            code = cli_main(["sequence", "--family", family, "--param", "4..64"])
            captured = capsys.readouterr()
            assert code == 0
            runs.append(captured.out)
        assert runs[0] == runs[1], "sequence output is not deterministic"
        outputs[family] = json.loads(runs[0])
    assert outputs["complete"]["classification"] == "social"
    assert outputs["path"]["classification"] == "not_social"
    with capsys.disabled():
        _verdict("criterion 9 (social classification + determinism)", True)


def test_criterion_10_cauchy_schwarz_floor():
    """S >= n^2/vol everywhere; exact equality on regular graphs."""
    corpus = []
    corpus += [complete(n) for n in range(2, 13)]
    corpus += [cycle(k) for k in range(3, 13)]
    corpus += [bipartite_complete(d) for d in range(1, 6)]
    corpus += [star(m) for m in range(1, 11)]
    corpus += [path(k) for k in range(1, 13)]
    corpus += [barbell(n) for n in range(2, 7)]
    corpus += [grid(2, 3), grid(3, 3), wheel(6), star_path(5, 4)]
    rng = np.random.default_rng(100)
    corpus += [random_weighted_graph(int(rng.integers(2, 21)), rng, loop_prob=0.1) for _ in range(100)]

    for g in corpus:
        s_exact = rational_surface(g.adj)
        vol = sum(sum(Fraction(float(w)) for w in g.adj[:, j]) for j in range(g.n))
        floor = Fraction(g.n * g.n) / vol
        assert s_exact >= floor
        degrees = [sum(Fraction(float(w)) for w in g.adj[:, j]) for j in range(g.n)]
        if all(d == degrees[0] for d in degrees):
            assert s_exact == floor
    # Spot-check that the regular members really exercised the equality leg.
    assert surface_area_exact(cycle(9)) == Fraction(81, 18)
    _verdict("criterion 10 (Cauchy-Schwarz floor)", True, f"{len(corpus)} graphs")
