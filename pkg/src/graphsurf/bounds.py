"""Eigenvalue bounds: Cheeger-type, Randic-based, planar, and the gap study.

Four bound families are computed and checked against the certified
spectrum:

* an upper bound on lambda_2(U) through the Cheeger constant,
* a lower bound on lambda_n(U) maximized over vertex bipartitions,
  evaluated through the Rayleigh quotient of the sign vector
  f_j = +-1/sqrt(deg j) (this is the form that is provably a valid
  bound; a half-weight variant that circulates is reported alongside
  for comparison but is not certified),
* the edge-local constant Q = max over edges of 1/deg(i) + 1/deg(j)
  and its sandwich around lambda_n(0),
* an upper bound on lambda_2(0) for planar graphs, (8 delta + Theta)/S,
  compared against the max-degree bound 8 maxdeg / vol(V).

The star-path family S_{m,n} (star on m leaves whose center starts a
path of n edges) is the worked example where the planar bound can beat
the max-degree bound; gap_gamma quantifies the difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cheeger import DEFAULT_EXACT_MAX, cheeger_exact, cheeger_sweep
from .generators import star_path
from .graphs import (
    Graph,
    GraphError,
    Partition,
    diameter,
    edge_count,
    euler_planarity_check,
    is_connected,
    max_degree,
)
from .spectral import (
    DEFAULT_IDENTITY_TOL,
    Potential,
    build_operator,
    eigenvalues,
    trace_formula_check,
)
from .surface import (
    cauchy_schwarz_floor,
    connectivity,
    effective_surface_area,
    generalized_surface_area,
    surface_area,
)

__all__ = [
    "RandicValue",
    "randic",
    "restricted_randic",
    "DegreeLevels",
    "degree_levels",
    "theta",
    "jost_mulas_q",
    "lambda2_upper_cheeger",
    "LowerBoundResult",
    "lambda_n_lower",
    "planar_lambda2_bound",
    "pluemer_bound",
    "gap_gamma",
    "full_report",
    "star_path_surface_closed",
    "star_path_delta_closed",
    "star_path_theta_closed",
    "star_path_planar_bound_closed",
    "star_path_pluemer_closed",
    "gap_gamma_closed",
]

DEFAULT_PARTITION_MAX = 18
_CHUNK_BITS = 16
JOST_MULAS_TAU_CAP = 0.54  # lambda_n(0) < 0.54 * n * Q


@dataclass(frozen=True)
class RandicValue:
    alpha: float
    scope: str  # "global", "cross", "within_a", "within_b"
    value: float


def randic(g: Graph, alpha: float) -> RandicValue:
    """R_alpha = (1/2) sum_{i,j} a_ij (deg(i) deg(j))^alpha.

    The double sum runs over ordered pairs including the diagonal, so a
    loop contributes a_jj deg(j)^{2 alpha} / 2. In the unweighted
    loop-free case this is the classical Randic index (alpha = -1/2
    being the original).
    """
    d = g.deg
    value = 0.5 * float((g.adj * np.outer(d, d) ** alpha).sum())
    return RandicValue(alpha=alpha, scope="global", value=value)


def restricted_randic(g: Graph, alpha: float, p: Partition, scope: str = "cross") -> RandicValue:
    """Randic sum restricted to V_a x V_b ("cross") or one side squared."""
    p.validate_for(g)
    chi_a = np.zeros(g.n)
    chi_b = np.zeros(g.n)
    chi_a[[v - 1 for v in p.part_a]] = 1.0
    chi_b[[v - 1 for v in p.part_b]] = 1.0
    if scope == "cross":
        left, right = chi_a, chi_b
    elif scope == "within_a":
        left = right = chi_a
    elif scope == "within_b":
        left = right = chi_b
    else:
        raise GraphError(f"unknown scope {scope!r} (expected cross, within_a, within_b)")
    d = g.deg
    weights = g.adj * np.outer(d, d) ** alpha
    value = 0.5 * float((weights * np.outer(left, right)).sum())
    return RandicValue(alpha=alpha, scope=scope, value=value)


def _degree_keys(deg: np.ndarray) -> list[float]:
    # Weighted degrees are sums of input weights; comparing after rounding
    # to 12 significant digits keeps classes stable against summation noise.
    return [float(f"{d:.12g}") for d in deg]


@dataclass(frozen=True)
class DegreeLevels:
    """Equivalence classes of equal weighted degree and their reciprocal sum."""

    classes: tuple[tuple[int, ...], ...]  # vertex groups, ordered by degree
    degrees: tuple[float, ...]  # representative degree per class
    delta: float  # sum of 1/deg over the distinct degrees


def degree_levels(g: Graph) -> DegreeLevels:
    keys = _degree_keys(g.deg)
    groups: dict[float, list[int]] = {}
    for v, key in enumerate(keys, start=1):
        groups.setdefault(key, []).append(v)
    ordered = sorted(groups)
    classes = tuple(tuple(groups[k]) for k in ordered)
    reps = tuple(float(g.deg[groups[k][0] - 1]) for k in ordered)
    return DegreeLevels(classes=classes, degrees=reps, delta=float(sum(1.0 / d for d in reps)))


def theta(g: Graph) -> float:
    """Ordered-pair sum of a_ij (1/deg(i)^2 + 1/deg(j)^2) over unequal degrees.

    No 1/2 factor: each unequal-degree edge contributes twice. Regular
    graphs give exactly zero.
    """
    keys = np.array(_degree_keys(g.deg))
    unequal = keys[:, None] != keys[None, :]
    inv2 = 1.0 / g.deg**2
    return float((g.adj * unequal * (inv2[:, None] + inv2[None, :])).sum())


def jost_mulas_q(g: Graph) -> float:
    """Q = max over edges of 1/deg(i) + 1/deg(j) (unweighted loop-free only)."""
    if not g.unweighted or not g.loop_free:
        raise GraphError("Q is defined for unweighted loop-free graphs")
    inv = 1.0 / g.deg
    pair = inv[:, None] + inv[None, :]
    masked = np.where(g.adj != 0.0, pair, -np.inf)
    return float(masked.max())


def lambda2_upper_cheeger(
    g: Graph,
    u: Potential | None = None,
    tol: float = DEFAULT_IDENTITY_TOL,
    exact_cheeger_max: int = DEFAULT_EXACT_MAX,
) -> dict:
    """lambda_2(U) <= lambda_2(0) + S_U <= 2 h + S_U, with h exact or swept.

    When the exact Cheeger cap forces the sweep value the chain still
    holds (the sweep ratio dominates h).
    """
    if not is_connected(g):
        raise GraphError("the lambda_2 bound chain requires a connected graph")
    if u is None:
        u = Potential.zeros(g.n)
    lam2_u = float(eigenvalues(build_operator(g, u), want_vectors=False).values[1])
    lam2_0 = float(eigenvalues(build_operator(g), want_vectors=False).values[1])
    s_u = effective_surface_area(g, u)
    if g.n <= exact_cheeger_max:
        cut = cheeger_exact(g, max_n=exact_cheeger_max)
    else:
        cut = cheeger_sweep(g)
    bound_minmax = lam2_0 + s_u
    bound_cheeger = 2.0 * cut.ratio + s_u
    slack = tol * max(1.0, abs(bound_cheeger))
    return {
        "lambda2_u": lam2_u,
        "lambda2_0": lam2_0,
        "s_u": s_u,
        "h": cut.ratio,
        "cheeger_method": cut.method,
        "bound_minmax": bound_minmax,
        "bound_cheeger": bound_cheeger,
        "pass": bool(lam2_u <= bound_minmax + slack and bound_minmax <= bound_cheeger + slack),
    }


@dataclass(frozen=True)
class LowerBoundResult:
    """Best certified lower bound for lambda_n(U) over the searched partitions."""

    partition: Partition
    bound: float
    statement_variant: float  # half-weight variant, reported for comparison only
    lambda_n: float
    strategy: str
    ok: bool


def _partition_bound_terms(g: Graph, s: np.ndarray) -> float:
    b = g.adj / np.outer(g.deg, g.deg)
    return float(s @ b @ s)


def _bound_from_quad(quad: float, s_total: float, su2: float) -> float:
    return 1.0 - quad / s_total + su2 / s_total


def lambda_n_lower(
    g: Graph,
    u: Potential | None = None,
    strategy: str = "auto",
    max_n: int = DEFAULT_PARTITION_MAX,
    partition: Partition | None = None,
    tol: float = DEFAULT_IDENTITY_TOL,
) -> LowerBoundResult:
    """Maximize the sign-vector Rayleigh bound for lambda_n(U).

    For a bipartition (V_a, V_b) the test vector f_j = +-1/sqrt(deg j)
    (plus on V_a) has Rayleigh quotient

        1 + (2 C - W_a - W_b)/S + S_U(.,2)/S,

    where C sums a_ij/(d_i d_j) over ordered cross pairs and W_a, W_b
    over ordered within pairs. Every value is a genuine lower bound;
    the maximum over partitions is returned.

    Strategies: "exhaustive" enumerates the 2^(n-1)-1 bipartitions
    (refused above ``max_n``), "eigenvector_sign" splits by the sign of
    the top eigenvector, "given" evaluates ``partition``, and "auto"
    picks exhaustive when feasible.
    """
    if not is_connected(g):
        raise GraphError("the lambda_n lower bound requires a connected graph")
    if g.n < 2:
        raise GraphError("a bipartition needs at least 2 vertices")
    if u is None:
        u = Potential.zeros(g.n)

    s_total = surface_area(g)
    su2 = generalized_surface_area(g, u, 2.0)
    spec = eigenvalues(build_operator(g, u))
    lam_n = float(spec.values[-1])

    if strategy == "auto":
        strategy = "exhaustive" if g.n <= max_n else "eigenvector_sign"

    if strategy == "given":
        if partition is None:
            raise GraphError("strategy 'given' requires a partition")
        partition.validate_for(g)
        s = np.full(g.n, -1.0)
        s[[v - 1 for v in partition.part_a]] = 1.0
        quad = _partition_bound_terms(g, s)
        best_partition, best_quad = partition, quad
    elif strategy == "eigenvector_sign":
        v = np.array(spec.vectors[:, -1])
        if v[0] < 0:
            v = -v
        side_a = [i + 1 for i in range(g.n) if v[i] >= 0]
        if len(side_a) == g.n:
            # Degenerate all-one-sign case: peel off the weakest entry.
            side_a.remove(int(np.argmin(v)) + 1)
        best_partition = Partition.from_side(g, side_a)
        s = np.full(g.n, -1.0)
        s[[w - 1 for w in best_partition.part_a]] = 1.0
        best_quad = _partition_bound_terms(g, s)
    elif strategy == "exhaustive":
        if g.n > max_n:
            raise GraphError(
                f"exhaustive partition search capped at n = {max_n} (got {g.n}); "
                "use the eigenvector_sign strategy instead"
            )
        best_partition, best_quad = _exhaustive_partition(g)
    else:
        raise GraphError(f"unknown strategy {strategy!r}")

    bound = _bound_from_quad(best_quad, s_total, su2)
    statement = 1.0 - best_quad / (2.0 * s_total) + su2 / s_total
    ok = bound <= lam_n + tol * max(1.0, abs(lam_n))
    return LowerBoundResult(
        partition=best_partition,
        bound=bound,
        statement_variant=statement,
        lambda_n=lam_n,
        strategy=strategy,
        ok=bool(ok),
    )


def _exhaustive_partition(g: Graph) -> tuple[Partition, float]:
    """Minimize the signed quadratic over all bipartitions with 1 in V_a."""
    n = g.n
    b = g.adj / np.outer(g.deg, g.deg)
    shifts = np.arange(n - 1, dtype=np.uint64)
    count = (1 << (n - 1)) - 1  # masks 1..count, mask bits flag V_b membership

    best_quad = np.inf
    best_side: tuple[int, ...] | None = None
    for start in range(1, count + 1, 1 << _CHUNK_BITS):
        stop = min(start + (1 << _CHUNK_BITS), count + 1)
        masks = np.arange(start, stop, dtype=np.uint64)
        signs = np.empty((masks.size, n))
        signs[:, 0] = 1.0
        signs[:, 1:] = 1.0 - 2.0 * ((masks[:, None] >> shifts[None, :]) & np.uint64(1))
        quads = ((signs @ b) * signs).sum(axis=1)
        q_min = float(quads.min())
        if q_min > best_quad:
            continue
        for i in np.flatnonzero(quads == q_min):
            side = tuple(int(v) + 1 for v in np.flatnonzero(signs[i] > 0))
            if q_min < best_quad or (best_side is not None and side < best_side):
                best_quad, best_side = q_min, side
    assert best_side is not None
    return Partition.from_side(g, best_side), best_quad


def _planarity_gate(g: Graph, planar_asserted: bool) -> tuple[bool, str | None]:
    """Shared applicability logic for the planar-hypothesis bounds."""
    if not g.loop_free:
        return False, "loops present"
    euler = euler_planarity_check(g)
    if euler == "violated":
        if planar_asserted:
            raise GraphError(
                "planarity was asserted but the edge count violates |E| <= 3n - 6"
            )
        return False, "edge count violates the planar bound"
    if not planar_asserted:
        return False, "planarity not asserted"
    if not g.unweighted:
        # The inequality is only asserted for unweighted planar input;
        # the value is still reported.
        return False, "weighted graph: bound reported, not asserted"
    return True, None


def planar_lambda2_bound(g: Graph, planar_asserted: bool) -> dict:
    """(8 delta + Theta) / S, an upper bound on lambda_2(0) for planar graphs."""
    applicable, reason = _planarity_gate(g, planar_asserted)
    if not g.loop_free:
        return {"bound": None, "applicable": False, "reason": reason}
    levels = degree_levels(g)
    s = surface_area(g)
    bound = (8.0 * levels.delta + theta(g)) / s
    return {"bound": bound, "applicable": applicable, "reason": reason}


def pluemer_bound(g: Graph, planar_asserted: bool) -> dict:
    """Max-degree upper bound 8 maxdeg / vol(V) for planar graphs.

    For unweighted graphs the weaker variant 8 maxdeg / S is reported
    as well (S <= vol there).
    """
    applicable, reason = _planarity_gate(g, planar_asserted)
    if not g.loop_free:
        return {"bound_volume": None, "bound_surface": None, "applicable": False, "reason": reason}
    md = max_degree(g)
    vol = float(g.deg.sum())
    out = {
        "bound_volume": 8.0 * md / vol,
        "bound_surface": 8.0 * md / surface_area(g) if g.unweighted else None,
        "applicable": applicable,
        "reason": reason,
    }
    return out


def star_path_surface_closed(m: int, n: int) -> float:
    return m + 1.0 / (m + 1) + (n + 1) / 2.0


def star_path_delta_closed(m: int) -> float:
    return 1.5 + 1.0 / (m + 1)


def star_path_theta_closed(m: int) -> float:
    return 2.0 * m + 3.0 + 2.0 / (m + 1)


def star_path_planar_bound_closed(m: int, n: int) -> float:
    return (15.0 + 10.0 / (m + 1) + 2.0 * m) / star_path_surface_closed(m, n)


def star_path_pluemer_closed(m: int, n: int) -> float:
    return 8.0 * (m + 1) / (2.0 * m + 2.0 * n)


def gap_gamma_closed(m: int, n: int) -> float:
    num = 2.0 * (-2.0 * m**3 + 7.0 * m**2 + 13.0 * m * n + 13.0 * m + 23.0 * n - 6.0)
    den = (m + n) * (2.0 * m**2 + m * n + 3.0 * m + n + 3.0)
    return num / den


def gap_gamma(m: int, n: int) -> dict:
    """Planar bound minus max-degree bound on S_{m,n}, direct and closed form.

    The closed form assumes at least one interior path vertex; for
    n = 1 the star-path degenerates to a star (no degree-2 vertex) and
    the direct value deviates from the closed form. For n >= 2 the two
    agree to rounding error.
    """
    if m <= 2 or n < 1:
        raise GraphError("gap study requires m > 2 and n >= 1")
    g = star_path(m, n)
    direct = (
        planar_lambda2_bound(g, planar_asserted=True)["bound"]
        - pluemer_bound(g, planar_asserted=True)["bound_volume"]
    )
    closed = gap_gamma_closed(m, n)
    return {"m": m, "n": n, "direct": direct, "closed_form": closed, "negative": direct < 0.0}


def full_report(
    g: Graph,
    u: Potential | None = None,
    planar_asserted: bool = False,
    tol: float = DEFAULT_IDENTITY_TOL,
    exact_cheeger_max: int = DEFAULT_EXACT_MAX,
    partition_exhaustive_max: int = DEFAULT_PARTITION_MAX,
    include_spectrum: bool = True,
) -> dict:
    """Every invariant and theorem-backed inequality for one (graph, potential).

    Component failures (e.g. Cheeger data on a disconnected graph) are
    recorded under ``errors`` instead of aborting the report. Each
    inequality row carries lhs, rhs, and a pass flag at tolerance
    ``tol``; violations signal an implementation bug, since all of them
    are theorems.
    """
    if u is None:
        u = Potential.zeros(g.n)
    errors: dict[str, str] = {}
    inequalities: list[dict] = []

    def attempt(key: str, fn):
        try:
            return fn()
        except Exception as exc:  # per-field capture is the contract here
            errors[key] = str(exc)
            return None

    def check(name: str, lhs, rhs, identity: bool = False):
        if lhs is None or rhs is None:
            return
        slack = tol * max(1.0, abs(lhs), abs(rhs))
        ok = abs(lhs - rhs) <= slack if identity else lhs <= rhs + slack
        inequalities.append({"name": name, "lhs": lhs, "rhs": rhs, "pass": bool(ok)})

    report: dict = {
        "n": g.n,
        "edge_count": edge_count(g),
        "unweighted": g.unweighted,
        "loop_free": g.loop_free,
        "connected": is_connected(g),
    }
    diam = attempt("diameter", lambda: diameter(g))
    report["diameter"] = diam if diam is not None and math.isfinite(diam) else None
    if diam is not None and not math.isfinite(diam):
        errors["diameter"] = "graph is disconnected"

    s = surface_area(g)
    s_u = effective_surface_area(g, u)
    floor = cauchy_schwarz_floor(g)
    report.update(
        {
            "s": s,
            "s_u": s_u,
            "connectivity": connectivity(g),
            "cs_floor": floor,
        }
    )
    check("cs_floor_le_s", floor, s)

    spec_u = attempt("spectrum_u", lambda: eigenvalues(build_operator(g, u)))
    spec_0 = attempt("spectrum_0", lambda: eigenvalues(build_operator(g)))
    lam2_u = lam2_0 = lam_n_u = lam_n_0 = None
    if spec_u is not None and spec_0 is not None:
        lam2_u = float(spec_u.values[1]) if g.n >= 2 else None
        lam2_0 = float(spec_0.values[1]) if g.n >= 2 else None
        lam_n_u = float(spec_u.values[-1])
        lam_n_0 = float(spec_0.values[-1])
        report.update(
            {
                "lambda1": float(spec_u.values[0]),
                "lambda2": lam2_u,
                "lambda_n": lam_n_u,
                "lambda2_0": lam2_0,
                "lambda_n_0": lam_n_0,
                "max_residual": float(max(spec_u.residuals.max(), spec_0.residuals.max())),
            }
        )
        if include_spectrum:
            report["spectrum"] = [float(x) for x in spec_u.values]
        check("lambda_n_le_2_plus_su", lam_n_u, 2.0 + s_u)

    trace = attempt("trace_formula", lambda: trace_formula_check(g, u, tol=tol))
    if trace is not None:
        report["trace_formula"] = trace
        check("trace_identity_u", trace["eigenvalue_sum"], trace["trace_closed_form"], identity=True)
        check("trace_identity_shift", trace["shift_sum"], trace["s_u"], identity=True)

    cut = attempt(
        "cheeger",
        lambda: cheeger_exact(g, max_n=exact_cheeger_max)
        if g.n <= exact_cheeger_max
        else cheeger_sweep(g),
    )
    sweep = attempt("cheeger_sweep", lambda: cheeger_sweep(g))
    if cut is not None:
        report["h_exact_or_sweep"] = cut.ratio
        report["cheeger_method"] = cut.method
        report["cheeger_cut"] = list(cut.cut_set)
        check("lambda2_0_le_2h", lam2_0, 2.0 * cut.ratio)
        report["upper_lambda2_minmax"] = None if lam2_0 is None else lam2_0 + s_u
        report["upper_lambda2_cheeger"] = 2.0 * cut.ratio + s_u
        check("lambda2_u_le_minmax_bound", lam2_u, report["upper_lambda2_minmax"])
        check("lambda2_u_le_cheeger_bound", lam2_u, report["upper_lambda2_cheeger"])
        if sweep is not None and cut.method == "exact":
            report["sweep_ratio"] = sweep.ratio
            check("h_exact_le_sweep", cut.ratio, sweep.ratio)

    lower = attempt(
        "lower_lambda_n",
        lambda: lambda_n_lower(g, u, strategy="auto", max_n=partition_exhaustive_max, tol=tol),
    )
    if lower is not None:
        report["lower_lambda_n"] = lower.bound
        report["lower_lambda_n_partition"] = list(lower.partition.part_a)
        report["lower_lambda_n_statement_variant"] = lower.statement_variant
        report["lower_lambda_n_strategy"] = lower.strategy
        check("lambda_n_lower_le_lambda_n", lower.bound, lam_n_u)

    q = attempt("jost_mulas_q", lambda: jost_mulas_q(g))
    report["jost_mulas_q"] = q
    if q is not None:
        edges = edge_count(g)
        check("q_le_lambda_n0", q, lam_n_0)
        check("s_le_edges_q", s, edges * q)
        check("s_over_edges_le_lambda_n0", s / edges, lam_n_0)
        check("lambda_n0_le_tau_cap", lam_n_0, JOST_MULAS_TAU_CAP * g.n * q)

    levels = attempt("degree_levels", lambda: degree_levels(g))
    if levels is not None:
        report["delta"] = levels.delta
        report["degree_level_degrees"] = list(levels.degrees)
    report["theta"] = attempt("theta", lambda: theta(g))
    report["planar_asserted"] = planar_asserted
    report["euler_check"] = euler_planarity_check(g)

    planar = attempt("planar_bound", lambda: planar_lambda2_bound(g, planar_asserted))
    if planar is not None:
        report["planar_bound"] = planar["bound"]
        report["planar_bound_applicable"] = planar["applicable"]
        if planar["applicable"]:
            check("planar_lambda2_le_bound", lam2_0, planar["bound"])

    pluemer = attempt("pluemer_bound", lambda: pluemer_bound(g, planar_asserted))
    if pluemer is not None:
        report["pluemer_bound"] = pluemer["bound_volume"]
        report["pluemer_bound_surface"] = pluemer["bound_surface"]
        report["pluemer_bound_applicable"] = pluemer["applicable"]
        if pluemer["applicable"]:
            check("pluemer_lambda2_le_bound", lam2_0, pluemer["bound_volume"])
            if pluemer["bound_surface"] is not None:
                check("pluemer_lambda2_le_surface_bound", lam2_0, pluemer["bound_surface"])

    report["inequalities"] = inequalities
    report["all_inequalities_pass"] = all(row["pass"] for row in inequalities)
    report["errors"] = errors
    return report
