"""Normalized Schrodinger operator, its spectrum, and the trace identity.

The operator is H_U = Id - D^{-1/2} (A - U) D^{-1/2} for a graph with
adjacency A, degree matrix D, and diagonal potential U = diag(sigma).
With sigma = 0 this is the normalized Laplacian. Eigenvalues come with
per-pair residual certificates so identity and inequality checks
downstream rest on quantified numerics rather than solver trust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, GraphError, connected_components, is_connected
from .surface import Potential, effective_surface_area

__all__ = [
    "SchrodingerOperator",
    "Spectrum",
    "EigensolverError",
    "build_operator",
    "quadratic_form",
    "dirichlet_form",
    "eigenvalues",
    "jacobi_eigenvalues",
    "trace_formula_check",
    "fiedler_vector",
]

DEFAULT_RESIDUAL_TOL = 1e-8  # relative to the Frobenius norm of H
DEFAULT_IDENTITY_TOL = 1e-9  # relative to max(1, |lhs|)


class EigensolverError(RuntimeError):
    """Eigendecomposition failed or residual certification was not met."""

    def __init__(self, message: str, residuals: np.ndarray | None = None):
        super().__init__(message)
        self.residuals = residuals


@dataclass(frozen=True, eq=False)
class SchrodingerOperator:
    """Dense symmetric H_U together with the graph and potential it encodes."""

    matrix: np.ndarray
    graph: Graph
    potential: Potential

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def build_operator(g: Graph, u: Potential | None = None) -> SchrodingerOperator:
    """Assemble H_U entrywise; symmetry is exact by construction.

    Entry (i, j) is delta_ij - (a_ij - delta_ij sigma_i) / sqrt(deg(i) deg(j)).
    """
    if u is None:
        u = Potential.zeros(g.n)
    if len(u) != g.n:
        raise GraphError(f"potential length {len(u)} does not match vertex count {g.n}")
    scale = np.sqrt(np.outer(g.deg, g.deg))
    mat = np.eye(g.n) - (g.adj - np.diag(u.sigma)) / scale
    mat.setflags(write=False)
    return SchrodingerOperator(matrix=mat, graph=g, potential=u)


def quadratic_form(op: SchrodingerOperator, f: np.ndarray) -> float:
    """<f, H_U f>, cross-checked against the Dirichlet-sum representation.

    For loop-free graphs the two representations are the same quantity;
    they are asserted to agree so a construction bug cannot pass
    silently. For loopy graphs only the matrix form is authoritative.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (op.n,):
        raise GraphError(f"vector length {f.shape} does not match operator size {op.n}")
    value = float(f @ (op.matrix @ f))
    if op.graph.loop_free:
        alt = dirichlet_form(op.graph, op.potential, f)
        tol = 1e-9 * max(1.0, abs(value), float(f @ f))
        if abs(alt - value) > tol:
            raise AssertionError(
                f"quadratic form mismatch: matrix {value!r} vs Dirichlet sum {alt!r}"
            )
    return value


def dirichlet_form(g: Graph, u: Potential, f: np.ndarray) -> float:
    """(1/2) sum a_ij (f_i/sqrt(d_i) - f_j/sqrt(d_j))^2 + sum sigma_i f_i^2/d_i."""
    f = np.asarray(f, dtype=float)
    scaled = f / np.sqrt(g.deg)
    diff = scaled[:, None] - scaled[None, :]
    return float(0.5 * (g.adj * diff**2).sum() + (u.sigma * f**2 / g.deg).sum())


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues with residual certificates ||Hv - lv||/||H||_F."""

    values: np.ndarray
    residuals: np.ndarray
    vectors: np.ndarray | None = None

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def as_records(self) -> list[dict]:
        return [
            {"lambda": float(l), "residual": float(r)}
            for l, r in zip(self.values, self.residuals)
        ]


def eigenvalues(
    op: SchrodingerOperator,
    tol: float = DEFAULT_RESIDUAL_TOL,
    want_vectors: bool = True,
) -> Spectrum:
    """Full symmetric eigendecomposition with residual certification.

    Residuals above ``tol`` (relative to ||H||_F) raise, carrying the
    best residuals achieved for post-mortem inspection.
    """
    if tol <= 0:
        raise GraphError("residual tolerance must be positive")
    try:
        vals, vecs = np.linalg.eigh(op.matrix)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigendecomposition failed: {exc}") from exc
    norm = float(np.linalg.norm(op.matrix))
    residuals = np.linalg.norm(op.matrix @ vecs - vecs * vals, axis=0)
    if norm > 0:
        residuals = residuals / norm
    worst = float(residuals.max())
    if worst > tol:
        raise EigensolverError(
            f"residual certification failed: worst {worst:.3e} > tol {tol:.3e}",
            residuals=residuals,
        )
    return Spectrum(values=vals, residuals=residuals, vectors=vecs if want_vectors else None)


def jacobi_eigenvalues(matrix: np.ndarray, max_sweeps: int = 64) -> np.ndarray:
    """Cyclic Jacobi reference eigensolver for small symmetric matrices.

    Independent of LAPACK; used as the cross-check path (n <= 64).
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n > 64:
        raise GraphError("Jacobi reference path is limited to n <= 64")
    if not np.array_equal(a, a.T):
        raise GraphError("Jacobi solver requires an exactly symmetric matrix")
    scale = max(1.0, float(np.abs(a).max()))
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = math.sqrt(float((a[off_mask] ** 2).sum()))
        if off <= 1e-14 * scale * n:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # Two-sided rotation in the (p, q) plane, O(n) per pivot.
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    else:
        raise EigensolverError("Jacobi iteration did not converge within the sweep cap")
    return np.sort(np.diagonal(a))


def trace_formula_check(
    g: Graph,
    u: Potential,
    tol: float = DEFAULT_IDENTITY_TOL,
) -> dict:
    """Check both trace identities of the spectrum under a potential.

    (i)  sum lambda_j(U) = n - sum_j a_jj/deg(j) + S_U
    (ii) sum (lambda_j(U) - lambda_j(0)) = S_U

    The eigenvalue sum is additionally cross-checked against the direct
    matrix trace of H_U.
    """
    op_u = build_operator(g, u)
    spec_u = eigenvalues(op_u, want_vectors=False)
    spec_0 = eigenvalues(build_operator(g, Potential.zeros(g.n)), want_vectors=False)

    s_u = effective_surface_area(g, u)
    loop_term = float((np.diagonal(g.adj) / g.deg).sum())
    lhs1 = float(spec_u.values.sum())
    rhs1 = g.n - loop_term + s_u
    lhs2 = float((spec_u.values - spec_0.values).sum())
    matrix_trace = float(np.trace(op_u.matrix))

    err1 = abs(lhs1 - rhs1) / max(1.0, abs(rhs1))
    err2 = abs(lhs2 - s_u) / max(1.0, abs(s_u))
    err_trace = abs(lhs1 - matrix_trace) / max(1.0, abs(matrix_trace))
    return {
        "eigenvalue_sum": lhs1,
        "trace_closed_form": rhs1,
        "shift_sum": lhs2,
        "s_u": s_u,
        "matrix_trace": matrix_trace,
        "relative_errors": [err1, err2, err_trace],
        "pass": bool(err1 <= tol and err2 <= tol and err_trace <= tol),
    }


def fiedler_vector(g: Graph) -> np.ndarray:
    """Unit eigenvector for the second-smallest eigenvalue of H_0.

    Re-orthogonalized against the kernel direction D^{1/2} 1 and given a
    deterministic sign (first entry of magnitude > 1e-12 positive).
    Requires a connected graph.
    """
    if not is_connected(g):
        raise GraphError(
            f"Fiedler vector requires a connected graph ({len(connected_components(g))} components)"
        )
    spec = eigenvalues(build_operator(g, Potential.zeros(g.n)))
    v = np.array(spec.vectors[:, 1])
    kernel = np.sqrt(g.deg)
    kernel /= np.linalg.norm(kernel)
    v -= (v @ kernel) * kernel
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise EigensolverError("Fiedler vector degenerated to the kernel direction")
    v /= norm
    for x in v:
        if abs(x) > 1e-12:
            if x < 0:
                v = -v
            break
    return v
