"""Dense symmetric linear algebra used by the path machinery.

Everything here is 64-bit dense: a hand-rolled Cholesky, a cyclic Jacobi
eigensolver used as the simplicity/gap oracle, and the dominant eigenpair
of L_i^{-1} W by inverse power iteration.  Instances stay small (family
graphs reduce to O(ell) vertices under their quotients), so robustness is
preferred over asymptotics throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import (
    NoConvergence,
    NotPositiveDefinite,
    ZeroWeightMatrix,
    ZeroWNorm,
)
from .graph import WeightedGraph

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10_000


def cholesky(A: np.ndarray) -> np.ndarray:
    """Lower-triangular Cholesky factor of a symmetric positive definite
    matrix.

    Raises NotPositiveDefinite with the failing pivot index when a pivot
    drops to or below n * eps * max(diag(A)); per the grounded-Laplacian
    connection this certifies the underlying graph is not positively
    connected.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if A.ndim != 2 or A.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    max_diag = float(A.diagonal().max(initial=0.0))
    threshold = n * np.finfo(float).eps * max_diag
    L = np.zeros_like(A)
    for j in range(n):
        d = A[j, j] - L[j, :j] @ L[j, :j]
        if d <= threshold:
            raise NotPositiveDefinite(j)
        L[j, j] = np.sqrt(d)
        if j + 1 < n:
            L[j + 1 :, j] = (A[j + 1 :, j] - L[j + 1 :, :j] @ L[j, :j]) / L[j, j]
    return L


def full_eigen(
    A: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = 100
) -> tuple[np.ndarray, np.ndarray]:
    """All eigenpairs of a symmetric matrix by cyclic Jacobi rotations.

    Returns (values, vectors) with values sorted descending and
    vectors[:, k] the unit eigenvector for values[k].  Convergence is
    reached when the off-diagonal Frobenius norm falls below
    tol * max(1, ||A||_F); the max(1, .) guard makes the tolerance
    behave absolutely for the unit-scale matrices this package feeds it
    while staying attainable for larger inputs.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if A.ndim != 2 or A.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    A = (A + A.T) / 2.0
    V = np.eye(n)
    if n == 1:
        return A.diagonal().copy(), V
    target = tol * max(1.0, float(np.linalg.norm(A, "fro")))

    def off_norm(M: np.ndarray) -> float:
        # summing the off entries directly avoids the cancellation that
        # ||M||_F^2 - ||diag||_F^2 suffers once M is nearly diagonal
        off = M.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    def finish() -> tuple[np.ndarray, np.ndarray]:
        order = np.argsort(-A.diagonal(), kind="stable")
        return A.diagonal()[order].copy(), V[:, order].copy()

    for sweep in range(max_sweeps):
        off = off_norm(A)
        if off <= target:
            return finish()
        # early sweeps only chase the dominant entries; afterwards every
        # nonzero pair is rotated, which is what makes the convergence
        # quadratic, and entries that cannot move their diagonals any
        # more are flushed to exact zero
        thresh = 0.2 * off * off / (n * n) if sweep < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                g = 100.0 * abs(apq)
                if (
                    sweep >= 4
                    and abs(A[p, p]) + g == abs(A[p, p])
                    and abs(A[q, q]) + g == abs(A[q, q])
                ):
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    continue
                if abs(apq) <= thresh:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                diff = aqq - app
                if abs(diff) + g == abs(diff):
                    t = apq / diff
                else:
                    tau = diff / (2.0 * apq)
                    if tau >= 0:
                        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                col_p = V[:, p].copy()
                col_q = V[:, q].copy()
                V[:, p] = c * col_p - s * col_q
                V[:, q] = s * col_p + c * col_q
    if off_norm(A) <= target:
        return finish()
    raise NoConvergence(max_sweeps, "Jacobi eigensolver")


def grounded_laplacian(graph: WeightedGraph, i: int) -> tuple[np.ndarray, np.ndarray]:
    """Laplacian with row and column i removed, plus the kept original
    indices (ascending)."""
    graph._check_vertex(i)
    keep = np.array([j for j in range(graph.n) if j != i], dtype=int)
    L = graph.laplacian()
    return L[np.ix_(keep, keep)], keep


def restricted_weights(graph: WeightedGraph, i: int) -> np.ndarray:
    """Vertex weights with entry i removed."""
    graph._check_vertex(i)
    return np.delete(graph.vertex_weight, i)


def w_norm(g: np.ndarray, w: np.ndarray) -> float:
    """Weighted 2-norm sqrt(sum w_j g_j^2); raises ZeroWNorm if zero."""
    val = float(np.sqrt(np.sum(w * g * g)))
    if val == 0.0:
        raise ZeroWNorm("function has zero weighted norm")
    return val


@dataclass
class EigenPair:
    """Dominant eigenpair of L_i^{-1} W.

    value is the dominant eigenvalue mu; vector has unit w-norm and all
    positive entries after sign normalization whenever the grounded
    graph minus i is positively connected.  residual is
    ||W v - mu L_i v||_inf.  gap is mu minus the second-largest
    eigenvalue (inf for 1x1 systems, nan when not computed); simple
    records whether gap > 1e-10 * mu.
    """

    value: float
    vector: np.ndarray
    residual: float
    gap: float
    iterations: int
    simple: bool


def dominant_pair(
    L_i: np.ndarray,
    w: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    compute_gap: bool = True,
) -> EigenPair:
    """Dominant eigenpair of L_i^{-1} W by inverse power iteration.

    L_i must be positive definite and w a nonnegative diagonal (given as
    a vector) with at least one positive entry.  Each step solves
    L_i x' = W x through the Cholesky factor and renormalizes in the
    w-norm; iteration stops when successive iterates agree to tol in the
    max norm.  The gap is found by running the full Jacobi solver on the
    symmetric matrix C^-1 W C^-T, which shares the spectrum of
    L_i^{-1} W.
    """
    L_i = np.asarray(L_i, dtype=float)
    w = np.asarray(w, dtype=float)
    m = L_i.shape[0]
    if w.shape != (m,):
        raise ValueError(f"weight vector shape {w.shape} does not match {m}x{m} matrix")
    if not np.any(w > 0):
        raise ZeroWeightMatrix("diagonal weight matrix is identically zero")
    C = cholesky(L_i)

    def solve(b: np.ndarray) -> np.ndarray:
        y = solve_triangular(C, b, lower=True)
        return solve_triangular(C.T, y, lower=False)

    x = np.ones(m)
    x /= w_norm(x, w)
    mu = 0.0
    iterations = 0
    for iterations in range(1, max_iter + 1):
        y = solve(w * x)
        mu = float(np.sum(w * x * y))  # Rayleigh quotient; x has unit w-norm
        x_new = y / w_norm(y, w)
        diff = float(np.max(np.abs(x_new - x)))
        x = x_new
        if diff <= tol:
            break
    else:
        raise NoConvergence(max_iter, "inverse power iteration")

    first_pos = int(np.argmax(w > 0))
    if x[first_pos] < 0:
        x = -x
    residual = float(np.max(np.abs(w * x - mu * (L_i @ x))))

    gap = np.nan
    simple = True
    if compute_gap:
        if m == 1:
            gap = np.inf
        else:
            M = solve_triangular(C, np.diag(w), lower=True)
            M = solve_triangular(C, M.T, lower=True).T
            values, _ = full_eigen(M)
            gap = float(values[0] - values[1])
            simple = gap > 1e-10 * values[0]

    return EigenPair(
        value=mu,
        vector=x,
        residual=residual,
        gap=gap,
        iterations=iterations,
        simple=simple,
    )


def rayleigh_c(graph: WeightedGraph, f: np.ndarray) -> float:
    """Dirichlet quotient sum_{jk in E} w_E(j,k)(f(k)-f(j))^2 / ||f||_w^2.

    The grounded eigenfunction minimizes this over functions vanishing
    at the special vertex; its minimum equals 1/mu.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (graph.n,):
        raise ValueError(f"expected {graph.n} values, got shape {f.shape}")
    denom = np.sum(graph.vertex_weight * f * f)
    if denom == 0.0:
        raise ZeroWNorm("function has zero weighted norm")
    num = 0.0
    for (u, v), wt in graph.edges.items():
        d = f[v] - f[u]
        num += wt * d * d
    return float(num / denom)
