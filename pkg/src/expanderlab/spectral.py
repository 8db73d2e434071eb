"""Eigenvalue computations for the graph Gram matrices and the discrepancy
(edge-distribution) inequality they drive.

Two independent routes compute the top two eigenvalues: a dense symmetric
eigendecomposition (LAPACK, for n <= 4096) and a hand-rolled power iteration
deflated against the all-ones vector.  The deflation is exact for connected
regular Gram matrices, whose top eigenspace is the line spanned by 1; for
anything else the deflated value is informational only.

Everything the structure theory states exactly (row sums, the Perron vector)
is checked in integer arithmetic; floating point enters only through the
eigenvalues themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fp_core import DomainError
from .spgraph import GramMatrix, SumProductGraph, edge_count

__all__ = [
    "SpectralReport",
    "DiscrepancyRecord",
    "ConvergenceError",
    "eigs_top2",
    "verify_perron",
    "quad_form_bound",
    "discrepancy_check",
    "DENSE_CUTOFF",
]

#: dense eigensolve up to this many rows (p <= 65 for rule graphs)
DENSE_CUTOFF = 4096


class ConvergenceError(RuntimeError):
    """Power iteration failed to meet tolerance within the iteration cap."""


@dataclass
class SpectralReport:
    theta1: float
    theta2: float
    residual1: float
    residual2: float
    method: str  # "dense" | "deflated-power"
    iterations: int
    v1: np.ndarray = field(repr=False, default=None)
    v2: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.theta1 < self.theta2 - 1e-9 * max(1.0, abs(self.theta1)):
            raise ValueError("theta1 must dominate theta2")


def _as_matrix(n) -> np.ndarray:
    if isinstance(n, GramMatrix):
        return n.matrix
    return np.asarray(n)


def _residual(a: np.ndarray, theta: float, v: np.ndarray) -> float:
    nv = np.linalg.norm(v)
    if nv == 0:
        return 0.0
    return float(np.linalg.norm(a @ v - theta * v) / nv)


def _dense_top2(a: np.ndarray) -> tuple[float, float, np.ndarray, np.ndarray]:
    vals, vecs = np.linalg.eigh(a.astype(np.float64))
    return float(vals[-1]), float(vals[-2]), vecs[:, -1], vecs[:, -2]


def _power_iterate(
    af: np.ndarray,
    project: np.ndarray | None,
    tol: float,
    max_iter: int,
    seed: int,
) -> tuple[float, np.ndarray, int]:
    """Rayleigh-quotient power iteration, optionally re-projected each step
    onto the orthogonal complement of ``project`` (a unit vector)."""
    n = af.shape[0]
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    if project is not None:
        v -= (v @ project) * project
    nv = np.linalg.norm(v)
    if nv == 0:  # pragma: no cover - measure zero
        v = np.ones(n)
        nv = math.sqrt(n)
    v /= nv
    prev = math.inf
    for it in range(1, max_iter + 1):
        w = af @ v
        if project is not None:
            w -= (w @ project) * project
        rayleigh = float(v @ w)  # Rayleigh quotient of the current v
        nw = np.linalg.norm(w)
        if nw <= 1e-300:
            return 0.0, v, it  # operator vanishes on the complement
        if abs(rayleigh - prev) <= tol * max(1.0, abs(rayleigh)):
            return rayleigh, v, it
        v = w / nw
        prev = rayleigh
    raise ConvergenceError(
        f"power iteration did not converge within {max_iter} iterations"
    )


def eigs_top2(
    n,
    method: str = "auto",
    tol: float = 1e-10,
    max_iter: int = 100_000,
    seed: int = 0,
    dense_cutoff: int = DENSE_CUTOFF,
) -> SpectralReport:
    """Top two eigenvalues of a symmetric nonnegative integer matrix.

    method "auto" picks dense below ``dense_cutoff`` rows and the deflated
    power iteration above it; "dense" / "power" force a route.
    """
    a = _as_matrix(n)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("need a square matrix")
    if not np.array_equal(a, a.T):
        raise DomainError("matrix is not symmetric")
    size = a.shape[0]
    if method == "auto":
        method = "dense" if size <= dense_cutoff else "power"

    if method == "dense":
        theta1, theta2, v1, v2 = _dense_top2(a)
        af = a.astype(np.float64)
        return SpectralReport(
            theta1,
            theta2,
            _residual(af, theta1, v1),
            _residual(af, theta2, v2),
            "dense",
            0,
            v1,
            v2,
        )

    if method != "power":
        raise DomainError(f"unknown method {method!r}")
    af = a.astype(np.float64)
    row_sums = a.sum(axis=1)
    iters = 0
    if (row_sums == row_sums[0]).all():
        # regular matrix: Perron value and vector are exact
        theta1 = float(row_sums[0])
        v1 = np.full(size, 1.0 / math.sqrt(size))
        res1 = 0.0
    else:
        theta1, v1, iters = _power_iterate(af, None, tol, max_iter, seed)
        res1 = _residual(af, theta1, v1)
    theta2, v2, it2 = _power_iterate(af, v1, tol, max_iter, seed + 1)
    iters += it2
    return SpectralReport(
        theta1, theta2, res1, _residual(af, theta2, v2), "deflated-power", iters, v1, v2
    )


def verify_perron(n, tol: float = 1e-8) -> bool:
    """True iff N*1 = s*1 holds exactly in integer arithmetic and the power
    iteration restricted to the complement of 1 stays strictly below s.

    A disconnected regular matrix fails the strictness test (its restricted
    top value equals s) and is therefore flagged.
    """
    a = _as_matrix(n)
    if not np.array_equal(a, a.T):
        raise DomainError("matrix is not symmetric")
    row_sums = a.sum(axis=1)
    if (row_sums != row_sums[0]).any():
        return False
    s = int(row_sums[0])
    if s == 0:
        return False
    report = eigs_top2(a, method="power")
    return report.theta2 + report.residual2 < s * (1 - tol)


def quad_form_bound(e, v, rel_tol: float = 1e-9) -> bool:
    """|v^T E v| <= d * ||v||^2 for a simple (0/1) regular matrix E."""
    a = _as_matrix(e)
    if ((a != 0) & (a != 1)).any():
        raise DomainError("matrix is not simple (entries must be 0 or 1)")
    rows, cols = a.sum(axis=1), a.sum(axis=0)
    if np.ptp(rows) != 0 or np.ptp(cols) != 0 or rows[0] != cols[0]:
        raise DomainError("matrix is not regular")
    d = int(rows[0])
    v = np.asarray(v, dtype=np.float64)
    lhs = abs(float(v @ (a.astype(np.float64) @ v)))
    rhs = d * float(v @ v)
    return lhs <= rhs * (1 + rel_tol) + 1e-12


@dataclass
class DiscrepancyRecord:
    s_size: int
    t_size: int
    e_st: int
    lhs: int  # |e(S,T)*n - |S||T|*d|, exact
    rhs: float  # n * sqrt((theta2 + residual2) * |S||T|), conservative
    holds: bool


def discrepancy_check(
    graph: SumProductGraph, s, t, report: SpectralReport
) -> DiscrepancyRecord:
    """Check |e(S,T)n - |S||T|d| <= n*sqrt(theta2 |S||T|) with the computed
    theta2 bumped by its residual, so the comparison is conservative."""
    s = list(s)
    t = list(t)
    n, d = graph.n, graph.degree
    e_st = edge_count(graph, s, t)
    lhs = abs(e_st * n - len(s) * len(t) * d)
    theta2 = max(report.theta2 + report.residual2, 0.0)
    rhs = n * math.sqrt(theta2 * len(s) * len(t))
    return DiscrepancyRecord(len(s), len(t), e_st, lhs, rhs, lhs <= rhs)
