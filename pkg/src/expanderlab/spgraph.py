"""Directed graphs on (F_p^*)^2 with a multiplicative edge rule, their integer
Gram matrices, and the structural decomposition checks.

Edge convention: there is an edge (a,b) -> (c,d) exactly when

    a*c = g(b) * g2(d) * (b + d)     (general rule; g2 omitted means 1), or
    a*c = b^u * d^v * (b^k + d^k)    (power rule).

The Gram matrix pairs vertices by their common *successors*:
gram[v, w] = #{u : v -> u and w -> u}, which for the general rule is exactly
the number of solutions (x, y) counted by :func:`count_solutions`.  Both
regularity directions are validated on construction.

Vertices are indexed row-major as (a-1)*(p-1) + (b-1), fixed so reports are
comparable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fp_core import DomainError, FuncTable, _as_p, constant_table, identity_table

__all__ = [
    "EdgeRule",
    "SumProductGraph",
    "GramMatrix",
    "ErrorMatrixReport",
    "RuleViolation",
    "build",
    "count_solutions",
    "gram",
    "decompose_gram",
    "connectivity",
    "edge_count",
    "gram_dump",
]


class RuleViolation(RuntimeError):
    """An edge rule produced a zero coordinate and broke the degree argument."""


class EdgeRule:
    """Edge rule for the directed graph on (F_p^*)^2.

    kinds: "general" carries tables (g, optional g2) defined on all of F_p^*;
    "power" carries exponents (u, v, k).  The sum-product rule a*c = b + d is
    the general rule with g the constant 1.
    """

    __slots__ = ("p", "kind", "g", "g2", "u", "v", "k")

    def __init__(self, p, kind, g=None, g2=None, u=None, v=None, k=None):
        self.p = _as_p(p)
        self.kind = kind
        self.g, self.g2 = g, g2
        self.u, self.v, self.k = u, v, k
        if kind == "general":
            full = tuple(range(1, self.p))
            for t in (g,) + ((g2,) if g2 is not None else ()):
                if not isinstance(t, FuncTable) or t.p != self.p or t.domain != full:
                    raise DomainError("rule tables must be total on F_p^*")
        elif kind == "power":
            if u is None or v is None or k is None or u < 0 or v < 0 or k < 1:
                raise DomainError("power rule needs u, v >= 0 and k >= 1")
        else:
            raise DomainError(f"unknown rule kind {kind!r}")

    @classmethod
    def general(cls, p, g: FuncTable, g2: FuncTable | None = None) -> "EdgeRule":
        return cls(p, "general", g=g, g2=g2)

    @classmethod
    def standard(cls, p) -> "EdgeRule":
        """a*c = b*(b+d): the identity-table rule."""
        return cls.general(p, identity_table(p))

    @classmethod
    def sum_product(cls, p) -> "EdgeRule":
        """a*c = b + d."""
        return cls.general(p, constant_table(p, 1))

    @classmethod
    def power(cls, p, u: int, v: int, k: int = 1) -> "EdgeRule":
        return cls(p, "power", u=u, v=v, k=k)

    def label(self) -> str:
        if self.kind == "power":
            return f"power(u={self.u},v={self.v},k={self.k})"
        g2 = ",g2" if self.g2 is not None else ""
        return f"general(g{g2})"

    def f_table(self) -> np.ndarray:
        """Dense (p-1)x(p-1) lookup F[b-1, d-1] = F(b, d) mod p (0 where undefined)."""
        p = self.p
        bs = np.arange(1, p, dtype=np.int64)
        if self.kind == "general":
            gv = np.array([self.g(b) for b in range(1, p)], dtype=np.int64)
            g2v = (
                np.array([self.g2(d) for d in range(1, p)], dtype=np.int64)
                if self.g2 is not None
                else np.ones(p - 1, dtype=np.int64)
            )
            s = (bs[:, None] + bs[None, :]) % p
            return gv[:, None] * g2v[None, :] % p * s % p
        pu = np.array([pow(b, self.u, p) for b in range(1, p)], dtype=np.int64)
        pv = np.array([pow(d, self.v, p) for d in range(1, p)], dtype=np.int64)
        pk = np.array([pow(b, self.k, p) for b in range(1, p)], dtype=np.int64)
        s = (pk[:, None] + pk[None, :]) % p
        return pu[:, None] * pv[None, :] % p * s % p


class SumProductGraph:
    """A built rule graph: per-vertex successor and predecessor index arrays."""

    __slots__ = ("p", "rule", "n", "degree", "out_nb", "in_nb", "_ftab", "_inv")

    def __init__(self, rule: EdgeRule):
        p = rule.p
        if p < 5:
            raise DomainError("graphs need p >= 5")
        self.p, self.rule = p, rule
        self.n = (p - 1) * (p - 1)
        inv = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
        ftab = rule.f_table()  # F[b-1, d-1], 0 exactly where no edge exists
        deg_per_b = np.count_nonzero(ftab, axis=1)
        deg_per_d = np.count_nonzero(ftab, axis=0)
        if deg_per_b.min() != deg_per_b.max() or deg_per_d.min() != deg_per_d.max():
            raise RuleViolation("rule is not degree-regular over second coordinates")
        self.degree = int(deg_per_b[0])
        self._ftab, self._inv = ftab, inv

        m = p - 1
        out = np.empty((self.n, self.degree), dtype=np.int32)
        in_ = np.empty((self.n, self.degree), dtype=np.int32)
        a_col = np.arange(1, p, dtype=np.int64)
        for b in range(1, p):
            frow = ftab[b - 1]
            dvals = np.nonzero(frow)[0] + 1  # admissible d for this b
            cvals = frow[dvals - 1][None, :] * inv[a_col][:, None] % p
            if (cvals == 0).any():
                raise RuleViolation("rule produced a zero target coordinate")
            idx = (cvals - 1) * m + (dvals[None, :] - 1)
            out[(a_col - 1) * m + (b - 1)] = idx
        for d in range(1, p):
            fcol = ftab[:, d - 1]
            bvals = np.nonzero(fcol)[0] + 1  # admissible b for this d
            avals = fcol[bvals - 1][None, :] * inv[a_col][:, None] % p
            if (avals == 0).any():
                raise RuleViolation("rule produced a zero source coordinate")
            idx = (avals - 1) * m + (bvals[None, :] - 1)
            in_[(a_col - 1) * m + (d - 1)] = idx
        self.out_nb, self.in_nb = out, in_
        # regularity both ways, checked exactly
        if np.ptp(np.bincount(out.ravel(), minlength=self.n)) != 0:
            raise RuleViolation("in-degrees are not constant")
        if np.ptp(np.bincount(in_.ravel(), minlength=self.n)) != 0:
            raise RuleViolation("out-degrees are not constant")

    def vertex_index(self, a: int, b: int) -> int:
        return (a - 1) * (self.p - 1) + (b - 1)

    def vertex_pair(self, idx: int) -> tuple[int, int]:
        m = self.p - 1
        return idx // m + 1, idx % m + 1

    def has_edge(self, v: int, w: int) -> bool:
        av, bv = self.vertex_pair(v)
        aw, bw = self.vertex_pair(w)
        return av * aw % self.p == self._ftab[bv - 1, bw - 1]


def build(rule: EdgeRule) -> SumProductGraph:
    """Construct the rule graph on (p-1)^2 vertices, validating regularity."""
    return SumProductGraph(rule)


def count_solutions(a, b, c, d, g: FuncTable, g2: FuncTable | None = None) -> int:
    """Brute-force count over (x, y) in (F_p^*)^2 of the pair of equations

        a*x = g(b) * g2(y) * (b + y)
        c*x = g(d) * g2(y) * (d + y)

    This is the independent oracle for the Gram matrix entries.
    """
    p = g.p
    a, b, c, d = a % p, b % p, c % p, d % p
    if 0 in (a, b, c, d):
        raise DomainError("oracle arguments must be units")
    ys = np.arange(1, p, dtype=np.int64)
    xs = np.arange(1, p, dtype=np.int64)
    g2v = (
        np.array([g2(y) for y in range(1, p)], dtype=np.int64)
        if g2 is not None
        else np.ones(p - 1, dtype=np.int64)
    )
    rhs1 = g(b) * g2v % p * ((b + ys) % p) % p
    rhs2 = g(d) * g2v % p * ((d + ys) % p) % p
    lhs1 = a * xs % p
    lhs2 = c * xs % p
    hits = (lhs1[:, None] == rhs1[None, :]) & (lhs2[:, None] == rhs2[None, :])
    return int(hits.sum())


@dataclass
class GramMatrix:
    """Symmetric integer matrix of common-successor counts of a rule graph."""

    p: int
    degree: int
    matrix: np.ndarray  # int64, shape (n, n)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def gram(graph: SumProductGraph, chunk: int = 64) -> GramMatrix:
    """Accumulate common-successor counts from the predecessor lists.

    O(n * degree^2) integer increments; no floating point is involved.
    Validates symmetry and the degree^2 row sums.
    """
    n, deg = graph.n, graph.degree
    g = np.zeros((n, n), dtype=np.int64)
    for lo in range(0, n, chunk):
        rows = graph.in_nb[lo : lo + chunk].astype(np.int64)
        left = np.repeat(rows, deg, axis=1).ravel()
        right = np.tile(rows, (1, deg)).ravel()
        np.add.at(g, (left, right), 1)
    if (g.sum(axis=1) != deg * deg).any():
        raise RuleViolation("gram row sums differ from degree^2")
    if not np.array_equal(g, g.T):
        raise RuleViolation("gram matrix is not symmetric")
    return GramMatrix(graph.p, deg, g)


@dataclass
class ErrorMatrixReport:
    """Outcome of peeling gram = J + (p-3)I - E, with E checked to be a
    symmetric 0/1 matrix that is (3p-6)-regular, plus the per-row entry census
    {p-2: once, 0: 3p-6 times, 1: the rest}."""

    p: int
    expected_degree: int  # 3p - 6
    zero_one_ok: bool
    symmetric_ok: bool
    regular_ok: bool
    census_ok: bool
    first_violation: str | None
    e_matrix: np.ndarray

    @property
    def ok(self) -> bool:
        return self.zero_one_ok and self.symmetric_ok and self.regular_ok and self.census_ok


def decompose_gram(gm: GramMatrix) -> ErrorMatrixReport:
    p, g = gm.p, gm.matrix
    n = gm.n
    e = (p - 3) * np.eye(n, dtype=np.int64) + 1 - g
    want = 3 * p - 6
    first = None

    bad = (e != 0) & (e != 1)
    zero_one_ok = not bad.any()
    if not zero_one_ok:
        i, j = np.argwhere(bad)[0]
        first = f"E[{i},{j}] = {e[i, j]} not in {{0,1}}"
    symmetric_ok = bool(np.array_equal(e, e.T))
    if symmetric_ok is False and first is None:
        i, j = np.argwhere(e != e.T)[0]
        first = f"E[{i},{j}] != E[{j},{i}]"
    rows, cols = e.sum(axis=1), e.sum(axis=0)
    regular_ok = bool((rows == want).all() and (cols == want).all())
    if not regular_ok and first is None:
        i = int(np.argmax(rows != want))
        first = f"row {i} of E sums to {int(rows[i])}, expected {want}"

    # independent census straight off the gram entries
    diag_ok = bool((np.diag(g) == p - 2).all())
    zeros = (g == 0).sum(axis=1)
    ones = (g == 1).sum(axis=1)
    census_ok = diag_ok and bool(
        (zeros == want).all() and (ones == n - want - 1).all()
    )
    if not census_ok and first is None:
        first = "per-row entry census does not match {p-2: 1, 0: 3p-6, 1: rest}"
    return ErrorMatrixReport(
        p, want, zero_one_ok, symmetric_ok, regular_ok, census_ok, first, e
    )


def connectivity(gm: GramMatrix) -> bool:
    """True iff every entry of gram^2 is positive (all vertex pairs joined by
    a two-step path in the multigraph); meaningful for p > 5."""
    if gm.p <= 5:
        raise DomainError("the two-step connectivity criterion needs p > 5")
    pos = gm.matrix > 0
    return bool((pos.astype(np.float64) @ pos.astype(np.float64) > 0).all())


def edge_count(graph: SumProductGraph, s, t) -> int:
    """Number of directed edges from vertex set S to vertex set T."""
    s_idx = np.fromiter(s, dtype=np.int64) if not isinstance(s, np.ndarray) else s
    if s_idx.size == 0:
        return 0
    t_mask = np.zeros(graph.n, dtype=bool)
    t_idx = np.fromiter(t, dtype=np.int64) if not isinstance(t, np.ndarray) else t
    t_mask[t_idx] = True
    return int(t_mask[graph.out_nb[s_idx]].sum())


def gram_dump(gm: GramMatrix, path) -> None:
    """Plain-text triples "row col value", one per line, row-major order."""
    with open(path, "w", encoding="utf-8") as fh:
        for i in range(gm.n):
            row = gm.matrix[i]
            for j in range(gm.n):
                fh.write(f"{i} {j} {int(row[j])}\n")
