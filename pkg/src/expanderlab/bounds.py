"""Evaluation of the conditional growth bounds on concrete sets.

Each ``*_check`` function computes both sides of one bound exactly (integer
left side, rational right side), plus the ratio and, where the statement has
an explicit constant, a hard pass flag.  Bounds stated only up to an
unspecified constant get a tracked ratio instead of a flag, so sweeps can
watch the minimum observed ratio.

The ``proof_sets_*`` functions rebuild the vertex sets used to prove the
t1/t2 bounds inside the rule graphs and verify the size and edge-count
inequalities the proofs rely on.  ``growth_chain`` follows the power-set /
restricted-sumset bookkeeping used for the small-set product bound.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fp_core import (
    DomainError,
    FuncTable,
    identity_table,
    mod_inverse,
    square_root_table,
)
from .fp_sets import (
    FpSet,
    GeneralForm,
    PowerForm,
    ProductShifted,
    SumShifted,
    image,
    productset,
    sumset,
)
from .reporting import BoundReport
from .spgraph import EdgeRule, SumProductGraph, build, edge_count

__all__ = [
    "BoundReport",
    "ProofSets",
    "GrowthReport",
    "T3Multiplicities",
    "EqcaCheck",
    "t1_check",
    "t2_check",
    "t2_corollary",
    "t3_check",
    "t3_multiplicities",
    "nnn1_check",
    "corollary_checks",
    "proof_sets_t1",
    "proof_sets_t2",
    "eqca_solution_count",
    "eqca_sample_check",
    "shifted_eval",
    "growth_chain",
    "delta_reference",
    "empirical_exponent",
]


def empirical_exponent(max_side: int, size_a: int) -> float | None:
    """log(max side)/log|A| - 1; undefined (None) for |A| <= 1."""
    if size_a <= 1 or max_side <= 0:
        return None
    return math.log(max_side) / math.log(size_a) - 1.0


def delta_reference(alpha):
    """Reference growth exponent min(2 - 1/a, 1/a - 1)/40 for 1/2 < a < 1."""
    if isinstance(alpha, Fraction):
        return min(2 - 1 / alpha, 1 / alpha - 1) / 40
    return min(2.0 - 1.0 / alpha, 1.0 / alpha - 1.0) / 40.0


def _product_multiplicity(g: FuncTable, h: FuncTable) -> int:
    """mu(g*h) over the domain of h (h's domain must sit inside g's)."""
    counts = Counter(g(x) * h(x) % g.p for x in h.domain)
    return max(counts.values())


def _require_subset(a: FpSet, table: FuncTable, name: str) -> None:
    for x in a.elements():
        if x not in table:
            raise DomainError(f"{name} contains {x}, outside the table domain")


# ---------------------------------------------------------------------------
# Main bounds


def t1_check(
    a: FpSet,
    b: FpSet,
    c: FpSet,
    g: FuncTable,
    h: FuncTable,
    family: str = "",
    seed: int | None = None,
) -> BoundReport:
    """|f(A,B)| * |B.C| >= (1/8) min(|A||B|^2|C| / (p m^2), p|B| / m)
    for f(x,y) = g(x)(h(x)+y) and m = mu(g*h).  The 1/8 is explicit, so the
    flag is a hard assertion."""
    p = a.p
    _require_subset(a, g, "A")
    _require_subset(a, h, "A")
    m = _product_multiplicity(g, h)
    f_size = len(image(GeneralForm(g, h), a, b))
    bc = len(productset(b, c))
    lhs = f_size * bc
    sa, sb, sc = len(a), len(b), len(c)
    rhs = Fraction(1, 8) * min(
        Fraction(sa * sb * sb * sc, p * m * m), Fraction(p * sb, m)
    )
    return BoundReport(
        suite="bounds",
        theorem_id="t1",
        p=p,
        family=family,
        size_a=sa,
        size_b=sb,
        size_c=sc,
        m=m,
        lhs=lhs,
        rhs=rhs,
        ratio=float(Fraction(lhs) / rhs) if rhs > 0 else None,
        holds=Fraction(lhs) >= rhs,
        exponent=empirical_exponent(f_size, sa),
        seed=seed,
    )


def t2_check(
    a: FpSet,
    b: FpSet,
    c: FpSet,
    g: FuncTable,
    h: FuncTable,
    family: str = "",
    seed: int | None = None,
) -> BoundReport:
    """|f(A,B)| * |B+C| against min(p|B|/m, |A||B|^2|C| / (p m^2)) with
    m = mu(g); the constant is unspecified, so only the ratio is tracked."""
    p = a.p
    _require_subset(a, g, "A")
    _require_subset(a, h, "A")
    m = g.mu()
    f_size = len(image(GeneralForm(g, h), a, b))
    bc = len(sumset(b, c))
    lhs = f_size * bc
    sa, sb, sc = len(a), len(b), len(c)
    rhs = min(Fraction(p * sb, m), Fraction(sa * sb * sb * sc, p * m * m))
    return BoundReport(
        suite="bounds",
        theorem_id="t2",
        p=p,
        family=family,
        size_a=sa,
        size_b=sb,
        size_c=sc,
        m=m,
        lhs=lhs,
        rhs=rhs,
        ratio=float(Fraction(lhs) / rhs) if rhs > 0 else None,
        holds=None,
        exponent=empirical_exponent(f_size, sa),
        seed=seed,
    )


def t2_corollary(
    a: FpSet, g: FuncTable, family: str = "", seed: int | None = None
) -> BoundReport:
    """Joint report for f(x,y) = g(x)(x+y):
    |f(A,A)| * min(|A.A|, |A+A|) against min(|A|^4/p, p|A|)."""
    p = a.p
    _require_subset(a, g, "A")
    h = identity_table(p, g.domain)
    f_size = len(image(GeneralForm(g, h), a, a))
    lhs = f_size * min(len(productset(a, a)), len(sumset(a, a)))
    sa = len(a)
    rhs = min(Fraction(sa**4, p), Fraction(p * sa))
    return BoundReport(
        suite="bounds",
        theorem_id="t2_cor",
        p=p,
        family=family,
        size_a=sa,
        size_b=sa,
        size_c=sa,
        m=g.mu(),
        lhs=lhs,
        rhs=rhs,
        ratio=float(Fraction(lhs) / rhs) if rhs > 0 else None,
        holds=None,
        exponent=empirical_exponent(f_size, sa),
        seed=seed,
    )


@dataclass(frozen=True)
class T3Multiplicities:
    """Admissibility statistics for a (g, h) pair on a subgroup G:

    m  = max over z in G of |{ z g(xz) h(yz) / (g(x)h(y)) : x, y in G }|
    m2 = max over (v, t) and target values of #{x : x g(x) h(vx/t) = value}

    m is computed with an early cutoff; crossing the cap marks the pair
    inadmissible (m is then None).
    """

    m: int | None
    m2: int
    admissible: bool
    cap: int


def t3_multiplicities(
    g: FuncTable, h: FuncTable, p: int, cap: int = 64
) -> T3Multiplicities:
    dom = g.domain
    if h.domain != dom:
        raise DomainError("g and h must share the subgroup domain")
    inv_g = {x: mod_inverse(g(x), p) for x in dom}
    inv_h = {y: mod_inverse(h(y), p) for y in dom}
    m = 0
    admissible = True
    for z in dom:
        vals = set()
        gz = {x: g(x * z % p) for x in dom}
        hz = {y: h(y * z % p) for y in dom}
        for x in dom:
            zgx = z * gz[x] % p * inv_g[x] % p
            for y in dom:
                vals.add(zgx * hz[y] % p * inv_h[y] % p)
                if len(vals) > cap:
                    break
            if len(vals) > cap:
                break
        if len(vals) > cap:
            admissible = False
            m = None
            break
        m = max(m, len(vals))
    m2 = 0
    for t in dom:
        inv_t = mod_inverse(t, p)
        for v in dom:
            counts = Counter(x * g(x) % p * h(v * x % p * inv_t % p) % p for x in dom)
            m2 = max(m2, max(counts.values()))
    return T3Multiplicities(m, m2, admissible, cap)


def t3_check(
    a: FpSet,
    b: FpSet,
    c: FpSet,
    g: FuncTable,
    h: FuncTable,
    k: int = 1,
    cap: int = 64,
    family: str = "",
    seed: int | None = None,
) -> tuple[BoundReport, T3Multiplicities]:
    """|f(A,B)| |A.C| |B.C| against min(|A|^2|B|^2|C|/p, p|A||B|) for
    f(x,y) = g(x)h(y)(x^k + y^k) on a subgroup G; ratio-only."""
    p = a.p
    for s, name in ((a, "A"), (b, "B"), (c, "C")):
        _require_subset(s, g, name)
        _require_subset(s, h, name)
    stats = t3_multiplicities(g, h, p, cap)
    f_bits = 0
    for x in a.elements():
        gx, xk = g(x), pow(x, k, p)
        for y in b.elements():
            f_bits |= 1 << gx * h(y) % p * ((xk + pow(y, k, p)) % p) % p
    f_size = f_bits.bit_count()
    lhs = f_size * len(productset(a, c)) * len(productset(b, c))
    sa, sb, sc = len(a), len(b), len(c)
    rhs = min(Fraction(sa * sa * sb * sb * sc, p), Fraction(p * sa * sb))
    report = BoundReport(
        suite="bounds",
        theorem_id="t3",
        p=p,
        family=family,
        size_a=sa,
        size_b=sb,
        size_c=sc,
        m=stats.m,
        lhs=lhs,
        rhs=rhs,
        ratio=float(Fraction(lhs) / rhs) if rhs > 0 else None,
        holds=None,
        exponent=empirical_exponent(f_size, sa),
        seed=seed,
    )
    return report, stats


def nnn1_check(
    a: FpSet,
    b: FpSet,
    c: FpSet,
    u: int,
    v: int,
    family: str = "",
    seed: int | None = None,
) -> BoundReport:
    """Monomial-coefficient variant f(x,y) = x^u y^v (x+y):
    |f(A,B)| |B.C| against min(|A||B|^2|C|/p, p|B|); ratio-only."""
    p = a.p
    f_size = len(image(PowerForm(u, v, 1), a, b))
    lhs = f_size * len(productset(b, c))
    sa, sb, sc = len(a), len(b), len(c)
    rhs = min(Fraction(sa * sb * sb * sc, p), Fraction(p * sb))
    return BoundReport(
        suite="bounds",
        theorem_id="nnn1",
        p=p,
        family=family,
        size_a=sa,
        size_b=sb,
        size_c=sc,
        m=1,
        lhs=lhs,
        rhs=rhs,
        ratio=float(Fraction(lhs) / rhs) if rhs > 0 else None,
        holds=None,
        exponent=empirical_exponent(f_size, sa),
        seed=seed,
    )


def corollary_checks(
    a: FpSet, family: str = "", seed: int | None = None
) -> list[BoundReport]:
    """Three ratio reports for a single set A:

    - f(x,y) = x(x+y):    max(|f(A,A)|, |A.A|) vs min(|A|^2/sqrt(p), sqrt(p|A|))
    - f(x,y) = x(x^2+y^2): same right side, image computed from the power form
      (the square-root-table route is its exact cross-check when A consists of
      squares of canonical roots)
    - the conditional form: |f(A,A)| for f = x(x+y) vs
      min(|A|^(3-th)/(p m^2), p|A|^(-th)/m) at the empirical th with
      |A.A| = |A|^(1+th)
    """
    p = a.p
    sa = len(a)
    aa = len(productset(a, a))
    rhs_std = min(sa * sa / math.sqrt(p), math.sqrt(p * sa))
    out = []

    ident = identity_table(p)
    f_xxy = len(image(GeneralForm(ident, ident), a, a))
    lhs1 = max(f_xxy, aa)
    out.append(
        BoundReport(
            suite="bounds",
            theorem_id="cor_xxy",
            p=p,
            family=family,
            size_a=sa,
            size_b=sa,
            size_c=None,
            m=2,
            lhs=lhs1,
            rhs=rhs_std,
            ratio=lhs1 / rhs_std,
            holds=None,
            exponent=empirical_exponent(lhs1, sa),
            seed=seed,
        )
    )

    sqrt_tab = square_root_table(p)
    m_sq = _product_multiplicity(
        sqrt_tab, identity_table(p, sqrt_tab.domain)
    )  # at most 3: x^3 = t has at most 3 roots
    f_sq = len(image(PowerForm(1, 0, 2), a, a))
    lhs2 = max(f_sq, aa)
    out.append(
        BoundReport(
            suite="bounds",
            theorem_id="cor_xx2y2",
            p=p,
            family=family,
            size_a=sa,
            size_b=sa,
            size_c=None,
            m=m_sq,
            lhs=lhs2,
            rhs=rhs_std,
            ratio=lhs2 / rhs_std,
            holds=None,
            exponent=empirical_exponent(lhs2, sa),
            seed=seed,
        )
    )

    theta = empirical_exponent(aa, sa)
    if theta is not None:
        m = 2
        rhs3 = min(sa ** (3 - theta) / (p * m * m), p * sa ** (-theta) / m)
        out.append(
            BoundReport(
                suite="bounds",
                theorem_id="cor_theta",
                p=p,
                family=family,
                size_a=sa,
                size_b=sa,
                size_c=None,
                m=m,
                lhs=f_xxy,
                rhs=rhs3,
                ratio=f_xxy / rhs3 if rhs3 > 0 else None,
                holds=None,
                exponent=theta,
                seed=seed,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Proof-set constructions


@dataclass(frozen=True)
class ProofSets:
    """The vertex sets S, T built by a proof, with their checked inequalities.

    ``retained`` counts the generating triples whose derived vertex
    coordinates all stayed in F_p^* (the rest are ``excluded``);
    ``e_bound_retained_ok`` is the edge bound with the retained count,
    ``e_bound_full_ok`` the same with the full |A||B||C| product.
    """

    kind: str
    p: int
    size_a: int
    size_b: int
    size_c: int
    m: int
    s_vertices: frozenset
    t_vertices: frozenset
    e_st: int
    excluded: int
    retained: int
    s_limit: int
    t_limit: int

    @property
    def s_bound_ok(self) -> bool:
        return len(self.s_vertices) <= self.s_limit

    @property
    def t_bound_ok(self) -> bool:
        return len(self.t_vertices) <= self.t_limit

    @property
    def e_bound_retained_ok(self) -> bool:
        return self.e_st * self.m >= self.retained

    @property
    def e_bound_full_ok(self) -> bool:
        return self.e_st * self.m >= self.size_a * self.size_b * self.size_c

    @property
    def all_ok(self) -> bool:
        return self.s_bound_ok and self.t_bound_ok and self.e_bound_retained_ok


def proof_sets_t1(
    a: FpSet,
    b: FpSet,
    c: FpSet,
    g: FuncTable,
    h: FuncTable,
    graph: SumProductGraph | None = None,
) -> ProofSets:
    """S = {(z g(z h(x))/g(x), z h(x))}, T = {(g(x)(h(x)+y), yz)} inside the
    rule graph a*c = g(b)(b+d); verifies |S| <= |A||C|,
    |T| <= min(|f(A,B)||B.C|, |A||B||C|) and e(S,T) >= retained/m."""
    p = a.p
    _require_subset(a, g, "A")
    _require_subset(a, h, "A")
    if graph is None:
        graph = build(EdgeRule.general(p, g))
    m = _product_multiplicity(g, h)

    s_set = set()
    for x in a.elements():
        inv_gx = mod_inverse(g(x), p)
        hx = h(x)
        for z in c.elements():
            t = z * hx % p
            s_set.add(graph.vertex_index(z * g(t) % p * inv_gx % p, t))

    t_set = set()
    excluded = 0
    retained = 0
    sc = len(c)
    c_elems = c.elements()
    for x in a.elements():
        gx, hx = g(x), h(x)
        for y in b.elements():
            f_val = gx * ((hx + y) % p) % p
            if f_val == 0:
                excluded += sc
                continue
            retained += sc
            for z in c_elems:
                t_set.add(graph.vertex_index(f_val, y * z % p))

    f_size = len(image(GeneralForm(g, h), a, b))
    bc = len(productset(b, c))
    sa, sb = len(a), len(b)
    e_st = edge_count(graph, s_set, t_set)
    return ProofSets(
        kind="t1",
        p=p,
        size_a=sa,
        size_b=sb,
        size_c=sc,
        m=m,
        s_vertices=frozenset(s_set),
        t_vertices=frozenset(t_set),
        e_st=e_st,
        excluded=excluded,
        retained=retained,
        s_limit=sa * sc,
        t_limit=min(f_size * bc, sa * sb * sc),
    )


def proof_sets_t2(
    a: FpSet,
    b: FpSet,
    c: FpSet,
    g: FuncTable,
    h: FuncTable,
    graph: SumProductGraph | None = None,
) -> ProofSets:
    """S = {(g(x)(h(x)+y), y+z)}, T = {(g(x)^-1, h(x)-z)} inside the
    sum-product graph a*c = b + d; verifies |S| <= |f(A,B)||B+C|,
    |T| <= |A||C| and e(S,T) >= retained/mu(g)."""
    p = a.p
    _require_subset(a, g, "A")
    _require_subset(a, h, "A")
    if graph is None:
        graph = build(EdgeRule.sum_product(p))
    m = g.mu()

    s_set, t_set = set(), set()
    excluded = 0
    retained = 0
    b_elems, c_elems = b.elements(), c.elements()
    for x in a.elements():
        gx, hx = g(x), h(x)
        inv_gx = mod_inverse(gx, p)
        for z in c_elems:
            t2c = (hx - z) % p
            t_ok = t2c != 0
            if t_ok:
                t_set.add(graph.vertex_index(inv_gx, t2c))
            for y in b_elems:
                f_val = gx * ((hx + y) % p) % p
                s2 = (y + z) % p
                if f_val != 0 and s2 != 0:
                    s_set.add(graph.vertex_index(f_val, s2))
                    if t_ok:
                        retained += 1
                        continue
                excluded += 1

    f_size = len(image(GeneralForm(g, h), a, b))
    bc = len(sumset(b, c))
    sa, sb, sc = len(a), len(b), len(c)
    e_st = edge_count(graph, s_set, t_set)
    return ProofSets(
        kind="t2",
        p=p,
        size_a=sa,
        size_b=sb,
        size_c=sc,
        m=m,
        s_vertices=frozenset(s_set),
        t_vertices=frozenset(t_set),
        e_st=e_st,
        excluded=excluded,
        retained=retained,
        s_limit=f_size * bc,
        t_limit=sa * sc,
    )


def eqca_solution_count(
    g: FuncTable, h: FuncTable, a: FpSet, b: FpSet, c: FpSet, quad: tuple
) -> int:
    """Count triples (x,y,z) in A x B x C solving

        g(x)(h(x)+y) = u,  yz = v,  z g(z h(x))/g(x) = w,  z h(x) = t

    for the fixed quadruple (u, v, w, t).  The product bound mu(g*h) caps it.
    """
    p = a.p
    u, v, w, t = (q % p for q in quad)
    count = 0
    for x in a.elements():
        gx, hx = g(x), h(x)
        for z in c.elements():
            if z * hx % p != t:
                continue
            if z * g(t) % p * mod_inverse(gx, p) % p != w:
                continue
            for y in b.elements():
                if y * z % p == v and gx * ((hx + y) % p) % p == u:
                    count += 1
    return count


@dataclass(frozen=True)
class EqcaCheck:
    samples: int
    m: int
    max_count: int

    @property
    def ok(self) -> bool:
        return self.max_count <= self.m


def eqca_sample_check(
    g: FuncTable,
    h: FuncTable,
    a: FpSet,
    b: FpSet,
    c: FpSet,
    samples: int = 1000,
    seed: int = 0,
) -> EqcaCheck:
    """Sample realized quadruples (u,v,w,t) from A x B x C triples and verify
    the solution count never exceeds m = mu(g*h)."""
    p = a.p
    m = _product_multiplicity(g, h)
    rng = random.Random(f"eqca:{p}:{seed}")
    ae, be, ce = a.elements(), b.elements(), c.elements()
    worst = 0
    n = 0
    attempts = 0
    while n < samples:
        attempts += 1
        if attempts > 50 * samples:
            raise DomainError("could not sample enough retained triples")
        x, y, z = rng.choice(ae), rng.choice(be), rng.choice(ce)
        gx, hx = g(x), h(x)
        if gx * ((hx + y) % p) % p == 0:
            continue  # excluded triple: carries no edge
        t = z * hx % p
        quad = (
            gx * ((hx + y) % p) % p,
            y * z % p,
            z * g(t) % p * mod_inverse(gx, p) % p,
            t,
        )
        worst = max(worst, eqca_solution_count(g, h, a, b, c, quad))
        n += 1
    return EqcaCheck(samples, m, worst)


# ---------------------------------------------------------------------------
# Shifted functions and the growth chain


def shifted_eval(
    a: FpSet,
    base,
    w: FuncTable,
    mode: str = "product",
    family: str = "",
    seed: int | None = None,
) -> BoundReport:
    """Sizes of f(A,A) and of the w-shifted image (w(x)f(x,y) or w(x)+f(x,y)),
    plus the empirical exponent of the larger one.  No pass flag: the growth
    constants of these statements are non-effective."""
    p = a.p
    if mode == "product":
        shifted = ProductShifted(base, w)
        theorem_id = "t5"
    elif mode == "sum":
        shifted = SumShifted(base, w)
        theorem_id = "t6"
    else:
        raise DomainError(f"unknown shift mode {mode!r}")
    f_size = len(image(base, a, a))
    sh_size = len(image(shifted, a, a))
    sa = len(a)
    return BoundReport(
        suite="bounds",
        theorem_id=theorem_id,
        p=p,
        family=family,
        size_a=sa,
        size_b=sa,
        size_c=None,
        m=w.mu(),
        lhs=f_size,
        rhs=sh_size,
        ratio=max(f_size, sh_size) / sa if sa else None,
        holds=None,
        exponent=empirical_exponent(max(f_size, sh_size), sa),
        seed=seed,
    )


@dataclass(frozen=True)
class GrowthReport:
    """Bookkeeping for f(x,y) = xy(x+y) growth: the doubling ratio K with
    K|A| = max(|f(A,A)|, |A.A|), the power sets, the relation-restricted
    sumset, and the containment/equality/size facts checked on them."""

    p: int
    size_a: int
    k_ratio: Fraction
    f_size: int
    aa_size: int
    aaa_size: int
    a3_size: int
    gamma_size: int
    restricted_size: int
    cube_root_unique: bool  # gcd(3, p-1) == 1
    containment_ok: bool
    size_equality: bool | None  # asserted only when cube roots are unique
    gamma_square: bool | None
    plunnecke_k_ok: bool
    plunnecke_aa_ok: bool

    @property
    def hard_ok(self) -> bool:
        checks = [self.containment_ok, self.plunnecke_k_ok, self.plunnecke_aa_ok]
        if self.cube_root_unique:
            checks += [bool(self.size_equality), bool(self.gamma_square)]
        return all(checks)


def growth_chain(a: FpSet) -> GrowthReport:
    p = a.p
    if 0 in a or len(a) == 0:
        raise DomainError("growth chain needs a nonempty subset of the units")
    elems = a.elements()
    sa = len(elems)
    f_img = image(PowerForm(1, 1, 1), a, a)
    aa = productset(a, a)
    aaa = productset(aa, a)
    a2 = FpSet.from_elements(p, [x * x % p for x in elems], nonzero_only=True)
    a3_set = {pow(x, 3, p) for x in elems}
    pset = productset(a2, a)

    k_ratio = Fraction(max(len(f_img), len(aa)), sa)
    inv = {x: mod_inverse(x, p) for x in pset.elements()}
    gamma = set()
    for u in pset.elements():
        for v in pset.elements():
            if u * u % p * inv[v] % p in a3_set and v * v % p * inv[u] % p in a3_set:
                gamma.add((u, v))
    restricted = FpSet.from_elements(p, [(u + v) % p for (u, v) in gamma])

    unique_cubes = gcd(3, p - 1) == 1
    containment = f_img.issubset(restricted)
    size_eq = len(restricted) == len(f_img)
    gamma_sq = len(gamma) == len(a3_set) ** 2
    return GrowthReport(
        p=p,
        size_a=sa,
        k_ratio=k_ratio,
        f_size=len(f_img),
        aa_size=len(aa),
        aaa_size=len(aaa),
        a3_size=len(a3_set),
        gamma_size=len(gamma),
        restricted_size=len(restricted),
        cube_root_unique=unique_cubes,
        containment_ok=containment,
        size_equality=size_eq if unique_cubes else None,
        gamma_square=gamma_sq if unique_cubes else None,
        plunnecke_k_ok=Fraction(len(aaa)) <= k_ratio**3 * sa,
        plunnecke_aa_ok=len(aaa) * sa * sa <= len(aa) ** 3,
    )
