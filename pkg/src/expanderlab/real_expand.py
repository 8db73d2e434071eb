"""Expansion experiments over the positive reals, in exact rational
arithmetic: the star product for f(x,y) = xy(x^k + y^k), multiplicative
energy, the dyadic slope decomposition and the slope-ordering chain, the
plane curves C_{a,b} : a y^2 + a^2 y = b y'^2 + b^2 y', exact curve
intersection, and direct incidence counting.

Exactness policy: sets hold Fractions; curve intersections are solved by
factoring the resultant cubic over Q, representing any surviving quadratic
irrationalities in Q(sqrt(D)), and isolating irreducible-cubic roots with
Sturm sequences.  Every returned intersection point is verified against both
defining equations either by literal substitution (rational / quadratic
points) or by exact certificates on the isolating interval (cubic points).
Non-integer exponents k fall back to floats with near-tie flagging.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .fp_core import DomainError
from .reporting import BoundReport

__all__ = [
    "RealSet",
    "CurveParams",
    "QuadExt",
    "RootInterval",
    "IntersectionPoint",
    "IncidenceReport",
    "DyadicLevels",
    "ChainReport",
    "star",
    "f_real",
    "f_image_real",
    "product_set_real",
    "mult_energy_real",
    "energy_bound_ok",
    "dyadic_levels",
    "solymosi_chain",
    "pp71_check",
    "curve_contains",
    "curve_intersect",
    "incidence_count",
    "pp73_check",
    "random_rational_set",
]

_REL_TOL = 1e-9  # float comparisons for non-integer exponents
_TIE_TOL = 1e-6  # slope gaps below this (relative) are flagged indeterminate


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise DomainError(f"need an exact rational, got {v!r}")


class RealSet:
    """A finite set of positive rationals, strictly increasing and exact."""

    __slots__ = ("elements",)

    def __init__(self, values):
        elems = sorted({_to_fraction(v) for v in values})
        if not elems:
            raise DomainError("real sets must be nonempty")
        if elems[0] <= 0:
            raise DomainError("real sets must be strictly positive")
        self.elements = tuple(elems)

    @classmethod
    def interval(cls, n: int) -> "RealSet":
        return cls(range(1, n + 1))

    @classmethod
    def geometric(cls, ratio, length: int, first=1) -> "RealSet":
        r = _to_fraction(ratio)
        cur = _to_fraction(first)
        vals = []
        for _ in range(length):
            vals.append(cur)
            cur *= r
        return cls(vals)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v) -> bool:
        return _to_fraction(v) in set(self.elements)

    def min(self) -> Fraction:
        return self.elements[0]

    def floats(self) -> list[float]:
        return [float(v) for v in self.elements]

    def __repr__(self) -> str:
        return f"RealSet(n={len(self)})"


def random_rational_set(
    size: int, seed, max_num: int = 48, max_den: int = 12
) -> RealSet:
    """Seeded set of distinct positive rationals; deterministic per seed."""
    rng = random.Random(f"realset:{size}:{seed}:{max_num}:{max_den}")
    vals: set[Fraction] = set()
    while len(vals) < size:
        vals.add(Fraction(rng.randint(1, max_num), rng.randint(1, max_den)))
    return RealSet(vals)


# ---------------------------------------------------------------------------
# The product rule and its energy machinery


def _is_int(k) -> bool:
    return isinstance(k, int) or (isinstance(k, Fraction) and k.denominator == 1)


def f_real(s, t, k):
    """f(s, t) = s*t*(s^k + t^k); exact Fraction for integer k, float else."""
    if _is_int(k):
        ki = int(k)
        s, t = _to_fraction(s), _to_fraction(t)
        if s <= 0 or t <= 0:
            raise DomainError("f is evaluated on positive reals")
        return s * t * (s**ki + t**ki)
    sf, tf = float(s), float(t)
    if sf <= 0 or tf <= 0:
        raise DomainError("f is evaluated on positive reals")
    kf = float(k)
    return sf * tf * (sf**kf + tf**kf)


def star(x, y, x2, y2, k):
    """(x, y) * (x2, y2) = (f(x, x2), f(y, y2))."""
    return f_real(x, x2, k), f_real(y, y2, k)


def _distinct_floats(values: list[float]) -> int:
    values = sorted(values)
    count = 0
    last = None
    for v in values:
        if last is None or abs(v - last) > _REL_TOL * max(1.0, abs(v)):
            count += 1
        last = v
    return count


def f_image_real(a: RealSet, k, b: RealSet | None = None) -> int:
    """|f(A, B)| (B defaults to A); exact for integer k."""
    b = a if b is None else b
    if _is_int(k):
        return len({f_real(x, y, k) for x in a for y in b})
    return _distinct_floats([f_real(x, y, k) for x in a for y in b])


def product_set_real(a: RealSet, b: RealSet | None = None) -> set[Fraction]:
    b = a if b is None else b
    return {x * y for x in a for y in b}


def mult_energy_real(a: RealSet) -> int:
    """#{(x,y,z,t) in A^4 : xy = zt} = sum of squared product multiplicities."""
    counts = Counter(x * y for x in a for y in a)
    return sum(r * r for r in counts.values())


def energy_bound_ok(a: RealSet) -> bool:
    """E(A) * |A.A| >= |A|^4, exact (the Cauchy-Schwarz lower bound)."""
    return mult_energy_real(a) * len(product_set_real(a)) >= len(a) ** 4


@dataclass(frozen=True)
class DyadicLevels:
    """Slope classes A_alpha = {(x, y) : y = alpha x} grouped by dyadic size
    level i (2^i <= |A_alpha| < 2^(i+1)), with the selected level."""

    energy: int
    ratio_counts: dict
    levels: dict
    selected: int
    d: int  # number of classes on the selected level
    bound_ok: bool  # 4^(i+1) d >= E / log|A|


def dyadic_levels(a: RealSet) -> DyadicLevels:
    n = len(a)
    if n < 2:
        raise DomainError("dyadic decomposition needs |A| >= 2")
    counts = Counter(Fraction(y, x) for x in a for y in a)
    levels: dict[int, list[Fraction]] = {}
    for alpha, c in counts.items():
        levels.setdefault(c.bit_length() - 1, []).append(alpha)
    for lst in levels.values():
        lst.sort()
    energy = sum(c * c for c in counts.values())
    selected = max(levels, key=lambda i: (4 ** (i + 1) * len(levels[i]), -i))
    d = len(levels[selected])
    bound_ok = 4 ** (selected + 1) * d * math.log(n) >= energy
    return DyadicLevels(energy, dict(counts), levels, selected, d, bound_ok)


@dataclass(frozen=True)
class ChainReport:
    """Verification record for the slope-ordering chain on the selected level.

    Pairs are consecutive classes in enumeration order (ascending slopes for
    k > 0, descending for k < 0), closed by the artificial class
    {min A} x A.  ``indeterminate`` marks float slope comparisons that were
    too close to call (non-integer k only).
    """

    k: object
    selected: int
    d: int
    class_sizes: tuple
    interval_ordering_ok: bool | None
    within_pair_products_ok: bool
    distinct_real_pairs_ok: bool
    distinct_all_pairs_ok: bool
    chain_sum: int  # sum over pairs of |A_aj| * |A_aj+1|
    union_size: int
    f_size: int
    f_sq_ge_4id: bool
    f_sq_ge_chain_sum: bool
    indeterminate: bool


def _class_members(a: RealSet, alpha: Fraction) -> list[tuple[Fraction, Fraction]]:
    elems = set(a.elements)
    return [(x, alpha * x) for x in a if alpha * x in elems]


def solymosi_chain(a: RealSet, k) -> ChainReport:
    if len(a) < 2:
        raise DomainError("the chain needs |A| >= 2")
    k_float = float(k)
    if k_float == 0:
        raise DomainError("k must be nonzero")
    if k_float < -1:
        raise DomainError("slope separation is undefined for k < -1")
    exact = _is_int(k)
    lv = dyadic_levels(a)
    slopes = sorted(lv.levels[lv.selected])
    if k_float < 0:
        slopes = slopes[::-1]  # mirror enumeration for negative exponents
    d = len(slopes)

    classes = [_class_members(a, alpha) for alpha in slopes]
    artificial = [(a.min(), y) for y in a]
    pairs = [(classes[j], classes[j + 1]) for j in range(d - 1)]
    pairs.append((classes[-1], artificial))

    # interval ordering: each consecutive pair of classes confines its star
    # products to an open slope window, and successive windows must not
    # overlap (their closures may touch only in the k = -1 degenerate case,
    # where products still sit strictly inside).
    indeterminate = False
    ordering: bool | None = True
    windows = []
    for j in range(d - 1):
        al, ar = slopes[j], slopes[j + 1]
        if exact:
            e1 = al ** (int(k) + 1) * ar
            e2 = al * ar ** (int(k) + 1)
        else:
            alf, arf = float(al), float(ar)
            e1 = alf ** (float(k) + 1) * arf
            e2 = alf * arf ** (float(k) + 1)
        windows.append((min(e1, e2), max(e1, e2)))
    descending = k_float < 0  # mirrored enumeration runs windows downward
    for j in range(len(windows) - 1):
        if descending:
            hi, lo_prev = windows[j + 1][1], windows[j][0]
        else:
            hi, lo_prev = windows[j][1], windows[j + 1][0]
        if not exact:
            gap = abs(lo_prev - hi)
            if gap <= _TIE_TOL * max(abs(hi), abs(lo_prev), 1.0):
                indeterminate = True
                ordering = None
                continue
        if ordering is not None and not hi <= lo_prev:
            ordering = False

    def products_of(pair):
        left, right = pair
        if exact:
            return {star(x, y, x2, y2, k) for (x, y) in left for (x2, y2) in right}
        vals = [star(x, y, x2, y2, k) for (x, y) in left for (x2, y2) in right]
        return {(round(u, 12), round(v, 12)) for u, v in vals}

    within_ok = True
    union_all: set = set()
    union_real: set = set()
    chain_sum = 0
    real_sum = 0
    for idx, pair in enumerate(pairs):
        prods = products_of(pair)
        expect = len(pair[0]) * len(pair[1])
        chain_sum += expect
        if len(prods) != expect:
            within_ok = False
        union_all |= prods
        if idx < len(pairs) - 1:
            union_real |= prods
            real_sum += expect

    f_size = f_image_real(a, k)
    return ChainReport(
        k=k,
        selected=lv.selected,
        d=d,
        class_sizes=tuple(len(cl) for cl in classes),
        interval_ordering_ok=ordering,
        within_pair_products_ok=within_ok,
        distinct_real_pairs_ok=len(union_real) == real_sum,
        distinct_all_pairs_ok=len(union_all) == chain_sum,
        chain_sum=chain_sum,
        union_size=len(union_all),
        f_size=f_size,
        f_sq_ge_4id=f_size * f_size >= 4**lv.selected * d,
        f_sq_ge_chain_sum=f_size * f_size >= chain_sum,
        indeterminate=indeterminate,
    )


def pp71_check(a: RealSet, k, family: str = "", seed: int | None = None) -> BoundReport:
    """max(|f(A,A)|, |A.A|) against (|A|^4 / log|A|)^(1/3); the proven chain
    |f(A,A)|^2 * 4 |A.A| log|A| >= |A|^4 is the hard flag."""
    n = len(a)
    if n < 3:
        raise DomainError("the chain bound needs |A| >= 3")
    f_size = f_image_real(a, k)
    aa = len(product_set_real(a))
    lhs = max(f_size, aa)
    rhs = (n**4 / math.log(n)) ** (1 / 3)
    chain_holds = f_size * f_size * 4 * aa * math.log(n) >= n**4
    return BoundReport(
        suite="real",
        theorem_id="pp71",
        p=None,
        family=family,
        size_a=n,
        size_b=n,
        size_c=None,
        m=None,
        lhs=lhs,
        rhs=rhs,
        ratio=lhs / rhs,
        holds=chain_holds,
        exponent=(math.log(lhs) / math.log(n) - 1.0) if n > 1 else None,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# Exact algebraic numbers: Q(sqrt(D)) plus Sturm-isolated cubic roots


def _square_free_split(d: int) -> tuple[int, int]:
    """d = m^2 * d' with d' squarefree; returns (m, d')."""
    m, rest, f = 1, d, 2
    while f * f <= rest:
        while rest % (f * f) == 0:
            rest //= f * f
            m *= f
        f += 1
    return m, rest


@dataclass(frozen=True)
class QuadExt:
    """Exact real r + s*sqrt(d); normalized so d is squarefree and d = 0
    whenever s = 0 (so equality is plain field equality)."""

    r: Fraction
    s: Fraction
    d: int

    @staticmethod
    def make(r, s=0, d: int = 0) -> "QuadExt":
        r, s = _to_fraction(r), _to_fraction(s)
        if d < 0:
            raise DomainError("only real quadratic extensions are supported")
        if s == 0 or d == 0:
            return QuadExt(r, Fraction(0), 0)
        m, core = _square_free_split(d)
        if core == 1:
            return QuadExt(r + s * m, Fraction(0), 0)
        return QuadExt(r, s * m, core)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != 0 and self.d != 0 and other.d != self.d:
                raise DomainError("mixed quadratic extensions")
            return other
        return QuadExt.make(_to_fraction(other))

    def _field_d(self, other: "QuadExt") -> int:
        return self.d or other.d

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExt.make(self.r + o.r, self.s + o.s, self._field_d(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.r, -self.s, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._field_d(o)
        return QuadExt.make(
            self.r * o.r + self.s * o.s * d, self.r * o.s + self.s * o.r, d
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        norm = self.r * self.r - self.s * self.s * self.d
        if norm == 0:
            raise ZeroDivisionError("zero element of the quadratic field")
        return QuadExt.make(self.r / norm, -self.s / norm, self.d)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0

    def __float__(self) -> float:
        return float(self.r) + float(self.s) * math.sqrt(self.d)


def _poly_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_eval(c, x):
    acc = Fraction(0) if isinstance(x, Fraction) else 0
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def _poly_deriv(c):
    return [i * c[i] for i in range(1, len(c))]


def _poly_rem(num, den):
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    while len(num) - 1 >= dn and any(num):
        shift = len(num) - 1 - dn
        factor = num[-1] / lead
        for i, coef in enumerate(den):
            num[shift + i] -= factor * coef
        num = _poly_trim(num)
        if not num:
            break
    return num


def _sturm_chain(c):
    chain = [list(c), _poly_deriv(c)]
    while chain[-1]:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-x for x in rem])
    return [q for q in chain if q]


def _sign_variations(chain, x) -> int:
    signs = []
    for q in chain:
        v = _poly_eval(q, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _roots_in(chain, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi] for a squarefree polynomial."""
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


@dataclass
class RootInterval:
    """A real algebraic number: a squarefree rational polynomial together with
    an isolating interval (lo, hi] holding exactly one of its roots."""

    coeffs: tuple
    lo: Fraction
    hi: Fraction

    def refine(self, width: Fraction) -> None:
        # the isolated root is simple, so the endpoint signs differ
        flo = _poly_eval(self.coeffs, self.lo)
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            fm = _poly_eval(self.coeffs, mid)
            if fm == 0:  # pragma: no cover - rationals were divided out
                self.lo = mid - width / 4
                self.hi = mid + width / 4
                return
            if (flo > 0) == (fm > 0):
                self.lo, flo = mid, fm
            else:
                self.hi = mid

    def avoid_polynomial(self, other: list[Fraction]) -> None:
        """Shrink the interval until ``other`` has no root inside it; valid
        when the isolated root is not a root of ``other``."""
        other = _poly_trim(list(other))
        if not other or len(other) == 1:
            return
        chain = _sturm_chain(other)
        while _roots_in(chain, self.lo, self.hi) > 0 or _poly_eval(other, self.lo) == 0:
            self.refine((self.hi - self.lo) / 4)

    def exclude_point(self, q: Fraction) -> None:
        while self.lo < q <= self.hi:
            self.refine((self.hi - self.lo) / 4)

    def __float__(self) -> float:
        self.refine(Fraction(1, 10**15) * max(1, abs(self.hi)))
        return float((self.lo + self.hi) / 2)


def _rational_roots(c: list[Fraction]) -> list[Fraction]:
    """Distinct rational roots of a polynomial with rational coefficients."""
    denom_lcm = math.lcm(*(x.denominator for x in c))
    ints = [int(x * denom_lcm) for x in c]
    nonzero = [abs(v) for v in ints if v]
    g = math.gcd(*nonzero) if len(nonzero) > 1 else (nonzero[0] if nonzero else 1)
    ints = [v // g for v in ints]
    low_idx = next(i for i, v in enumerate(ints) if v)
    roots = {Fraction(0)} if low_idx > 0 else set()

    def divisors(n):
        n = abs(n)
        out = set()
        f = 1
        while f * f <= n:
            if n % f == 0:
                out.add(f)
                out.add(n // f)
            f += 1
        return out

    shifted = ints[low_idx:]
    for pnum in divisors(shifted[0]):
        for qden in divisors(shifted[-1]):
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                if _poly_eval(c, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _deflate(c: list[Fraction], root: Fraction) -> list[Fraction]:
    """Synthetic division by (x - root); root must be an exact root."""
    n = len(c) - 1
    q = [Fraction(0)] * n
    q[n - 1] = c[n]
    for i in range(n - 1, 0, -1):
        q[i - 1] = c[i] + root * q[i]
    if c[0] + root * q[0] != 0:
        raise ArithmeticError("deflation by a non-root")
    return q


def _squarefree(c: list[Fraction]) -> list[Fraction]:
    der = _poly_deriv(c)
    g = _poly_gcd(c, der)
    if len(g) <= 1:
        return list(c)
    quot = _poly_floordiv(c, g)
    return quot


def _poly_floordiv(num, den):
    num = list(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        factor = num[-1] / lead
        q[shift] = factor
        for i, coef in enumerate(den):
            num[shift + i] -= factor * coef
        num = _poly_trim(num)
        if not num:
            break
    return _poly_trim(q) or [Fraction(0)]


def _poly_gcd(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_trim(_poly_rem(a, b))
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [x / lead for x in a]


def real_roots_exact(coeffs) -> list:
    """All distinct real roots of a rational polynomial of degree <= 3, as
    Fractions, QuadExt values, or RootInterval isolations."""
    c = _poly_trim([_to_fraction(x) for x in coeffs])
    if not c:
        raise DomainError("the zero polynomial has every real as a root")
    if len(c) == 1:
        return []
    c = _squarefree(c)
    roots: list = list(_rational_roots(c))
    work = list(c)
    for r in roots:
        work = _deflate(work, r)
    deg = len(work) - 1
    if deg <= 0:
        return roots
    if deg == 1:
        root = -work[0] / work[1]
        if root not in roots:
            roots.append(root)
        return roots
    if deg == 2:
        a2, a1, a0 = work[2], work[1], work[0]
        disc = a1 * a1 - 4 * a2 * a0
        if disc < 0:
            return roots
        sqrt_disc = QuadExt.make(0, Fraction(1, disc.denominator),
                                 disc.numerator * disc.denominator)
        for sgn in (1, -1):
            z = (QuadExt.make(-a1) + sgn * sqrt_disc) * QuadExt.make(
                Fraction(1, 2) / a2
            )
            z_val = z.r if z.s == 0 else z
            if z_val not in roots:
                roots.append(z_val)
        return roots
    # irreducible cubic (any rational root was divided out): Sturm isolation
    chain = _sturm_chain(work)
    bound = Fraction(1) + max(abs(x) for x in work[:-1]) / abs(work[-1])
    total = _roots_in(chain, -bound, bound)
    intervals: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        cnt = _roots_in(chain, lo, hi)
        if cnt == 0:
            continue
        if cnt == 1:
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    assert len(intervals) == total
    roots.extend(RootInterval(tuple(work), lo, hi) for lo, hi in sorted(intervals))
    return roots


# ---------------------------------------------------------------------------
# Curves


@dataclass(frozen=True)
class CurveParams:
    """The plane curve a y^2 + a^2 y = b y'^2 + b^2 y' with nonzero a, b.
    Over the reals a^3 = b^3 forces a = b, so nondegeneracy is just a != b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _to_fraction(self.a))
        object.__setattr__(self, "b", _to_fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise DomainError("curve parameters must be nonzero")

    @property
    def nondegenerate(self) -> bool:
        return self.a != self.b


def curve_contains(curve: CurveParams, y, yp) -> bool:
    """Exact membership test; accepts Fractions or QuadExt coordinates."""
    if isinstance(y, QuadExt) or isinstance(yp, QuadExt):
        ye = y if isinstance(y, QuadExt) else QuadExt.make(_to_fraction(y))
        ype = yp if isinstance(yp, QuadExt) else QuadExt.make(_to_fraction(yp))
        lhs = ye * ye * curve.a + ye * (curve.a * curve.a)
        rhs = ype * ype * curve.b + ype * (curve.b * curve.b)
        return (lhs - rhs).is_zero()
    y, yp = _to_fraction(y), _to_fraction(yp)
    return curve.a * y * y + curve.a**2 * y == curve.b * yp * yp + curve.b**2 * yp


@dataclass
class IntersectionPoint:
    """One common point of two curves, restricted to (R^*)^2.

    kind "rational"/"quadratic" points carry exact coordinates (Fraction or
    QuadExt) verified by literal substitution; kind "cubic" points carry the
    exact slope z as an isolated cubic root plus certificates that the
    back-substituted point lies on both curves.
    """

    kind: str
    z: object
    y: object | None
    yp: object | None
    y_float: float
    yp_float: float
    verified: bool


def _resultant_coeffs(c1: CurveParams, c2: CurveParams) -> list[Fraction]:
    a, b = c1.a, c1.b
    c, d = c2.a, c2.b
    # expansion of (a - b z^2)(d^2 z - c^2) - (c - d z^2)(b^2 z - a^2)
    return [
        a * c * (a - c),
        a * d * d - b * b * c,
        b * c * c - a * a * d,
        b * d * (b - d),
    ]


def curve_intersect(c1: CurveParams, c2: CurveParams) -> list[IntersectionPoint]:
    """All common points of two distinct nondegenerate curves in (R^*)^2.

    There are at most three: the slope z = y'/y satisfies a cubic resultant,
    and each slope determines at most one point.
    """
    if not (c1.nondegenerate and c2.nondegenerate):
        raise DomainError("degenerate curve parameters (a == b)")
    if c1 == c2:
        raise DomainError("identical curves intersect in infinitely many points")
    coeffs = _resultant_coeffs(c1, c2)
    points: list[IntersectionPoint] = []
    for z in real_roots_exact(coeffs):
        if isinstance(z, RootInterval):
            pt = _cubic_point(c1, c2, z)
        else:
            pt = _closed_form_point(c1, c2, z)
        if pt is not None:
            points.append(pt)
    return points


def _closed_form_point(c1, c2, z) -> IntersectionPoint | None:
    a, b, c, d = c1.a, c1.b, c2.a, c2.b
    ze = z if isinstance(z, QuadExt) else QuadExt.make(z)
    den1 = QuadExt.make(a) - QuadExt.make(b) * ze * ze
    den2 = QuadExt.make(c) - QuadExt.make(d) * ze * ze
    if not den1.is_zero():
        y = (QuadExt.make(b * b) * ze - QuadExt.make(a * a)) / den1
    elif not den2.is_zero():
        y = (QuadExt.make(d * d) * ze - QuadExt.make(c * c)) / den2
    else:
        return None
    if y.is_zero() or ze.is_zero():
        return None
    yp = ze * y
    y_out = y.r if y.s == 0 else y
    yp_out = yp.r if yp.s == 0 else yp
    ok = curve_contains(c1, y_out, yp_out) and curve_contains(c2, y_out, yp_out)
    if not ok:
        return None  # slope solves the resultant but not both equations
    return IntersectionPoint(
        kind="rational" if (y.s == 0 and yp.s == 0) else "quadratic",
        z=z,
        y=y_out,
        yp=yp_out,
        y_float=float(y),
        yp_float=float(yp),
        verified=True,
    )


def _cubic_point(c1, c2, z: RootInterval) -> IntersectionPoint | None:
    a, b = c1.a, c1.b
    # certificates: z is a root of the resultant by construction; the point
    # (y, zy) with y = (b^2 z - a^2)/(a - b z^2) then satisfies both curve
    # equations identically, provided the denominator and y itself are
    # nonzero on the isolating interval.
    z.avoid_polynomial([a, Fraction(0), -b])  # a - b z^2 != 0 at the root
    z.exclude_point(a * a / (b * b))  # b^2 z - a^2 != 0  =>  y != 0
    z.exclude_point(Fraction(0))  # z != 0  =>  y' != 0
    zf = float(z)
    den = float(a) - float(b) * zf * zf
    yf = (float(b) ** 2 * zf - float(a) ** 2) / den
    return IntersectionPoint(
        kind="cubic",
        z=z,
        y=None,
        yp=None,
        y_float=yf,
        yp_float=zf * yf,
        verified=True,
    )


# ---------------------------------------------------------------------------
# Incidences


@dataclass(frozen=True)
class IncidenceReport:
    """Point/curve incidence counts, with the three-way split used by the
    two-thirds growth bound when produced by :func:`pp73_check`."""

    n_points: int
    n_curves: int
    incidences: int
    total_gamma_sum: int | None = None
    diag_sum: int | None = None
    mirror_sum: int | None = None
    offdiag_sum: int | None = None
    diag_bound_ok: bool | None = None
    cs_holds: bool | None = None
    f_size: int | None = None
    ratio_two_thirds: float | None = None
    path: str | None = None
    balance_ok: bool | None = None
    easy_holds: bool | None = None


def incidence_count(points, curves) -> IncidenceReport:
    """Brute-force count of (point, curve) incidences, exact arithmetic."""
    pts = list(points)
    cvs = list(curves)
    count = sum(1 for (y, yp) in pts for cv in cvs if curve_contains(cv, y, yp))
    return IncidenceReport(len(pts), len(cvs), count)


def _gamma_cap_b2(a: Fraction, b: Fraction, bset: RealSet) -> int:
    """|C_{a,b} ∩ B^2| = #{(y,y') in B^2 : f(a,y) = f(b,y')} via hashing."""
    left = Counter(a * y * y + a * a * y for y in bset)
    right = Counter(b * y * y + b * b * y for y in bset)
    return sum(c * right.get(v, 0) for v, c in left.items())


def pp73_check(a: RealSet, b: RealSet, family: str = "", seed=None) -> IncidenceReport:
    """|f(A,B)| against (|A||B|)^(2/3) for f(x,y) = xy(x+y).

    Outside the balance window |A|^(1/2) <= |B| <= |A|^2, the easy bound
    |f(A,B)| >= max(|A|,|B|) is reported instead.  On the main path the
    curve-sum is split into diagonal, mirror-diagonal and off-diagonal
    incidence terms, and the Cauchy-Schwarz chain
    |f(A,B)| * sum >= |A|^2|B|^2 is a hard assertion.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        raise DomainError("both sets must be nonempty")
    f_vals = Counter(x * y * (x + y) for x in a for y in b)
    f_size = len(f_vals)
    balanced = nb * nb >= na and nb <= na * na
    if not balanced:
        return IncidenceReport(
            n_points=nb * nb,
            n_curves=na * na,
            incidences=0,
            path="easy",
            balance_ok=False,
            f_size=f_size,
            ratio_two_thirds=f_size / (na * nb) ** (2 / 3),
            easy_holds=f_size >= max(na, nb),
        )

    a_elems = list(a)
    diag_sum = 0
    total = 0
    mirror = 0
    diag_ok = True
    per_a = {x: Counter(x * y * y + x * x * y for y in b) for x in a_elems}
    for x in a_elems:
        cx = per_a[x]
        for y in a_elems:
            cy = per_a[y]
            cap = sum(cnt * cy.get(v, 0) for v, cnt in cx.items())
            total += cap
            if x == y:
                diag_sum += cap
                if cap > 2 * nb:
                    diag_ok = False
            else:
                # mirror term: points on the diagonal of B^2
                mirror += sum(1 for t in b if x * t * t + x * x * t == y * t * t + y * y * t)
    offdiag = total - diag_sum - mirror
    cs_holds = f_size * total >= (na * nb) ** 2
    n_points = sum(1 for y in b for yp in b if y != yp)
    n_curves = na * na - na
    return IncidenceReport(
        n_points=n_points,
        n_curves=n_curves,
        incidences=offdiag,
        total_gamma_sum=total,
        diag_sum=diag_sum,
        mirror_sum=mirror,
        offdiag_sum=offdiag,
        diag_bound_ok=diag_ok,
        cs_holds=cs_holds,
        f_size=f_size,
        ratio_two_thirds=f_size / (na * nb) ** (2 / 3),
        path="incidence",
        balance_ok=True,
    )
