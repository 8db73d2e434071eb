"""Subsets of F_p as fixed-width bitsets, plus the set arithmetic the growth
bounds are evaluated on: sumsets, product sets, images of two-variable
function forms, multiplicative energy, and deterministic family generators.

Membership is one Python big-int of p bits, so unions/shifts are
word-parallel; images and product sets iterate pairs directly (exact,
O(|A||B|), which is the point at desk scale).  Values of a form that equal 0
are kept in its image: images live in F_p, not F_p^*.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fp_core import DomainError, FuncTable, SubgroupSpec, _as_p, kth_powers

__all__ = [
    "FpSet",
    "GeneralForm",
    "PowerForm",
    "ProductShifted",
    "SumShifted",
    "FamilySpec",
    "sumset",
    "productset",
    "image",
    "mult_energy",
    "generate",
    "kth_power_set",
    "evaluate_form",
    "form_label",
]


class FpSet:
    """A subset of F_p with bit-indexed membership over residues [0, p-1]."""

    __slots__ = ("p", "bits", "nonzero_only")

    def __init__(self, p, bits: int = 0, nonzero_only: bool = False):
        p = _as_p(p)
        if bits < 0 or bits >> p:
            raise DomainError("membership bits out of range for modulus")
        if nonzero_only and bits & 1:
            raise DomainError("set is flagged nonzero-only but contains 0")
        self.p = p
        self.bits = bits
        self.nonzero_only = nonzero_only

    @classmethod
    def from_elements(cls, p, elems, nonzero_only: bool = False) -> "FpSet":
        p_int = _as_p(p)
        bits = 0
        for e in elems:
            bits |= 1 << (e % p_int)
        return cls(p_int, bits, nonzero_only)

    @classmethod
    def units(cls, p) -> "FpSet":
        p_int = _as_p(p)
        return cls(p_int, ((1 << p_int) - 1) & ~1, nonzero_only=True)

    @classmethod
    def empty(cls, p, nonzero_only: bool = False) -> "FpSet":
        return cls(_as_p(p), 0, nonzero_only)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return (self.bits >> (x % self.p)) & 1 == 1

    def __iter__(self):
        return iter(self.elements())

    def elements(self) -> list[int]:
        bits = self.bits
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpSet) and self.p == other.p and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.p, self.bits))

    def issubset(self, other: "FpSet") -> bool:
        return self.p == other.p and self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        return f"FpSet(p={self.p}, n={len(self)})"


def _check_pair(a: FpSet, b: FpSet) -> int:
    if a.p != b.p:
        raise DomainError("sets have different moduli")
    return a.p


def sumset(a: FpSet, b: FpSet) -> FpSet:
    """{x+y mod p : x in A, y in B}."""
    p = _check_pair(a, b)
    mask = (1 << p) - 1
    acc = 0
    # Shift the whole bitset by each element of the smaller operand.
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    for s in small.elements():
        if s == 0:
            acc |= big.bits
        else:
            acc |= ((big.bits << s) | (big.bits >> (p - s))) & mask
    return FpSet(p, acc)


def productset(a: FpSet, b: FpSet) -> FpSet:
    """{x*y mod p : x in A, y in B}."""
    p = _check_pair(a, b)
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    big_elems = big.elements()
    bits = 0
    for s in small.elements():
        for t in big_elems:
            bits |= 1 << (s * t) % p
    return FpSet(p, bits)


# ---------------------------------------------------------------------------
# Two-variable function forms


@dataclass(frozen=True)
class GeneralForm:
    """f(x, y) = g(x) * g2(y) * (h(x) + y); g2 omitted means the constant 1."""

    g: FuncTable
    h: FuncTable
    g2: FuncTable | None = None


@dataclass(frozen=True)
class PowerForm:
    """f(x, y) = x^u * y^v * (x^k + y^k) with nonnegative u, v and k >= 1."""

    u: int
    v: int
    k: int = 1

    def __post_init__(self):
        if self.u < 0 or self.v < 0 or self.k < 1:
            raise DomainError("power form needs u, v >= 0 and k >= 1")


@dataclass(frozen=True)
class ProductShifted:
    """w(x) * f(x, y) for a base form f."""

    base: object
    w: FuncTable


@dataclass(frozen=True)
class SumShifted:
    """w(x) + f(x, y) for a base form f."""

    base: object
    w: FuncTable


def evaluate_form(form, x: int, y: int, p: int) -> int:
    if isinstance(form, GeneralForm):
        gx = form.g(x)
        hx = form.h(x)
        g2y = form.g2(y) if form.g2 is not None else 1
        return (gx * g2y % p) * ((hx + y) % p) % p
    if isinstance(form, PowerForm):
        return (
            pow(x, form.u, p)
            * pow(y, form.v, p)
            % p
            * ((pow(x, form.k, p) + pow(y, form.k, p)) % p)
            % p
        )
    if isinstance(form, ProductShifted):
        return form.w(x) * evaluate_form(form.base, x, y, p) % p
    if isinstance(form, SumShifted):
        return (form.w(x) + evaluate_form(form.base, x, y, p)) % p
    raise DomainError(f"unknown form {form!r}")


def form_label(form) -> str:
    if isinstance(form, GeneralForm):
        g2 = ",g2" if form.g2 is not None else ""
        return f"g(x)(h(x)+y){g2}"
    if isinstance(form, PowerForm):
        return f"x^{form.u}y^{form.v}(x^{form.k}+y^{form.k})"
    if isinstance(form, ProductShifted):
        return f"w(x)*[{form_label(form.base)}]"
    if isinstance(form, SumShifted):
        return f"w(x)+[{form_label(form.base)}]"
    return repr(form)


def image(form, a: FpSet, b: FpSet) -> FpSet:
    """f(A, B) = {f(x, y) : x in A, y in B}, exact; 0-values are kept."""
    p = _check_pair(a, b)
    if 0 in a or 0 in b:
        raise DomainError("forms are evaluated on subsets of the units")
    bits = 0
    if isinstance(form, GeneralForm):
        if form.g.p != p:
            raise DomainError("form tables built for a different modulus")
        g2 = form.g2
        for x in a.elements():
            gx, hx = form.g(x), form.h(x)
            for y in b.elements():
                coef = gx * (g2(y) if g2 is not None else 1) % p
                bits |= 1 << coef * ((hx + y) % p) % p
    else:
        for x in a.elements():
            for y in b.elements():
                bits |= 1 << evaluate_form(form, x, y, p)
    return FpSet(p, bits)


def mult_energy(a: FpSet) -> int:
    """#{(x,y,z,t) in A^4 : xy = zt}; requires A to avoid 0."""
    if 0 in a:
        raise DomainError("multiplicative energy needs a subset of the units")
    p = a.p
    counts: dict[int, int] = {}
    elems = a.elements()
    for x in elems:
        for y in elems:
            v = x * y % p
            counts[v] = counts.get(v, 0) + 1
    return sum(r * r for r in counts.values())


def kth_power_set(p, k: int) -> FpSet:
    """kth_powers as an FpSet (nonzero-only subgroup of size (p-1)/gcd(k,p-1))."""
    return FpSet.from_elements(p, kth_powers(p, k), nonzero_only=True)


# ---------------------------------------------------------------------------
# Set families


@dataclass(frozen=True)
class FamilySpec:
    """Deterministic generator spec for test families of subsets of F_p."""

    kind: str
    start: int | None = None
    length: int | None = None
    ratio: int | None = None
    size: int | None = None
    seed: int | None = None
    subgroup: SubgroupSpec | None = None

    @classmethod
    def interval(cls, start: int, length: int) -> "FamilySpec":
        return cls("interval", start=start, length=length)

    @classmethod
    def geometric(cls, ratio: int, length: int) -> "FamilySpec":
        return cls("geometric", ratio=ratio, length=length)

    @classmethod
    def random(cls, size: int, seed: int) -> "FamilySpec":
        return cls("random", size=size, seed=seed)

    @classmethod
    def from_subgroup(cls, spec: SubgroupSpec) -> "FamilySpec":
        return cls("subgroup", subgroup=spec)

    def label(self) -> str:
        if self.kind == "interval":
            return f"interval({self.start},{self.length})"
        if self.kind == "geometric":
            return f"geometric({self.ratio},{self.length})"
        if self.kind == "random":
            return f"random({self.size},seed={self.seed})"
        if self.kind == "subgroup":
            sg = self.subgroup
            inner = sg.kind if sg.kind != "kth_powers" else f"powers^{sg.k}"
            return f"subgroup({inner})"
        return self.kind


def generate(spec: FamilySpec, p, nonzero_only: bool = True) -> FpSet:
    """Materialize a family spec mod p; identical specs give identical sets."""
    p = _as_p(p)
    if spec.kind == "interval":
        if spec.length < 0 or spec.length > p:
            raise DomainError("infeasible interval length")
        elems = [(spec.start + i) % p for i in range(spec.length)]
    elif spec.kind == "geometric":
        if spec.ratio is None or spec.ratio % p == 0:
            raise DomainError("geometric ratio must be nonzero")
        elems, cur = [], 1
        for _ in range(spec.length):
            elems.append(cur)
            cur = cur * spec.ratio % p
    elif spec.kind == "random":
        limit = p - 1 if nonzero_only else p
        if spec.size > limit:
            raise DomainError(f"cannot draw {spec.size} elements mod {p}")
        rng = random.Random(f"family:{p}:{spec.size}:{spec.seed}")
        pool = range(1, p) if nonzero_only else range(p)
        elems = rng.sample(list(pool), spec.size)
    elif spec.kind == "subgroup":
        elems = list(spec.subgroup.resolve(p))
    else:
        raise DomainError(f"unknown family kind {spec.kind!r}")
    if nonzero_only and any(e % p == 0 for e in elems):
        raise DomainError(f"family {spec.label()} hits 0 mod {p}")
    return FpSet.from_elements(p, elems, nonzero_only=nonzero_only)
