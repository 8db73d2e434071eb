"""Prime-field arithmetic, multiplicative subgroups, and explicit function tables.

Field elements are plain integers in ``[0, p)``; every operation takes the
modulus explicitly.  :class:`PrimeModulus` validates a modulus once and can be
passed wherever a checked prime is wanted.  :class:`FuncTable` is an explicit
finite map from a subset of the units of F_p into the units; tables carry the
coefficient functions used by the growth bounds and by the graph edge rules.

All values are immutable after construction and all functions are pure, so
everything here is safe to share across threads without coordination.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

__all__ = [
    "DomainError",
    "MAX_MODULUS",
    "PrimeModulus",
    "SubgroupSpec",
    "FuncTable",
    "is_prime",
    "primes_in",
    "mod_inverse",
    "kth_powers",
    "multiplicity",
    "pointwise_product",
    "square_root_table",
    "identity_table",
    "constant_table",
    "power_table",
    "random_table",
]

# Moduli are capped so that a product of two residues fits exactly in an
# int64/float64 intermediate; desk-scale runs use p of a few hundred anyway.
MAX_MODULUS = 1 << 31


class DomainError(ValueError):
    """A value fell outside the domain a function, set or rule expects."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (adequate below 2**31)."""
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


@dataclass(frozen=True)
class PrimeModulus:
    """A validated odd prime modulus p >= 5."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int):
            raise DomainError(f"modulus must be an integer, got {self.p!r}")
        if self.p < 5 or self.p > MAX_MODULUS:
            raise DomainError(f"modulus must lie in [5, 2**31], got {self.p}")
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def units(self) -> range:
        return range(1, self.p)

    def __int__(self) -> int:
        return self.p


def _as_p(p) -> int:
    """Accept a PrimeModulus or a raw int and return the validated int."""
    if isinstance(p, PrimeModulus):
        return p.p
    return PrimeModulus(p).p


def mod_inverse(a: int, p) -> int:
    """Multiplicative inverse of a mod p; zero input is a domain error."""
    p = _as_p(p)
    if a % p == 0:
        raise DomainError("0 has no multiplicative inverse")
    return pow(a, -1, p)


def kth_powers(p, k: int) -> tuple[int, ...]:
    """The subgroup {x^k : x in F_p^*}, sorted.

    Its order is (p-1)/gcd(k, p-1).
    """
    p = _as_p(p)
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    return tuple(sorted({pow(x, k, p) for x in range(1, p)}))


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup of F_p^*: the full group, k-th powers, or an explicit set."""

    kind: str
    k: int | None = None
    members: tuple[int, ...] | None = None

    @classmethod
    def full(cls) -> "SubgroupSpec":
        return cls("full")

    @classmethod
    def kth(cls, k: int) -> "SubgroupSpec":
        if k < 1:
            raise DomainError("k must be positive")
        return cls("kth_powers", k=k)

    @classmethod
    def explicit(cls, members) -> "SubgroupSpec":
        return cls("explicit", members=tuple(sorted(set(members))))

    def resolve(self, p) -> tuple[int, ...]:
        """Element tuple mod p; explicit sets are checked for closure."""
        p = _as_p(p)
        if self.kind == "full":
            return tuple(range(1, p))
        if self.kind == "kth_powers":
            return kth_powers(p, self.k)
        if self.kind == "explicit":
            elems = set(self.members)
            if not elems:
                raise DomainError("explicit subgroup must be nonempty")
            for a in elems:
                if a % p == 0:
                    raise DomainError("subgroup elements must be nonzero")
                if pow(a, -1, p) not in elems:
                    raise DomainError(f"{a} has no inverse in the set: not a subgroup")
                for b in elems:
                    if (a * b) % p not in elems:
                        raise DomainError(
                            f"set not closed under multiplication at ({a},{b})"
                        )
            return tuple(sorted(elems))
        raise DomainError(f"unknown subgroup kind {self.kind!r}")


class FuncTable:
    """Explicit map from a nonempty subset of F_p^* into F_p^*.

    Images must be nonzero: the table is rejected otherwise.  Tables are
    immutable; ``mu()`` (the largest preimage count of any value) is cached.
    """

    __slots__ = ("p", "domain", "_values", "_mu")

    def __init__(self, p, mapping: dict[int, int]):
        p = _as_p(p)
        if not mapping:
            raise DomainError("function table needs a nonempty domain")
        values = {}
        for x, y in mapping.items():
            x, y = x % p, y % p
            if x == 0 or y == 0:
                raise DomainError("table domain and image must avoid 0")
            values[x] = y
        self.p = p
        self.domain = tuple(sorted(values))
        self._values = values
        self._mu = None

    def __call__(self, x: int) -> int:
        try:
            return self._values[x % self.p]
        except KeyError:
            raise DomainError(f"{x} is outside the table domain") from None

    def __contains__(self, x: int) -> bool:
        return (x % self.p) in self._values

    def __len__(self) -> int:
        return len(self._values)

    def items(self):
        return ((x, self._values[x]) for x in self.domain)

    def mu(self) -> int:
        """Largest number of preimages of any single value."""
        if self._mu is None:
            self._mu = max(Counter(self._values.values()).values())
        return self._mu

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self._values.values())))

    def __repr__(self) -> str:
        return f"FuncTable(p={self.p}, |domain|={len(self)})"


def multiplicity(t: FuncTable) -> int:
    """max over values v of #{x : t(x) = v}; between 1 and |domain|."""
    return t.mu()


def pointwise_product(g: FuncTable, h: FuncTable) -> FuncTable:
    """(g*h)(x) = g(x)h(x) mod p on the common domain (domains must match)."""
    if g.p != h.p or g.domain != h.domain:
        raise DomainError("tables must share modulus and domain")
    return FuncTable(g.p, {x: (g(x) * h(x)) % g.p for x in g.domain})


def identity_table(p, domain=None) -> FuncTable:
    p = _as_p(p)
    dom = range(1, p) if domain is None else domain
    return FuncTable(p, {x: x for x in dom})


def constant_table(p, c: int, domain=None) -> FuncTable:
    p = _as_p(p)
    dom = range(1, p) if domain is None else domain
    return FuncTable(p, {x: c for x in dom})


def power_table(p, e: int, domain=None) -> FuncTable:
    """x -> x^e (e may be negative; domain avoids 0 so this is always defined)."""
    p = _as_p(p)
    dom = range(1, p) if domain is None else domain
    return FuncTable(p, {x: pow(x, e, p) for x in dom})


def random_table(p, seed, domain=None) -> FuncTable:
    """Seeded uniform table into F_p^*; identical seeds give identical tables."""
    p = _as_p(p)
    dom = list(range(1, p)) if domain is None else sorted(domain)
    rng = random.Random(f"functable:{p}:{seed}")
    return FuncTable(p, {x: rng.randrange(1, p) for x in dom})


def square_root_table(p) -> FuncTable:
    """The canonical square-root map on the nonzero squares.

    Roots are taken in R = {1, ..., (p-1)/2}, so r +/- s never vanishes for
    distinct r, s in R: sums lie in [3, p-1] and differences cannot reach 0
    or +/-p/2-fold wraparound.  For every domain element t, table(t)^2 = t.
    """
    p = _as_p(p)
    return FuncTable(p, {(r * r) % p: r for r in range(1, (p - 1) // 2 + 1)})
