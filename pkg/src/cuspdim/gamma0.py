"""Invariants of the level-n congruence group: the subgroup of SL2(Z) whose
lower-left entry is divisible by n.

Closed-form routes for the index, cusp classes with widths, elliptic point
counts, and the genus of the compactified quotient curve.  The brute-force
counterparts live in ``oracle`` so the two routes stay independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import divisors, euler_phi, factorize, kronecker

__all__ = [
    "CuspClass",
    "GroupProfile",
    "UnimodularMatrix",
    "cusp_count",
    "cusp_width",
    "cusps",
    "genus",
    "group_profile",
    "index",
    "is_member",
    "mu2",
    "mu3",
]


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer 2x2 matrix with determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise ValueError(f"matrix determinant must be 1, got {det}")

    @classmethod
    def identity(cls) -> "UnimodularMatrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, k: int = 1) -> "UnimodularMatrix":
        """tau -> tau + k."""
        return cls(1, k, 0, 1)

    @classmethod
    def inversion(cls) -> "UnimodularMatrix":
        """tau -> -1/tau."""
        return cls(0, -1, 1, 0)

    def __mul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        if not isinstance(other, UnimodularMatrix):
            return NotImplemented
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "UnimodularMatrix":
        return UnimodularMatrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "UnimodularMatrix":
        return UnimodularMatrix(self.d, -self.b, -self.c, self.a)

    def act(self, tau: complex) -> complex:
        """Moebius action on the upper half-plane."""
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def __str__(self) -> str:
        return f"[{self.a} {self.b}; {self.c} {self.d}]"


def _check_level(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"level must be a positive integer, got {n!r}")


def is_member(mat: UnimodularMatrix, n: int) -> bool:
    """Whether mat lies in the level-n group (lower-left entry divisible by n)."""
    _check_level(n)
    return mat.c % n == 0


def index(n: int) -> int:
    """Index of the level-n group in SL2(Z): product of p^e + p^(e-1) over p^e || n."""
    _check_level(n)
    result = 1
    for p, e in factorize(n).factors.items():
        result *= p**e + p ** (e - 1)
    return result


def cusp_width(n: int, d: int) -> int:
    """Width of the cusp class with denominator d (a divisor of n).

    Per prime: p to the exponent nu_p(n) - 2 nu_p(d), clamped at zero.
    """
    _check_level(n)
    if d < 1 or n % d != 0:
        raise ValueError(f"{d} is not a positive divisor of {n}")
    nd = factorize(d)
    width = 1
    for p, e in factorize(n).factors.items():
        width *= p ** max(e - 2 * nd.nu(p), 0)
    return width


def cusp_count(n: int) -> int:
    """Number of cusp classes: sum of phi(gcd(d, n/d)) over divisors d of n."""
    _check_level(n)
    return sum(euler_phi(math.gcd(d, n // d)) for d in divisors(n))


@dataclass(frozen=True)
class CuspClass:
    """One cusp class of the level-n group.

    d divides n; two boundary points a/d and a'/d are in the same class
    exactly when a = a' modulo gcd(d, n/d).  ``a`` is the least nonnegative
    representative of its residue class that is coprime to d, and
    ``representative`` is the boundary point a/d.
    """

    level: int
    a: int
    d: int
    width: int
    representative: Fraction


def _canonical_a(r: int, g: int, d: int) -> int:
    a = r
    for _ in range(4 * d + 4):
        if math.gcd(a, d) == 1:
            return a
        a += g
    raise AssertionError(f"no representative coprime to {d} in class {r} mod {g}")


@lru_cache(maxsize=4096)
def cusps(n: int) -> tuple[CuspClass, ...]:
    """All cusp classes of the level-n group, in deterministic order."""
    _check_level(n)
    out = []
    for d in divisors(n):
        g = math.gcd(d, n // d)
        w = cusp_width(n, d)
        residues = [0] if g == 1 else [r for r in range(1, g) if math.gcd(r, g) == 1]
        for r in residues:
            a = _canonical_a(r, g, d)
            out.append(CuspClass(n, a, d, w, Fraction(a, d)))
    return tuple(out)


def mu2(n: int) -> int:
    """Number of order-2 elliptic points: 0 when 4 | n, else a product of
    1 + (-4|p) over primes p | n."""
    _check_level(n)
    if n % 4 == 0:
        return 0
    result = 1
    for p in factorize(n).factors:
        result *= 1 + kronecker(-4, p)
    return result


def mu3(n: int) -> int:
    """Number of order-3 elliptic points: 0 when 2 | n or 9 | n, else a
    product of 1 + (-3|p) over primes p | n."""
    _check_level(n)
    if n % 2 == 0 or n % 9 == 0:
        return 0
    result = 1
    for p in factorize(n).factors:
        result *= 1 + kronecker(-3, p)
    return result


def genus(n: int) -> int:
    """Genus of the compactified level-n quotient curve.

    1 + index/12 - mu2/4 - mu3/3 - cusps/2; the formula must land on an
    integer, anything else is an internal error.
    """
    _check_level(n)
    g = (
        1
        + Fraction(index(n), 12)
        - Fraction(mu2(n), 4)
        - Fraction(mu3(n), 3)
        - Fraction(cusp_count(n), 2)
    )
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"genus formula gave {g} at level {n}")
    return int(g)


@dataclass(frozen=True)
class GroupProfile:
    """Bundle of the level-n invariants computed by the closed-form route."""

    level: int
    index: int
    cusps: tuple[CuspClass, ...]
    mu2: int
    mu3: int
    genus: int

    @property
    def cusp_count(self) -> int:
        return len(self.cusps)


@lru_cache(maxsize=4096)
def group_profile(n: int) -> GroupProfile:
    """Compute all level-n invariants, cross-checking internal consistency."""
    cl = cusps(n)
    idx = index(n)
    assert sum(x.width for x in cl) == idx, f"cusp widths do not sum to the index at {n}"
    assert len(cl) == cusp_count(n), f"cusp enumeration mismatch at {n}"
    return GroupProfile(n, idx, cl, mu2(n), mu3(n), genus(n))
