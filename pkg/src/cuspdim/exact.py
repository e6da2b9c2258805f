"""Exact arithmetic primitives.

Factorization, the totient, the Kronecker symbol, the sawtooth function,
Dedekind sums, and exact phases on the unit circle.  Everything here is
pure and exact; floating point never enters.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Factorization",
    "UnitPhase",
    "PHASE_ONE",
    "dedekind_sum",
    "divisors",
    "euler_phi",
    "factorize",
    "kronecker",
    "sawtooth",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    ``factors`` maps each prime to its exponent; 1 gets an empty mapping.
    """

    value: int
    factors: dict[int, int]

    def nu(self, p: int) -> int:
        """Exponent of p in the factorization (0 when p does not divide)."""
        return self.factors.get(p, 0)

    def primes(self) -> tuple[int, ...]:
        return tuple(self.factors)


def _trial_divisors():
    yield 2
    yield 3
    k = 5
    while True:
        yield k
        yield k + 2
        k += 6


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Factor a positive integer by deterministic trial division."""
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    m = n
    factors: dict[int, int] = {}
    for p in _trial_divisors():
        if p * p > m:
            break
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return Factorization(n, factors)


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, sorted ascending."""
    divs = [1]
    for p, e in factorize(n).factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    phi = 1
    for p, e in factorize(n).factors.items():
        phi *= p ** (e - 1) * (p - 1)
    return phi


def _kronecker_prime(a: int, p: int) -> int:
    if p == 2:
        if a % 2 == 0:
            return 0
        return 1 if a % 8 in (1, 7) else -1
    r = a % p
    if r == 0:
        return 0
    # Euler's criterion; p is an odd prime here.
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), fully multiplicative over the factorization of n.

    Edge conventions: (a|1) = 1; (a|-1) = -1 exactly when a < 0; and
    (a|0) = 1 when a = +-1, else 0.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        if a < 0:
            result = -1
        n = -n
    for p, e in factorize(n).factors.items():
        s = _kronecker_prime(a, p)
        if s == 0:
            return 0
        if s == -1 and e % 2 == 1:
            result = -result
    return result


def sawtooth(x: Fraction | int) -> Fraction:
    """((x)): zero at integers, x - floor(x) - 1/2 elsewhere.  Odd, period 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum(d: int, c: int) -> Fraction:
    """Classical Dedekind sum s(d, c) = sum_{m=1}^{c-1} ((m/c)) ((m d / c)).

    Requires c >= 1 and gcd(d, c) = 1.  Depends on d only modulo c.
    """
    if c < 1:
        raise ValueError(f"modulus must be positive, got c={c}")
    if math.gcd(d, c) != 1:
        raise ValueError(f"arguments must be coprime, got gcd({d}, {c}) != 1")
    d %= c
    # ((m/c)) = (2m - c)/2c for 0 < m < c, and c never divides m*d here,
    # so the sum collapses to an integer accumulation over 4c^2.
    total = 0
    for m in range(1, c):
        r = m * d % c
        total += (2 * m - c) * (2 * r - c)
    return Fraction(total, 4 * c * c)


@dataclass(frozen=True)
class UnitPhase:
    """The exact unit-circle point e^(2 pi i turns), turns reduced mod 1.

    Multiplication adds turns; integer powers scale them.  Conversion to a
    complex float happens only at the numeric-verification boundary.
    """

    turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, "turns", Fraction(self.turns) % 1)

    @property
    def order(self) -> int:
        """Least k >= 1 with self**k equal to the identity phase."""
        return self.turns.denominator

    @property
    def is_one(self) -> bool:
        return self.turns == 0

    def __mul__(self, other: "UnitPhase") -> "UnitPhase":
        if not isinstance(other, UnitPhase):
            return NotImplemented
        return UnitPhase(self.turns + other.turns)

    def __pow__(self, k: int) -> "UnitPhase":
        return UnitPhase(self.turns * k)

    def inverse(self) -> "UnitPhase":
        return UnitPhase(-self.turns)

    def conjugate(self) -> "UnitPhase":
        return self.inverse()

    def to_complex(self) -> complex:
        return cmath.exp(2j * math.pi * float(self.turns))

    def __str__(self) -> str:
        return f"e({self.turns})"


PHASE_ONE = UnitPhase(Fraction(0))
