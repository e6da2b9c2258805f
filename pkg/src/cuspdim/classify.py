"""Dimension classification for spaces of weight-3/2 cusp forms carrying the
cube of the eta multiplier.

Dividing such a form by the cube of eta gives a modular function whose poles
are confined to cusps, with multiplicity at a width-w cusp at most
ceil(w/8) - 1.  The space is therefore identified with the functions bounded
by an explicit cusp divisor, and exact curve invariants (index, cusp widths,
elliptic-point counts, genus) decide its dimension through Riemann-Roch in
all but one stubborn case, which a genus-two argument settles.

Every answer ships as a Certificate naming the rule used and the exact
quantities behind it; Undecided is a first-class verdict, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exact import divisors
from .gamma0 import CuspClass, GroupProfile, cusps, group_profile
from .qseries import EtaQuotient, eta_quotient_cusp_order

__all__ = [
    "Certificate",
    "ClassificationReport",
    "CuspDivisor",
    "RULE_CANONICAL_EXCLUSION",
    "RULE_DIVISOR_LEVEL",
    "RULE_EMPTY_DIVISOR",
    "RULE_SIMPLE_POLE",
    "RULE_STRONG_BOUND",
    "RULE_UNDECIDED",
    "Verdict",
    "bound_crude",
    "bound_strong",
    "bound_weak",
    "certificate_tsv_rows",
    "classify",
    "classify_range",
    "m23_element_orders",
    "m24_prime_divisors",
    "pole_divisor",
]


class Verdict(str, Enum):
    DIM_ONE = "DimOne"
    DIM_AT_LEAST_TWO = "DimAtLeastTwo"
    UNDECIDED = "Undecided"


RULE_STRONG_BOUND = "strong-bound-exceeds-one"
RULE_DIVISOR_LEVEL = "inherited-from-divisor-level"
RULE_EMPTY_DIVISOR = "empty-pole-divisor"
RULE_SIMPLE_POLE = "single-simple-pole-positive-genus"
RULE_CANONICAL_EXCLUSION = "weight-two-form-excludes-canonical-class"
RULE_UNDECIDED = "undecided"


@dataclass(frozen=True)
class CuspDivisor:
    """Effective divisor supported on cusp classes; only nonzero entries are
    stored, in the deterministic cusp order of the level."""

    level: int
    entries: tuple[tuple[CuspClass, int], ...]

    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    def support(self) -> tuple[CuspClass, ...]:
        return tuple(c for c, _ in self.entries)

    def coefficient(self, cusp: CuspClass) -> int:
        for c, m in self.entries:
            if c == cusp:
                return m
        return 0


def _ceil_eighth(w: int) -> int:
    return -(-w // 8)


def pole_divisor(n: int) -> CuspDivisor:
    """Maximal cusp poles available to the quotient by the cube of eta:
    coefficient ceil(w/8) - 1 at each width-w cusp class."""
    entries = tuple(
        (c, _ceil_eighth(c.width) - 1) for c in cusps(n) if c.width > 8
    )
    return CuspDivisor(n, entries)


def bound_strong(n: int) -> Fraction:
    """Exact Riemann-Roch lower bound for the dimension: equals
    deg(pole divisor) + 1 - genus, so it is always an integer."""
    p = group_profile(n)
    total = sum(_ceil_eighth(c.width) for c in cusps(n))
    return (
        Fraction(total)
        - Fraction(p.index, 12)
        - Fraction(p.cusp_count, 2)
        + Fraction(p.mu2, 4)
        + Fraction(p.mu3, 3)
    )


def bound_weak(n: int) -> Fraction:
    """The strong bound with the elliptic-point credits dropped; a rational
    lower bound for it."""
    p = group_profile(n)
    total = sum(_ceil_eighth(c.width) for c in cusps(n))
    return Fraction(total) - Fraction(p.index, 12) - Fraction(p.cusp_count, 2)


def bound_crude(n: int) -> Fraction:
    """index/24 - cusps/2: a lower bound for the weak bound that visibly
    grows with the level, so only finitely many levels can stay at
    dimension one."""
    p = group_profile(n)
    return Fraction(p.index, 24) - Fraction(p.cusp_count, 2)


class LevelInvariants(NamedTuple):
    profile: GroupProfile
    divisor: CuspDivisor
    strong: Fraction
    weak: Fraction
    crude: Fraction


@lru_cache(maxsize=4096)
def _level_invariants(n: int) -> LevelInvariants:
    return LevelInvariants(
        group_profile(n), pole_divisor(n), bound_strong(n), bound_weak(n), bound_crude(n)
    )


@dataclass(frozen=True)
class Certificate:
    """One level's verdict with the exact data that justifies it.

    ``bound`` is the strong Riemann-Roch lower bound for the dimension;
    ``witness`` carries rule-specific evidence (JSON-safe values only).
    """

    level: int
    verdict: Verdict
    rule: str
    bound: Fraction
    genus: int
    divisor_degree: int
    witness: dict | None = None

    def to_json_obj(self) -> dict:
        return {
            "level": self.level,
            "verdict": self.verdict.value,
            "rule": self.rule,
            "strong_bound": str(self.bound),
            "genus": self.genus,
            "divisor_degree": self.divisor_degree,
            "witness": self.witness,
        }


def _weight_two_exclusion(inv: LevelInvariants) -> dict | None:
    """Genus-two endgame: exhibit a holomorphic weight-2 form whose divisor,
    read as a differential, is a sum of two distinct simple points, one of
    them the divisor's support cusp.

    If some differential vanished doubly at the support cusp x, every
    canonical divisor would be equivalent to 2x; ours is x + y with y
    distinct, forcing y ~ x, which a positive-genus curve cannot afford.
    So the Riemann-Roch correction term vanishes and the dimension is
    exactly deg + 1 - genus = 1.  Returns the witness data, or None when
    any precondition fails.
    """
    p = inv.profile
    n = p.level
    if p.genus != 2 or p.mu2 != 0 or p.mu3 != 0:
        return None
    if len(inv.divisor.entries) != 1:
        return None
    support, mult = inv.divisor.entries[0]
    if mult != 2:
        return None
    quotient = EtaQuotient(n, {1: 2, n: 2})
    if quotient.weight() != 2:
        return None
    orders = [(c, eta_quotient_cusp_order(quotient, c)) for c in cusps(n)]
    # Holomorphic cusp form: integral positive order at every cusp.  Eta is
    # zero-free away from cusps, so these orders are the whole divisor.
    if any(o.denominator != 1 or o < 1 for _, o in orders):
        return None
    if sum(o for _, o in orders) != Fraction(p.index, 6):
        return None
    # As a differential the order drops by one at each cusp (no elliptic
    # corrections here since mu2 = mu3 = 0).
    diff_orders = [(c, int(o) - 1) for c, o in orders]
    if sum(o for _, o in diff_orders) != 2 * p.genus - 2:
        return None
    at_support = next(o for c, o in diff_orders if c == support)
    if at_support != 1:
        return None
    return {
        "support_cusp": str(support.representative),
        "weight_two_exponents": {"1": 2, str(n): 2},
        "cusp_orders": {str(c.representative): str(o) for c, o in orders},
    }


@lru_cache(maxsize=None)
def classify(n: int) -> Certificate:
    """Decide whether the level-n space is one-dimensional, with proof data.

    Rules are tried in order: a strong bound above one forces extra forms; a
    higher level inherits extra forms from any divisor level that has them;
    an empty pole divisor leaves only multiples of the cube of eta; a single
    simple pole on a positive-genus curve admits no nonconstant function;
    and the genus-two exclusion settles level 23.  Anything else is
    Undecided.
    """
    inv = _level_invariants(n)
    p = inv.profile
    deg = inv.divisor.degree()

    def cert(verdict, rule, witness=None):
        return Certificate(n, verdict, rule, inv.strong, p.genus, deg, witness)

    if inv.strong > 1:
        return cert(Verdict.DIM_AT_LEAST_TWO, RULE_STRONG_BOUND)
    for m in divisors(n):
        if m == 1 or m == n:
            continue
        if classify(m).verdict is Verdict.DIM_AT_LEAST_TWO:
            return cert(
                Verdict.DIM_AT_LEAST_TWO, RULE_DIVISOR_LEVEL, {"divisor_level": m}
            )
    if deg == 0:
        return cert(Verdict.DIM_ONE, RULE_EMPTY_DIVISOR)
    if deg == 1 and p.genus >= 1:
        support, _ = inv.divisor.entries[0]
        return cert(
            Verdict.DIM_ONE,
            RULE_SIMPLE_POLE,
            {"support_cusp": str(support.representative), "width": support.width},
        )
    if n == 23:
        witness = _weight_two_exclusion(inv)
        if witness is not None:
            return cert(Verdict.DIM_ONE, RULE_CANONICAL_EXCLUSION, witness)
    return cert(Verdict.UNDECIDED, RULE_UNDECIDED)


def m23_element_orders() -> frozenset[int]:
    """Element orders of the Mathieu group M23."""
    return frozenset((1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23))


def m24_prime_divisors() -> frozenset[int]:
    """Primes dividing the order of the Mathieu group M24; equivalently the
    primes p with p + 1 dividing 24."""
    return frozenset((2, 3, 5, 7, 11, 23))


@dataclass(frozen=True)
class ClassificationReport:
    """Certificates for every level from 1 to n_max, with the headline
    comparisons precomputed."""

    n_max: int
    certificates: tuple[Certificate, ...]

    @property
    def dim_one_levels(self) -> tuple[int, ...]:
        return tuple(
            c.level for c in self.certificates if c.verdict is Verdict.DIM_ONE
        )

    @property
    def undecided_levels(self) -> tuple[int, ...]:
        return tuple(
            c.level for c in self.certificates if c.verdict is Verdict.UNDECIDED
        )

    def matches_m23(self) -> bool | None:
        """Whether the one-dimensional levels are exactly the element orders
        of M23; None when the range stops short of 23."""
        if self.n_max < 23:
            return None
        return frozenset(self.dim_one_levels) == m23_element_orders()

    def to_json_obj(self) -> dict:
        return {
            "n_max": self.n_max,
            "dim_one_levels": list(self.dim_one_levels),
            "undecided_levels": list(self.undecided_levels),
            "matches_m23_element_orders": self.matches_m23(),
            "certificates": [c.to_json_obj() for c in self.certificates],
        }

    def to_tsv_rows(self) -> list[tuple[str, ...]]:
        return certificate_tsv_rows(self.certificates)


def certificate_tsv_rows(certs) -> list[tuple[str, ...]]:
    """Tab-separated serialization rows, header first; witness_level is
    filled only for inherited verdicts."""
    rows = [
        ("level", "verdict", "rule", "strong_bound", "genus", "divisor_degree", "witness_level")
    ]
    for c in certs:
        witness_level = ""
        if c.witness and "divisor_level" in c.witness:
            witness_level = str(c.witness["divisor_level"])
        rows.append(
            (
                str(c.level),
                c.verdict.value,
                c.rule,
                str(c.bound),
                str(c.genus),
                str(c.divisor_degree),
                witness_level,
            )
        )
    return rows


def classify_range(n_max: int) -> ClassificationReport:
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    return ClassificationReport(
        n_max, tuple(classify(n) for n in range(1, n_max + 1))
    )
