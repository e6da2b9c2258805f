"""Randomized and exhaustive verification suites behind the CLI verify
command: the eta transformation law, cocycle identities, level characters,
series identities, and the bound bookkeeping of the classifier.

Each suite returns a SuiteResult with preformatted per-check lines so the
CLI can stream them; failures are counted, never raised, so a suite always
reports the full picture.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .classify import bound_crude, bound_strong, bound_weak, pole_divisor
from .exact import divisors
from .gamma0 import UnimodularMatrix, group_profile
from .multiplier import (
    AutomorphyContext,
    gamma0_character,
    verify_cocycle,
    verify_transformation,
)
from .qseries import EtaQuotient, eta_cubed, eta_expansion, eta_quotient_expansion, unary_theta

__all__ = [
    "SuiteResult",
    "character_suite",
    "cocycle_suite",
    "eta_law_suite",
    "euler_identity_suite",
    "random_level_element",
    "random_unimodular",
    "rr_identity_suite",
]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: int
    failures: int
    worst_residual: float | None
    lines: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        worst = "" if self.worst_residual is None else f" worst={self.worst_residual:.3e}"
        verdict = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {self.checks} checks, {self.failures} failures{worst} {verdict}"

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "checks": self.checks,
            "failures": self.failures,
            "worst_residual": self.worst_residual,
            "ok": self.ok,
            "lines": list(self.lines),
        }


def _build_row(c: int, d: int, b_for_zero_c: int) -> UnimodularMatrix:
    if c == 0:
        # gcd(0, d) = 1 forces d = +-1; determinant d*d = 1 either way.
        return UnimodularMatrix(d, b_for_zero_c, 0, d)
    m = abs(c)
    a = 0 if m == 1 else pow(d, -1, m)
    if a > m - a:
        a -= m
    return UnimodularMatrix(a, (a * d - 1) // c, c, d)


def random_unimodular(rng: random.Random, entry_bound: int = 50) -> UnimodularMatrix:
    """Uniform-ish determinant-one matrix with all four entries bounded by
    entry_bound (bottom row uniform over coprime pairs in the box; the top
    row is the minimal completion, which stays inside the box)."""
    while True:
        c = rng.randint(-entry_bound, entry_bound)
        d = rng.randint(-entry_bound, entry_bound)
        if math.gcd(c, d) == 1:
            return _build_row(c, d, rng.randint(-entry_bound, entry_bound))


def random_level_element(
    rng: random.Random, n: int, multiple_bound: int = 3, entry_bound: int = 50
) -> UnimodularMatrix:
    """Random element of the level-n group: bottom-left entry a small
    multiple of n, bottom-right bounded by entry_bound."""
    while True:
        c = n * rng.randint(-multiple_bound, multiple_bound)
        d = rng.randint(-entry_bound, entry_bound)
        if math.gcd(c, d) == 1:
            return _build_row(c, d, rng.randint(-entry_bound, entry_bound))


def _fmt_tau(tau: complex) -> str:
    return f"{tau.real:+.6f}{tau.imag:+.6f}i"


def eta_law_suite(
    samples: int = 1000,
    entry_bound: int = 50,
    tolerance: float = 1e-9,
    seed: int = 0,
) -> SuiteResult:
    """Numeric check of eta(gamma tau) * eps(gamma) * j(gamma, tau)^(1/2)
    = eta(tau) over random matrices and base points."""
    rng = random.Random(seed)
    ctx = AutomorphyContext(weight=Fraction(1, 2), eta_power=1)
    lines = []
    failures = 0
    worst = 0.0
    for _ in range(samples):
        gamma = random_unimodular(rng, entry_bound)
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.5, 2.0))
        check = verify_transformation(eta_expansion, ctx, gamma, tau, tolerance)
        worst = max(worst, check.residual)
        failures += 0 if check.ok else 1
        lines.append(
            f"{gamma} tau={_fmt_tau(tau)} residual={check.residual:.3e} "
            f"bound={check.bound:.3e} {'PASS' if check.ok else 'FAIL'}"
        )
    return SuiteResult("eta-law", samples, failures, worst, tuple(lines))


def cocycle_suite(
    samples: int = 1000,
    entry_bound: int = 50,
    tolerance: float = 1e-10,
    seed: int = 0,
    tau: complex = 1j,
) -> SuiteResult:
    """Cocycle and minus-identity consistency of the weight-1/2 eta system
    at random matrix pairs."""
    rng = random.Random(seed)
    ctx = AutomorphyContext(weight=Fraction(1, 2), eta_power=1)
    lines = []
    failures = 0
    worst = 0.0
    for _ in range(samples):
        g1 = random_unimodular(rng, entry_bound)
        g2 = random_unimodular(rng, entry_bound)
        check = verify_cocycle(ctx, g1, g2, tau)
        residual = max(check.residual, check.consistency_residual)
        worst = max(worst, residual)
        ok = residual <= tolerance
        failures += 0 if ok else 1
        lines.append(
            f"{g1} {g2} tau={_fmt_tau(tau)} residual={check.residual:.3e} "
            f"consistency={check.consistency_residual:.3e} {'PASS' if ok else 'FAIL'}"
        )
    return SuiteResult("cocycle", samples, failures, worst, tuple(lines))


def character_suite(
    n_max: int = 60,
    pairs_per_level: int = 10_000,
    kernel_samples: int = 200,
    pool_size: int = 64,
    seed: int = 0,
) -> SuiteResult:
    """Exact homomorphism and kernel checks for the level characters
    e(-c*d/(n*h)), over every (n, h) with n <= n_max and h | gcd(n, 12).

    The bulk loop uses the integer reduction of the phase identity: the
    character multiplies by adding exponent numerators, so the homomorphism
    statement for a pair is exactly c1*d1 + c2*d2 = c3*d3 mod n*h, where
    (c3, d3) is the product's bottom row.  The first few pairs per (n, h)
    additionally run through the public phase API and must agree with the
    reduction.
    """
    rng = random.Random(seed)
    lines = []
    failures = 0
    checks = 0
    api_pairs = 50
    for n in range(1, n_max + 1):
        for h in divisors(math.gcd(n, 12)):
            m = n * h
            pool = [random_level_element(rng, n) for _ in range(pool_size)]
            rows = [(g.a, g.b, g.c, g.d) for g in pool]
            bad = 0
            firsts = list(zip(rng.choices(pool, k=api_pairs), rng.choices(pool, k=api_pairs)))
            for g1, g2 in firsts:
                prod = g1 * g2
                phase_law = gamma0_character(n, h, g1) * gamma0_character(n, h, g2)
                api_ok = phase_law == gamma0_character(n, h, prod)
                int_ok = (g1.c * g1.d + g2.c * g2.d - prod.c * prod.d) % m == 0
                if not api_ok or api_ok != int_ok:
                    bad += 1
            for (a1, b1, c1, d1), (a2, b2, c2, d2) in zip(
                rng.choices(rows, k=pairs_per_level), rng.choices(rows, k=pairs_per_level)
            ):
                if (c1 * d1 + c2 * d2 - (c1 * a2 + d1 * c2) * (c1 * b2 + d1 * d2)) % m:
                    bad += 1
            kernel_bad = 0
            for _ in range(kernel_samples):
                g = random_level_element(rng, m)
                if not gamma0_character(n, h, g).is_one:
                    kernel_bad += 1
            checks += api_pairs + pairs_per_level + kernel_samples
            failures += bad + kernel_bad
            status = "PASS" if bad == 0 and kernel_bad == 0 else "FAIL"
            lines.append(
                f"n={n} h={h} pairs={api_pairs + pairs_per_level} "
                f"kernel_samples={kernel_samples} {status}"
            )
    return SuiteResult("character", checks, failures, None, tuple(lines))


def euler_identity_suite(depth: int = 200) -> SuiteResult:
    """Exact coefficient identities tying the theta route to the product
    route: the cube of eta matches the signed-odd-square theta sum, the
    (2,1) theta series is that same object, and the one-factor eta quotient
    of exponent 3 expands to it as well."""
    lines = []
    failures = 0
    cube = eta_expansion(depth) ** 3
    theta = unary_theta(2, 1, depth)
    same_cube = cube.offset == theta.offset and cube.coeffs[:depth] == theta.coeffs[:depth]
    failures += 0 if same_cube else 1
    lines.append(
        f"cube-vs-theta depth={depth} {'PASS' if same_cube else 'FAIL'}"
    )
    built = eta_cubed(depth)
    same_built = built == theta.truncate(depth)
    failures += 0 if same_built else 1
    lines.append(f"eta_cubed-vs-theta depth={depth} {'PASS' if same_built else 'FAIL'}")
    quotient = eta_quotient_expansion(EtaQuotient(1, {1: 3}), depth)
    same_quot = quotient.offset == built.offset and quotient.coeffs[:depth] == built.coeffs[:depth]
    failures += 0 if same_quot else 1
    lines.append(f"eta-quotient-1:3-vs-eta_cubed depth={depth} {'PASS' if same_quot else 'FAIL'}")
    return SuiteResult("euler-identity", 3, failures, None, tuple(lines))


def rr_identity_suite(n_max: int = 10_000) -> SuiteResult:
    """Exact bookkeeping identities of the classifier bounds for every level
    up to n_max: the strong bound equals divisor degree + 1 - genus, and the
    three bounds are correctly ordered."""
    identity_bad = 0
    order_bad = 0
    for n in range(1, n_max + 1):
        p = group_profile(n)
        deg = pole_divisor(n).degree()
        strong = bound_strong(n)
        weak = bound_weak(n)
        crude = bound_crude(n)
        if strong != deg + 1 - p.genus:
            identity_bad += 1
        if not crude <= weak <= strong:
            order_bad += 1
    lines = (
        f"strong-bound-identity n<={n_max} failures={identity_bad} "
        f"{'PASS' if identity_bad == 0 else 'FAIL'}",
        f"bound-ordering n<={n_max} failures={order_bad} "
        f"{'PASS' if order_bad == 0 else 'FAIL'}",
    )
    return SuiteResult("rr-identity", 2 * n_max, identity_bad + order_bad, None, lines)
