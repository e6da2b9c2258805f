"""Eta multiplier system, level characters, half-integral automorphy factors,
and numeric verification of the transformation law satisfied by eta powers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .exact import PHASE_ONE, UnitPhase, dedekind_sum
from .gamma0 import UnimodularMatrix, is_member
from .qseries import FracQSeries, PrecisionError, evaluate

__all__ = [
    "AutomorphyContext",
    "CocycleCheck",
    "TransformCheck",
    "eta_multiplier",
    "gamma0_character",
    "j_factor",
    "verify_cocycle",
    "verify_transformation",
]


def j_factor(gamma: UnimodularMatrix, tau: complex, weight) -> complex:
    """(c*tau + d) raised to the weight, through exp(-w * Log(c*tau + d)) with
    the principal logarithm.

    With this convention the matrix -Id gets the factor e^(-pi*i*w) for every
    tau in the upper half-plane: Log(-1) = +pi*i and the minus sign in the
    exponent flips it.  Half-integral weights therefore pick the branch that
    is consistent with the eta multiplier's behavior under negation.
    """
    tau = complex(tau)
    if tau.imag <= 0.0:
        raise ValueError(f"automorphy factor needs Im(tau) > 0, got {tau}")
    w = float(weight)
    denom = gamma.c * tau + gamma.d
    return cmath.exp(-w * cmath.log(denom))


def eta_multiplier(gamma: UnimodularMatrix) -> UnitPhase:
    """The 24th root of unity by which eta transforms:
    eta(gamma tau) = eps(gamma) * (c tau + d)^(1/2) * eta(tau),
    with the principal square root for c > 0.

    Upper-triangular with d = 1: e(-b/24).  For c > 0:
    e(-(a + d)/(24 c) + s(d, c)/2 + 1/8) with s the Dedekind sum.  The
    remaining matrices reduce through negation.  The quarter-turn picked up
    depends on where the principal Log places the denominator: for c < 0 it
    sits in the lower half-plane and eps(gamma) = eps(-gamma) * e(-1/4); for
    c = 0, d < 0 it is a negative real, which Log sends to Arg = +pi, and
    eps(gamma) = eps(-gamma) * e(+1/4).  The latter makes eps(-Id) = e(1/4),
    matching e^(pi i w) at w = 1/2 as the cocycle consistency requires.
    """
    if gamma.c < 0:
        return eta_multiplier(-gamma) * UnitPhase(Fraction(-1, 4))
    if gamma.c == 0 and gamma.d < 0:
        return eta_multiplier(-gamma) * UnitPhase(Fraction(1, 4))
    if gamma.c == 0:
        # a = d = 1 here since det = 1 and d > 0.
        return UnitPhase(Fraction(-gamma.b, 24))
    c, d = gamma.c, gamma.d
    turns = (
        Fraction(-(gamma.a + d), 24 * c)
        + dedekind_sum(d % c, c) / 2
        + Fraction(1, 8)
    )
    return UnitPhase(turns)


def gamma0_character(n: int, h: int, gamma: UnimodularMatrix) -> UnitPhase:
    """Character e(-c*d / (n*h)) on the level-n group, defined for h dividing
    gcd(n, 12).  It is a homomorphism and is trivial on the level-(n*h)
    subgroup.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"level must be a positive integer, got {n!r}")
    if not isinstance(h, int) or h < 1 or math.gcd(n, 12) % h != 0:
        raise ValueError(f"scale {h!r} must divide gcd({n}, 12)")
    if not is_member(gamma, n):
        raise ValueError(f"{gamma} is not in the level-{n} group")
    return UnitPhase(Fraction(-gamma.c * gamma.d, n * h))


@dataclass(frozen=True)
class AutomorphyContext:
    """A weight together with a root-of-unity system: psi(gamma) is the eta
    multiplier raised to eta_power, times the level character when
    character_h is set.
    """

    weight: Fraction
    level: int = 1
    eta_power: int = 0
    character_h: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))
        if not isinstance(self.level, int) or self.level < 1:
            raise ValueError(f"level must be a positive integer, got {self.level!r}")
        if self.character_h is not None:
            h = self.character_h
            if not isinstance(h, int) or h < 1 or math.gcd(self.level, 12) % h != 0:
                raise ValueError(f"character scale {h!r} must divide gcd({self.level}, 12)")

    def psi(self, gamma: UnimodularMatrix) -> UnitPhase:
        phase = PHASE_ONE
        if self.eta_power:
            phase = phase * eta_multiplier(gamma) ** self.eta_power
        if self.character_h is not None:
            phase = phase * gamma0_character(self.level, self.character_h, gamma)
        return phase


class CocycleCheck(NamedTuple):
    residual: float
    consistency_residual: float


def verify_cocycle(
    context: AutomorphyContext,
    g1: UnimodularMatrix,
    g2: UnimodularMatrix,
    tau: complex,
) -> CocycleCheck:
    """Residuals of the two consistency identities of the automorphy system.

    First: psi(g1) psi(g2) j(g1, g2 tau)^w j(g2, tau)^w must equal
    psi(g1 g2) j(g1 g2, tau)^w.  Second: psi(-Id) must equal e^(pi i w),
    matching the branch picked by ``j_factor`` so that -Id acts trivially.
    """
    w = context.weight
    lhs = (
        context.psi(g1).to_complex()
        * context.psi(g2).to_complex()
        * j_factor(g1, g2.act(tau), w)
        * j_factor(g2, tau, w)
    )
    prod = g1 * g2
    rhs = context.psi(prod).to_complex() * j_factor(prod, tau, w)
    residual = abs(lhs - rhs)

    minus_id = -UnimodularMatrix.identity()
    consistency = abs(
        context.psi(minus_id).to_complex() - cmath.exp(1j * math.pi * float(w))
    )
    return CocycleCheck(residual, consistency)


class TransformCheck(NamedTuple):
    residual: float
    bound: float
    ok: bool
    precision: int


def _cheap_tail(series_probe: FracQSeries, im_tau: float, precision: int) -> float:
    """Tail estimate for the same family at a different precision, without
    building the larger series."""
    from .qseries import _tail_bound

    a, alpha = series_probe.growth
    r = math.exp(-2.0 * math.pi * im_tau * float(series_probe.step))
    scale = math.exp(-2.0 * math.pi * im_tau * float(series_probe.offset))
    return _tail_bound(a, alpha, r, precision, scale)


def verify_transformation(
    series,
    context: AutomorphyContext,
    gamma: UnimodularMatrix,
    tau: complex,
    tolerance: float = 1e-9,
) -> TransformCheck:
    """Check f(gamma tau) * psi(gamma) * j(gamma, tau)^weight = f(tau)
    numerically, reporting the residual of that identity.

    ``series`` is either a fixed FracQSeries or a callable precision ->
    FracQSeries.  In the callable case the precision is raised by doubling
    until the certified truncation error at both evaluation points is below
    a tenth of the tolerance; a fixed series that cannot reach that raises
    PrecisionError rather than returning an uncertified comparison.
    """
    tau = complex(tau)
    if tau.imag <= 0.0:
        raise ValueError(f"base point must lie in the upper half-plane, got {tau}")
    gt = gamma.act(tau)
    target = tolerance / 10.0

    if callable(series):
        probe = series(1)
        if probe.growth is None:
            raise PrecisionError("series family carries no growth certificate")
        im_min = min(tau.imag, gt.imag)
        precision = 64
        while _cheap_tail(probe, im_min, precision) > target:
            precision *= 2
            if precision > 1 << 26:
                raise PrecisionError(
                    f"cannot reach tolerance {tolerance} at Im(tau) = {im_min}"
                )
        f = series(precision)
    else:
        f = series

    left = evaluate(f, gt)
    right = evaluate(f, tau)
    if max(left.bound, right.bound) > target and not callable(series):
        raise PrecisionError(
            f"series precision {f.precision} leaves truncation error "
            f"{max(left.bound, right.bound):.3e}, above {target:.3e}"
        )
    factor = context.psi(gamma).to_complex() * j_factor(gamma, tau, context.weight)
    residual = abs(left.value * factor - right.value)
    guarantee = abs(factor) * left.bound + right.bound
    return TransformCheck(residual, guarantee, residual <= tolerance, f.precision)
