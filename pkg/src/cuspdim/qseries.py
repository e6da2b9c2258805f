"""Exact q-expansions on fractional-exponent grids, eta-product series, and
certified numeric evaluation on the upper half-plane.

A series is stored as (offset, step, coefficients): term k carries the
exponent offset + k*step.  All coefficients are exact rationals; floats
appear only inside ``evaluate``, which returns a truncation-error bound
alongside the value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "EtaQuotient",
    "EvalResult",
    "FracQSeries",
    "GridError",
    "PrecisionError",
    "eta_cubed",
    "eta_expansion",
    "eta_quotient_cusp_order",
    "eta_quotient_expansion",
    "evaluate",
    "unary_theta",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_MINUS_ONE = Fraction(-1)

# Depth cap for the constructor-time cross-check of the cube identity; see
# the dual-route note on eta_cubed.
_CUBE_CHECK_DEPTH = 1024


class GridError(ValueError):
    """Two series live on incompatible exponent grids."""


class PrecisionError(Exception):
    """A certified numeric answer is not possible at the available precision."""


def _frac_gcd(x: Fraction, y: Fraction) -> Fraction:
    return Fraction(
        math.gcd(x.numerator * y.denominator, y.numerator * x.denominator),
        x.denominator * y.denominator,
    )


class FracQSeries:
    """Truncated series sum_k coeffs[k] * q^(offset + k*step) with exact
    rational coefficients.

    ``growth``, when present, is a pair (A, alpha) certifying that every
    coefficient of the underlying infinite series satisfies
    |c_k| <= A * (1+k)^alpha; it is what makes ``evaluate`` able to report
    a rigorous truncation bound.  Arithmetic propagates the certificate;
    inversion drops it.
    """

    __slots__ = ("offset", "step", "coeffs", "growth", "_support")

    def __init__(self, offset, step, coeffs, growth=None):
        self.offset = Fraction(offset)
        self.step = Fraction(step)
        if self.step <= 0:
            raise ValueError(f"grid step must be positive, got {self.step}")
        self.coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least one retained term")
        if growth is not None:
            a, alpha = growth
            if a < 0 or alpha < 0:
                raise ValueError(f"malformed growth certificate {growth}")
            growth = (float(a), float(alpha))
        self.growth = growth
        self._support = None

    @property
    def precision(self) -> int:
        """Number of retained grid terms."""
        return len(self.coeffs)

    def exponent(self, k: int) -> Fraction:
        return self.offset + k * self.step

    def support(self) -> tuple[tuple[int, Fraction, float], ...]:
        """Nonzero terms as (index, coefficient, float(coefficient)), cached."""
        if self._support is None:
            self._support = tuple(
                (k, c, float(c)) for k, c in enumerate(self.coeffs) if c
            )
        return self._support

    def leading(self) -> tuple[int, Fraction] | None:
        """Index and value of the first nonzero coefficient, if any."""
        sup = self.support()
        return (sup[0][0], sup[0][1]) if sup else None

    def coefficient(self, exponent) -> Fraction:
        """Exact coefficient of q^exponent.

        Exponents below the offset or off the grid are structurally zero;
        on-grid exponents past the retained range are unknown and raise.
        """
        x = Fraction(exponent)
        pos = (x - self.offset) / self.step
        if pos.denominator != 1:
            return _ZERO
        k = int(pos)
        if k < 0:
            return _ZERO
        if k >= len(self.coeffs):
            raise PrecisionError(
                f"coefficient of q^{x} lies beyond the retained precision {self.precision}"
            )
        return self.coeffs[k]

    def truncate(self, precision: int) -> "FracQSeries":
        if not 1 <= precision <= len(self.coeffs):
            raise ValueError(f"cannot truncate to {precision} of {self.precision} terms")
        return FracQSeries(self.offset, self.step, self.coeffs[:precision], self.growth)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "FracQSeries":
        return FracQSeries(self.offset, self.step, tuple(-c for c in self.coeffs), self.growth)

    def __add__(self, other) -> "FracQSeries":
        if not isinstance(other, FracQSeries):
            return NotImplemented
        step = _frac_gcd(self.step, other.step)
        if ((self.offset - other.offset) / step).denominator != 1:
            raise GridError(
                f"cannot align offsets {self.offset} and {other.offset} on step {step}"
            )
        offset = min(self.offset, other.offset)
        end = min(
            self.offset + self.precision * self.step,
            other.offset + other.precision * other.step,
        )
        count = (end - offset) / step
        if count.denominator != 1 or count <= 0:
            raise GridError("series have no common range of known coefficients")
        count = int(count)
        coeffs = [_ZERO] * count
        for series in (self, other):
            start = int((series.offset - offset) / step)
            m = int(series.step / step)
            for k, c, _ in series.support():
                idx = start + k * m
                if idx >= count:
                    break
                coeffs[idx] += c
        if self.growth is not None and other.growth is not None:
            growth = (self.growth[0] + other.growth[0], max(self.growth[1], other.growth[1]))
        else:
            growth = None
        return FracQSeries(offset, step, coeffs, growth)

    def __sub__(self, other) -> "FracQSeries":
        if not isinstance(other, FracQSeries):
            return NotImplemented
        return self + (-other)

    def _scaled(self, scalar: Fraction) -> "FracQSeries":
        growth = None
        if self.growth is not None:
            growth = (self.growth[0] * abs(float(scalar)), self.growth[1])
        return FracQSeries(
            self.offset, self.step, tuple(scalar * c for c in self.coeffs), growth
        )

    def __mul__(self, other) -> "FracQSeries":
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        if not isinstance(other, FracQSeries):
            return NotImplemented
        step = _frac_gcd(self.step, other.step)
        m1 = int(self.step / step)
        m2 = int(other.step / step)
        count = int(min(self.precision * self.step, other.precision * other.step) / step)
        coeffs = [_ZERO] * count
        other_support = other.support()
        for i, ci, _ in self.support():
            base = i * m1
            if base >= count:
                break
            for j, cj, _ in other_support:
                idx = base + j * m2
                if idx >= count:
                    break
                coeffs[idx] += ci * cj
        if self.growth is not None and other.growth is not None:
            # |sum_{i+j=k} f_i g_j| <= A B sum (1+i)^a (1+k-i)^b <= A B (1+k)^(a+b+1)
            growth = (self.growth[0] * other.growth[0], self.growth[1] + other.growth[1] + 1.0)
        else:
            growth = None
        return FracQSeries(self.offset + other.offset, step, coeffs, growth)

    __rmul__ = __mul__

    def inverse(self) -> "FracQSeries":
        """Reciprocal series.  Requires a nonzero coefficient in position 0.

        The result carries no growth certificate, so it cannot be evaluated
        with a rigorous tail bound.
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("cannot invert a series whose leading retained term vanishes")
        inv0 = 1 / c0
        out = [inv0] + [_ZERO] * (self.precision - 1)
        for k in range(1, self.precision):
            acc = _ZERO
            for i in range(1, k + 1):
                ci = self.coeffs[i]
                if ci:
                    acc += ci * out[k - i]
            out[k] = -inv0 * acc
        return FracQSeries(-self.offset, self.step, out, None)

    def __pow__(self, k: int) -> "FracQSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return FracQSeries(0, self.step, (_ONE,) + (_ZERO,) * (self.precision - 1), (1.0, 0.0))
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, FracQSeries):
            return NotImplemented
        return (
            self.offset == other.offset
            and self.step == other.step
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"FracQSeries(offset={self.offset}, step={self.step}, "
            f"precision={self.precision})"
        )

    def to_json_obj(self) -> dict:
        return {
            "offset": str(self.offset),
            "step": str(self.step),
            "coeffs": [str(c) for c in self.coeffs],
        }


# -- constructors ------------------------------------------------------------


def _pentagonal_coeffs(precision: int) -> list[Fraction]:
    # Product over n >= 1 of (1 - q^n): coefficient (-1)^j at the generalized
    # pentagonal number j(3j-1)/2, both signs of j.
    coeffs = [_ZERO] * precision
    j = 0
    while True:
        placed = False
        for jj in (j, -j) if j else (0,):
            g = jj * (3 * jj - 1) // 2
            if g < precision:
                coeffs[g] = _ONE if jj % 2 == 0 else _MINUS_ONE
                placed = True
        if not placed:
            break
        j += 1
    return coeffs


def _check_precision(precision: int) -> None:
    if not isinstance(precision, int) or precision < 1:
        raise ValueError(f"precision must be a positive integer, got {precision!r}")


@lru_cache(maxsize=16)
def eta_expansion(precision: int) -> FracQSeries:
    """q^(1/24) times the product of (1 - q^n): offset 1/24, unit step,
    coefficients the pentagonal-sign sequence (so all in {-1, 0, 1})."""
    _check_precision(precision)
    return FracQSeries(Fraction(1, 24), 1, _pentagonal_coeffs(precision), (1.0, 0.0))


@lru_cache(maxsize=32)
def unary_theta(ell: int, r: int, precision: int) -> FracQSeries:
    """Weight-3/2 theta series: sum over integers m of
    (2*ell*m + r) q^((2*ell*m + r)^2 / (4*ell)).

    On the grid this is offset r^2/(4*ell), unit step, with the coefficient
    2*ell*m + r sitting at index m*(ell*m + r).
    """
    if not isinstance(ell, int) or ell < 2:
        raise ValueError(f"theta index must be an integer >= 2, got {ell!r}")
    if not isinstance(r, int) or not 0 < r < ell:
        raise ValueError(f"theta residue must satisfy 0 < r < {ell}, got {r!r}")
    _check_precision(precision)
    coeffs = [_ZERO] * precision
    m = 0
    while True:
        placed = False
        for mm in (m, -m) if m else (0,):
            k = mm * (ell * mm + r)
            if 0 <= k < precision:
                coeffs[k] = Fraction(2 * ell * mm + r)
                placed = True
        if not placed and m > 0:
            break
        m += 1
    # |2 ell m + r| <= (3 ell + 2 sqrt(ell)) * (1+k)^(1/2) at k = m(ell m + r).
    growth = (3.0 * ell + 2.0 * math.sqrt(ell), 0.5)
    return FracQSeries(Fraction(r * r, 4 * ell), 1, coeffs, growth)


@lru_cache(maxsize=16)
def eta_cubed(precision: int) -> FracQSeries:
    """Cube of the eta series, offset 1/8.

    Computed two independent ways: as the theta sum with coefficient 4m+1 at
    exponent (4m+1)^2/8, and by literally cubing ``eta_expansion``.  The two
    must agree on the checked range; disagreement is a hard failure.
    """
    _check_precision(precision)
    series = unary_theta(2, 1, precision)
    depth = min(precision, _CUBE_CHECK_DEPTH)
    cube = eta_expansion(depth) ** 3
    if series.coeffs[:depth] != cube.coeffs[:depth] or series.offset != cube.offset:
        raise ArithmeticError(
            "theta-sum and cubed-product routes disagree; series identity violated"
        )
    return series


@dataclass(frozen=True)
class EtaQuotient:
    """Formal product of eta(delta * tau)^r over divisors delta of the level.

    ``exponents`` maps delta to the (possibly negative) integer r.
    """

    level: int
    exponents: dict[int, int]

    def __post_init__(self):
        if not isinstance(self.level, int) or self.level < 1:
            raise ValueError(f"level must be a positive integer, got {self.level!r}")
        for delta, r in self.exponents.items():
            if not isinstance(delta, int) or delta < 1 or self.level % delta != 0:
                raise ValueError(f"scale {delta!r} is not a divisor of level {self.level}")
            if not isinstance(r, int):
                raise ValueError(f"exponent for scale {delta} must be an integer, got {r!r}")

    def weight(self) -> Fraction:
        return Fraction(sum(self.exponents.values()), 2)

    def leading_exponent(self) -> Fraction:
        return Fraction(sum(d * r for d, r in self.exponents.items()), 24)


def eta_quotient_expansion(quotient: EtaQuotient, precision: int) -> FracQSeries:
    """Expand an eta quotient to the requested number of grid terms.

    The grid step is the gcd of the scales; the offset is the sum of
    delta*r/24.  Negative exponents go through series inversion.
    """
    _check_precision(precision)
    items = sorted(quotient.exponents.items())
    if not items:
        return FracQSeries(0, 1, (_ONE,) + (_ZERO,) * (precision - 1), (1.0, 0.0))
    step_out = math.gcd(*[d for d, _ in items])
    span = precision * step_out
    result = None
    for delta, r in items:
        if r == 0:
            continue
        terms = span // delta + 4
        base = eta_expansion(terms)
        scaled = FracQSeries(Fraction(delta, 24), delta, base.coeffs, base.growth)
        factor = scaled**r
        result = factor if result is None else result * factor
    if result is None:
        return FracQSeries(0, 1, (_ONE,) + (_ZERO,) * (precision - 1), (1.0, 0.0))
    assert result.offset == quotient.leading_exponent()
    assert result.precision >= precision, "internal precision bookkeeping fell short"
    return result.truncate(precision)


def eta_quotient_cusp_order(quotient: EtaQuotient, cusp) -> Fraction:
    """Vanishing order of the quotient at a cusp class, in the width-w local
    uniformizer (so the order at the infinite cusp equals the leading
    q-exponent).

    For the class with denominator d at level N the order is
    N / (24 gcd(d^2, N)) times the sum of gcd(d, delta)^2 r_delta / delta.
    """
    n = quotient.level
    if cusp.level != n:
        raise ValueError(f"cusp lives at level {cusp.level}, quotient at level {n}")
    d = cusp.d
    total = sum(
        Fraction(math.gcd(d, delta) ** 2 * r, delta)
        for delta, r in quotient.exponents.items()
    )
    return Fraction(n, 24 * math.gcd(d * d, n)) * total


# -- certified numeric evaluation ---------------------------------------------


class EvalResult(NamedTuple):
    value: complex
    bound: float


def _tail_bound(a: float, alpha: float, r: float, start: int, scale: float) -> float:
    """Upper bound for A*scale*sum_{k >= start} (1+k)^alpha r^k, 0 <= r < 1.

    Split r^k = r^(k/10) * r^(9k/10); the polynomial-times-r^(k/10) factor is
    maximized in closed form and the rest is geometric.
    """
    if r <= 0.0:
        return 1e-300
    if r >= 1.0:
        return math.inf
    if alpha == 0.0:
        peak = 1.0
    else:
        y = r**0.1
        kp = -alpha / math.log(y) - 1.0
        kp = max(kp, float(start))
        peak = (1.0 + kp) ** alpha * y**kp
    log_geo = 0.9 * start * math.log(r)
    geo = math.exp(max(log_geo, -700.0))
    return a * scale * peak * geo / (1.0 - r**0.9) + 1e-300


def _series_tail_bound(series: FracQSeries, im_tau: float) -> float:
    a, alpha = series.growth
    r = math.exp(-2.0 * math.pi * im_tau * float(series.step))
    scale = math.exp(-2.0 * math.pi * im_tau * float(series.offset))
    return _tail_bound(a, alpha, r, series.precision, scale)


def evaluate(series: FracQSeries, tau: complex) -> EvalResult:
    """Numeric value of the series at tau (upper half-plane) together with a
    rigorous bound on the truncation error of the underlying infinite series.

    Requires a growth certificate on the series.  Term phases are reduced
    exactly (rational times the exact binary value of Re(tau)) before any
    float exponential, so rounding noise stays near machine epsilon; a small
    roundoff allowance is folded into the reported bound.
    """
    tau = complex(tau)
    v = tau.imag
    if v <= 0.0:
        raise ValueError(f"evaluation point must lie in the upper half-plane, got {tau}")
    if series.growth is None:
        raise PrecisionError(
            "series carries no coefficient growth certificate; "
            "a rigorous truncation bound is not available"
        )
    u = Fraction(tau.real)
    alpha_ph = (u * series.offset) % 1
    beta_ph = (u * series.step) % 1
    off_f = float(series.offset)
    step_f = float(series.step)
    two_pi = 2.0 * math.pi
    total = 0j
    absmass = 0.0
    for k, _, cf in series.support():
        decay = math.exp(-two_pi * v * (off_f + k * step_f))
        if decay == 0.0:
            break
        phase = float((alpha_ph + k * beta_ph) % 1)
        total += cf * decay * cmath.exp(2j * math.pi * phase)
        absmass += abs(cf) * decay
    bound = _series_tail_bound(series, v)
    bound += 64.0 * 2.220446049250313e-16 * (absmass + abs(total))
    return EvalResult(total, bound)
