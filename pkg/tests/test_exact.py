import math
import random
from fractions import Fraction

import pytest

from cuspdim import (
    UnitPhase,
    dedekind_sum,
    divisors,
    euler_phi,
    factorize,
    kronecker,
    sawtooth,
)
from helpers import is_nonzero_square_mod, primes


def test_factorize_small():
    assert factorize(1).factors == {}
    assert factorize(12).factors == {2: 2, 3: 1}
    assert factorize(360).factors == {2: 3, 3: 2, 5: 1}
    assert factorize(97).factors == {97: 1}
    assert factorize(2**20).factors == {2: 20}


def test_factorize_accessors():
    f = factorize(720)
    assert f.nu(2) == 4
    assert f.nu(3) == 2
    assert f.nu(7) == 0
    assert f.primes() == (2, 3, 5)


def test_factorize_roundtrip_random():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 10**7)
        prod = 1
        for p, e in factorize(n).factors.items():
            assert all(p % q for q in range(2, int(p**0.5) + 1))
            prod *= p**e
        assert prod == n


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-12)


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(23) == (1, 23)
    assert divisors(36) == (1, 2, 3, 4, 6, 9, 12, 18, 36)
    with pytest.raises(ValueError):
        divisors(0)


def test_divisor_count_matches_factorization():
    for n in range(1, 500):
        expected = 1
        for e in factorize(n).factors.values():
            expected *= e + 1
        assert len(divisors(n)) == expected


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(23) == 22
    assert euler_phi(2**10) == 512
    # sum of phi(d) over divisors of n recovers n
    for n in range(1, 200):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_kronecker_fixed_values():
    assert kronecker(2, 15) == 1
    assert kronecker(5, 1) == 1
    assert kronecker(6, 3) == 0
    assert kronecker(3, 2) == -1
    assert kronecker(7, 2) == 1
    assert kronecker(-4, 3) == -1
    assert kronecker(-4, 5) == 1
    assert kronecker(-3, 7) == 1
    assert kronecker(-3, 5) == -1
    # degenerate second argument: unit detection
    assert kronecker(1, 0) == 1
    assert kronecker(-1, 0) == 1
    assert kronecker(2, 0) == 0


def test_kronecker_euler_criterion():
    for p in primes(200):
        if p == 2:
            continue
        for a in range(1, p):
            expected = 1 if is_nonzero_square_mod(a, p) else -1
            assert kronecker(a, p) == expected
            assert pow(a, (p - 1) // 2, p) == expected % p


def test_kronecker_multiplicative():
    rng = random.Random(2)
    for _ in range(300):
        a = rng.randint(-50, 50)
        b = rng.randint(-50, 50)
        n = rng.randint(1, 60)
        m = rng.randint(1, 60)
        assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)
        assert kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m)


def test_sawtooth_values():
    assert sawtooth(0) == 0
    assert sawtooth(5) == 0
    assert sawtooth(Fraction(1, 2)) == 0
    assert sawtooth(Fraction(1, 4)) == Fraction(-1, 4)
    assert sawtooth(Fraction(3, 4)) == Fraction(1, 4)
    assert sawtooth(Fraction(7, 3)) == Fraction(-1, 6)


def test_sawtooth_odd_and_periodic():
    rng = random.Random(3)
    for _ in range(200):
        x = Fraction(rng.randint(-100, 100), rng.randint(1, 30))
        assert sawtooth(-x) == -sawtooth(x)
        assert sawtooth(x + 1) == sawtooth(x)


def test_dedekind_sum_values():
    assert dedekind_sum(0, 1) == 0
    assert dedekind_sum(1, 2) == 0
    assert dedekind_sum(1, 3) == Fraction(1, 18)
    assert dedekind_sum(2, 3) == Fraction(-1, 18)
    assert dedekind_sum(3, 5) == 0
    assert dedekind_sum(1, 5) == Fraction(1, 5)
    assert dedekind_sum(1, 6) == Fraction(5, 18)


def test_dedekind_sum_validation():
    with pytest.raises(ValueError):
        dedekind_sum(1, 0)
    with pytest.raises(ValueError):
        dedekind_sum(2, 4)


def test_dedekind_reciprocity():
    # s(d,c) + s(c,d) = -1/4 + (d/c + c/d + 1/(c d)) / 12 for coprime d < c
    rng = random.Random(4)
    seen = 0
    while seen < 150:
        c = rng.randint(2, 200)
        d = rng.randint(1, c - 1)
        if math.gcd(c, d) != 1:
            continue
        seen += 1
        lhs = dedekind_sum(d, c) + dedekind_sum(c, d)
        rhs = Fraction(-1, 4) + (Fraction(d, c) + Fraction(c, d) + Fraction(1, c * d)) / 12
        assert lhs == rhs


def test_unit_phase_arithmetic():
    third = UnitPhase(Fraction(1, 3))
    half = UnitPhase(Fraction(1, 2))
    assert (third * half).turns == Fraction(5, 6)
    assert UnitPhase(Fraction(7, 6)).turns == Fraction(1, 6)
    assert UnitPhase(Fraction(-1, 24)).turns == Fraction(23, 24)
    assert (third**3).is_one
    assert third.inverse() == third.conjugate()
    assert (third * third.inverse()).is_one
    assert str(UnitPhase(Fraction(3, 8))) == "e(3/8)"


def test_unit_phase_order():
    rng = random.Random(5)
    for _ in range(100):
        p = UnitPhase(Fraction(rng.randint(-40, 40), rng.randint(1, 24)))
        k = p.order
        assert k >= 1
        assert (p**k).is_one
        # no smaller positive power is trivial
        for j in range(1, k):
            assert not (p**j).is_one


def test_unit_phase_to_complex():
    assert abs(UnitPhase(Fraction(1, 4)).to_complex() - 1j) < 1e-15
    assert abs(UnitPhase(Fraction(1, 2)).to_complex() + 1) < 1e-15
    rng = random.Random(6)
    for _ in range(50):
        p = UnitPhase(Fraction(rng.randint(-20, 20), rng.randint(1, 48)))
        z = p.to_complex()
        assert abs(abs(z) - 1.0) < 1e-15
