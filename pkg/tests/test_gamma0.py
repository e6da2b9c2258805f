import math
import random
from fractions import Fraction

import pytest

from cuspdim import (
    UnimodularMatrix,
    cusp_count,
    cusp_width,
    cusps,
    genus,
    group_profile,
    index,
    is_member,
    mu2,
    mu3,
)


def test_matrix_determinant_enforced():
    with pytest.raises(ValueError):
        UnimodularMatrix(1, 0, 0, 2)
    with pytest.raises(ValueError):
        UnimodularMatrix(0, 1, 1, 0)  # det -1
    UnimodularMatrix(0, -1, 1, 0)


def test_matrix_constructors_and_action():
    ident = UnimodularMatrix.identity()
    t = UnimodularMatrix.translation(3)
    s = UnimodularMatrix.inversion()
    assert t.act(1j) == 3 + 1j
    assert s.act(2j) == 0.5j
    assert ident.act(0.25 + 1j) == 0.25 + 1j
    assert (-ident).act(0.25 + 1j) == 0.25 + 1j
    assert s * s == -ident


def test_matrix_mul_inverse_roundtrip():
    rng = random.Random(10)
    ident = UnimodularMatrix.identity()
    g = ident
    for _ in range(50):
        step = UnimodularMatrix.translation(rng.randint(-3, 3))
        g = g * step * UnimodularMatrix.inversion()
        assert g * g.inverse() == ident
        assert g.inverse() * g == ident


def test_membership():
    assert is_member(UnimodularMatrix(1, 0, 6, 1), 6)
    assert is_member(UnimodularMatrix(1, 0, 6, 1), 3)
    assert not is_member(UnimodularMatrix.inversion(), 6)
    assert is_member(UnimodularMatrix.inversion(), 1)
    assert is_member(-UnimodularMatrix.identity(), 100)


def test_index_values():
    assert index(1) == 1
    assert index(9) == 12
    assert index(12) == 24
    assert index(23) == 24
    assert index(28) == 48
    for p in (2, 3, 5, 7, 11, 13, 23, 97):
        assert index(p) == p + 1


def test_index_multiplicative_on_coprime_parts():
    rng = random.Random(11)
    for _ in range(200):
        m = rng.randint(1, 400)
        n = rng.randint(1, 400)
        if math.gcd(m, n) == 1:
            assert index(m * n) == index(m) * index(n)


def test_cusp_width_values():
    assert cusp_width(28, 1) == 28
    assert cusp_width(28, 2) == 7
    assert cusp_width(28, 4) == 7
    assert cusp_width(28, 7) == 4
    assert cusp_width(28, 14) == 1
    assert cusp_width(28, 28) == 1
    with pytest.raises(ValueError):
        cusp_width(12, 5)


def test_cusp_width_divides_level():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(1, 2000)
        assert cusp_width(n, 1) == n
        assert cusp_width(n, n) == 1
        d = rng.choice([x for x in range(1, n + 1) if n % x == 0])
        assert n % cusp_width(n, d) == 0


def test_cusp_classes_frozen():
    table = [(c.a, c.d, c.width) for c in cusps(28)]
    assert table == [
        (0, 1, 28),
        (1, 2, 7),
        (1, 4, 7),
        (1, 7, 4),
        (1, 14, 1),
        (1, 28, 1),
    ]
    # two classes over d = 4 at level 16, split by the numerator mod 4
    table16 = [(c.a, c.d, c.width) for c in cusps(16)]
    assert table16 == [
        (0, 1, 16),
        (1, 2, 4),
        (1, 4, 1),
        (3, 4, 1),
        (1, 8, 1),
        (1, 16, 1),
    ]


def test_cusp_representatives_reduced():
    for n in (1, 6, 16, 28, 45, 90, 143):
        for c in cusps(n):
            assert math.gcd(c.a, c.d) == 1
            assert c.representative == Fraction(c.a, c.d)
            # least nonnegative numerator in its residue class coprime to d
            g = math.gcd(c.d, n // c.d)
            assert c.a >= 0
            for smaller in range(c.a % g, c.a, g):
                assert math.gcd(smaller, c.d) != 1


def test_cusp_count_values():
    assert cusp_count(1) == 1
    assert cusp_count(4) == 3
    assert cusp_count(9) == 4
    assert cusp_count(16) == 6
    assert cusp_count(23) == 2
    assert cusp_count(28) == 6


def test_widths_sum_to_index():
    rng = random.Random(13)
    levels = list(range(1, 200)) + [rng.randint(200, 30000) for _ in range(60)]
    for n in levels:
        cs = cusps(n)
        assert sum(c.width for c in cs) == index(n)
        assert len(cs) == cusp_count(n)


def test_gamma0_4p_width_multiset():
    for p in (3, 5, 7, 11, 23):
        widths = sorted(c.width for c in cusps(4 * p))
        assert widths == sorted([1, 1, p, p, 4, 4 * p])


def test_mu2_values():
    assert mu2(1) == 1
    assert mu2(2) == 1
    assert mu2(4) == 0
    assert mu2(8) == 0
    assert mu2(10) == 2
    assert mu2(13) == 2
    assert mu2(17) == 2
    assert mu2(19) == 0
    assert mu2(25) == 2


def test_mu3_values():
    assert mu3(1) == 1
    assert mu3(2) == 0
    assert mu3(3) == 1
    assert mu3(9) == 0
    assert mu3(13) == 2
    assert mu3(17) == 0
    assert mu3(19) == 2
    assert mu3(7) == 2


def test_genus_values():
    for n in range(1, 11):
        assert genus(n) == 0
    assert genus(11) == 1
    assert genus(12) == 0
    assert genus(13) == 0
    assert genus(14) == 1
    assert genus(15) == 1
    assert genus(16) == 0
    assert genus(20) == 1
    assert genus(22) == 2
    assert genus(23) == 2
    assert genus(37) == 2
    assert genus(49) == 1


def test_genus_integral_and_nonnegative():
    for n in range(1, 3000):
        g = genus(n)
        assert isinstance(g, int)
        assert g >= 0


def test_group_profile_consistency():
    for n in (1, 2, 9, 23, 28, 144, 997):
        p = group_profile(n)
        assert p.level == n
        assert p.index == index(n)
        assert p.mu2 == mu2(n)
        assert p.mu3 == mu3(n)
        assert p.genus == genus(n)
        assert p.cusps == cusps(n)
        assert p.cusp_count == cusp_count(n)
