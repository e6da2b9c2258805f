import pytest

from cuspdim import (
    ORACLE_CUTOFF,
    cusp_count,
    cusps,
    enumerate_cosets,
    index,
    is_member,
    oracle_cusps,
    oracle_index,
)


def test_cutoff_refusal():
    assert ORACLE_CUTOFF == 300
    with pytest.raises(ValueError):
        oracle_cusps(301)
    with pytest.raises(ValueError):
        enumerate_cosets(500)
    with pytest.raises(ValueError):
        oracle_index(10**6)
    # an explicit cutoff lifts the default refusal
    assert oracle_index(310, cutoff=310) == index(310)


def test_oracle_index_matches_formula():
    for n in list(range(1, 40)) + [60, 97, 120, 128, 180, 210, 243, 300]:
        assert oracle_index(n) == index(n)


def test_cosets_pairwise_inequivalent():
    # complete coset list: distinct representatives never differ by a
    # level-n element, and every representative differs from itself by one
    for n in (1, 4, 6, 12, 17, 24, 30):
        reps = enumerate_cosets(n)
        assert len(reps) == index(n)
        for i, g in enumerate(reps):
            for j, h in enumerate(reps):
                assert is_member(g * h.inverse(), n) == (i == j)


def test_orbit_widths_match_formula():
    for n in list(range(1, 61)) + [97, 120, 128, 180, 210, 243, 300]:
        formula = sorted(c.width for c in cusps(n))
        orbits = oracle_cusps(n)
        assert sorted(o.width for o in orbits) == formula
        assert len(orbits) == cusp_count(n)


def test_orbit_widths_cover_cosets():
    for n in (1, 2, 12, 23, 28, 60, 143):
        orbits = oracle_cusps(n)
        assert sum(o.width for o in orbits) == index(n)
        assert all(o.width >= 1 for o in orbits)


def test_orbit_representatives():
    for n in (1, 4, 23, 28, 90):
        orbits = oracle_cusps(n)
        # exactly one orbit is the class of the point at infinity
        at_infinity = [o for o in orbits if o.denominator == 0]
        assert len(at_infinity) == 1
        assert at_infinity[0].numerator == 1
        for o in orbits:
            if o.denominator:
                assert o.denominator > 0


def test_infinity_orbit_width_one():
    for n in (1, 7, 28, 120):
        for o in oracle_cusps(n):
            if o.denominator == 0:
                assert o.width == 1
