import random

from cuspdim import (
    SuiteResult,
    character_suite,
    cocycle_suite,
    eta_law_suite,
    euler_identity_suite,
    is_member,
    random_level_element,
    random_unimodular,
    rr_identity_suite,
)


def test_random_unimodular_stays_in_box():
    rng = random.Random(30)
    for _ in range(500):
        g = random_unimodular(rng, 50)
        assert g.a * g.d - g.b * g.c == 1
        assert max(abs(g.a), abs(g.b), abs(g.c), abs(g.d)) <= 50


def test_random_level_element_membership():
    rng = random.Random(31)
    for n in (1, 6, 23, 60):
        for _ in range(100):
            g = random_level_element(rng, n)
            assert is_member(g, n)


def test_suites_pass_at_reduced_size():
    assert eta_law_suite(samples=50, seed=0).ok
    assert cocycle_suite(samples=50, seed=0).ok
    assert character_suite(n_max=12, pairs_per_level=500, kernel_samples=20).ok
    assert euler_identity_suite(depth=60).ok
    assert rr_identity_suite(n_max=500).ok


def test_suites_are_deterministic():
    a = eta_law_suite(samples=20, seed=7)
    b = eta_law_suite(samples=20, seed=7)
    assert a == b
    c = eta_law_suite(samples=20, seed=8)
    assert c.lines != a.lines


def test_suite_result_shape():
    r = eta_law_suite(samples=10, seed=0)
    assert isinstance(r, SuiteResult)
    assert r.name == "eta-law"
    assert r.checks == 10
    assert len(r.lines) == 10
    assert all(line.endswith("PASS") for line in r.lines)
    assert r.worst_residual is not None and r.worst_residual < 1e-9
    assert "PASS" in r.summary()
    obj = r.to_json_obj()
    assert obj["ok"] is True
    assert obj["checks"] == 10


def test_character_suite_line_per_pair():
    r = character_suite(n_max=6, pairs_per_level=50, kernel_samples=5)
    # one line for each (n, h) with h dividing gcd(n, 12)
    expected = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 3), (4, 1), (4, 2), (4, 4),
                (5, 1), (6, 1), (6, 2), (6, 3), (6, 6)]
    assert len(r.lines) == len(expected)
    for line, (n, h) in zip(r.lines, expected):
        assert line.startswith(f"n={n} h={h} ")


def test_rr_suite_counts():
    r = rr_identity_suite(n_max=200)
    assert r.checks == 400
    assert r.failures == 0
    assert len(r.lines) == 2
