"""Brute-force verification backend for the congruence-group formulas.

Cosets of the level-n group inside SL2(Z) are enumerated by breadth-first
closure under the standard generators, with coset identity decided by the
membership test alone.  Boundary orbits then fall out as cycles of the
right translation action on cosets, and each width is found by a direct
stabilizer search.  Nothing here touches the closed-form width or count
formulas, so the two routes can be compared in tests.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .gamma0 import UnimodularMatrix, is_member

__all__ = ["ORACLE_CUTOFF", "OrbitCusp", "enumerate_cosets", "oracle_cusps", "oracle_index"]

# Cost guard: the coset count grows superlinearly, and the oracle exists to
# spot-check small levels, not to scale.
ORACLE_CUTOFF = 300


@dataclass(frozen=True)
class OrbitCusp:
    """One boundary orbit found by the oracle: a representative point
    numerator/denominator (denominator 0 encodes the point at infinity)
    and the orbit's width."""

    numerator: int
    denominator: int
    width: int

    def __str__(self) -> str:
        if self.denominator == 0:
            return "inf"
        return f"{self.numerator}/{self.denominator}"


def _check_cutoff(n: int, cutoff: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"level must be a positive integer, got {n!r}")
    if n > cutoff:
        raise ValueError(
            f"oracle requested at level {n}, above the cost cutoff {cutoff}; "
            "the brute-force backend is only meant for small levels"
        )


def _coset_key(mat: UnimodularMatrix, n: int) -> tuple[int, int]:
    # Bottom rows (c, d) and (c', d') label the same coset exactly when one
    # is a unit multiple of the other mod n.  Two facts make the pair below
    # a complete canonical label.  First, g = gcd(c, n) is invariant under
    # unit scaling, and c can always be scaled to land on g itself.  Second,
    # the units that keep c at g are those congruent to 1 mod n/g, and they
    # leave d * (c/g)^{-1} mod n/g unchanged; conversely rows agreeing in
    # both coordinates are unit-proportional (check one prime power at a
    # time: whichever of c, d is invertible there carries one row to the
    # other, and coprimality of each row rules out both degenerating).
    c = mat.c % n
    d = mat.d % n
    g = math.gcd(c, n)
    n1 = n // g
    if n1 == 1:
        return (g, 0)
    c0 = (c // g) % n1
    return (g, d * pow(c0, -1, n1) % n1)


def _coset_table(n: int) -> dict[tuple[int, int], UnimodularMatrix]:
    gens = (
        UnimodularMatrix.inversion(),
        UnimodularMatrix.translation(1),
        UnimodularMatrix.translation(-1),
    )
    start = UnimodularMatrix.identity()
    table: dict[tuple[int, int], UnimodularMatrix] = {_coset_key(start, n): start}
    queue = deque([start])
    while queue:
        mat = queue.popleft()
        for g in gens:
            nxt = mat * g
            key = _coset_key(nxt, n)
            if key not in table:
                table[key] = nxt
                queue.append(nxt)
    return table


def enumerate_cosets(n: int, cutoff: int = ORACLE_CUTOFF) -> tuple[UnimodularMatrix, ...]:
    """Coset representatives of the level-n group in SL2(Z), in discovery order."""
    _check_cutoff(n, cutoff)
    return tuple(_coset_table(n).values())


def oracle_index(n: int, cutoff: int = ORACLE_CUTOFF) -> int:
    """Index of the level-n group, counted by explicit coset enumeration."""
    return len(enumerate_cosets(n, cutoff))


def _orbit_representative(sigma: UnimodularMatrix) -> tuple[int, int]:
    num, den = sigma.a, sigma.c
    if den == 0:
        return (1, 0)
    g = math.gcd(num, den)
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return (num, den)


def _orbit_width(sigma: UnimodularMatrix, n: int) -> int:
    # Least h >= 1 with sigma T^h sigma^{-1} in the group; the conjugates are
    # powers of a fixed matrix, searched directly with a hard cap at n.
    step = sigma * UnimodularMatrix.translation(1) * sigma.inverse()
    power = step
    for h in range(1, n + 1):
        if is_member(power, n):
            return h
        power = power * step
    raise RuntimeError(f"stabilizer search exceeded the cap h <= {n} at level {n}")


def oracle_cusps(n: int, cutoff: int = ORACLE_CUTOFF) -> tuple[OrbitCusp, ...]:
    """Boundary orbits of the level-n group with widths, by brute force.

    Orbits are the cycles of the right translation action on the coset
    table; the width of each orbit is recomputed independently by the
    stabilizer search and must match the cycle length.
    """
    _check_cutoff(n, cutoff)
    table = _coset_table(n)
    order = list(table)
    t = UnimodularMatrix.translation(1)

    seen: set[tuple[int, int]] = set()
    out = []
    for key in order:
        if key in seen:
            continue
        cycle = 0
        cur = key
        while cur not in seen:
            seen.add(cur)
            cycle += 1
            cur = _coset_key(table[cur] * t, n)
        assert cur == key, "translation walk left its own orbit"
        sigma = table[key]
        width = _orbit_width(sigma, n)
        assert width == cycle, f"stabilizer width {width} != orbit length {cycle} at {n}"
        num, den = _orbit_representative(sigma)
        out.append(OrbitCusp(num, den, width))
    assert sum(x.width for x in out) == len(table), "orbit widths do not sum to the coset count"
    return tuple(out)
