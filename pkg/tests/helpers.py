"""Brute-force oracles shared across the test suite.  Each one deliberately
avoids the shortcut the library uses for the same quantity."""


def primes(limit):
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def eta_product_coefficients(count):
    """Integer coefficients of prod_{k>=1} (1 - q^k) through q^(count-1),
    by direct polynomial multiplication (no pentagonal-number shortcut)."""
    coeffs = [0] * count
    coeffs[0] = 1
    for k in range(1, count):
        # multiply in place by (1 - q^k); downward keeps old values intact
        for i in range(count - 1, k - 1, -1):
            coeffs[i] -= coeffs[i - k]
    return coeffs


def convolve(a, b, count):
    """First ``count`` coefficients of the product of two dense integer
    polynomials given by coefficient lists."""
    out = [0] * count
    for i, ai in enumerate(a):
        if i >= count or ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j >= count:
                break
            if bj:
                out[i + j] += ai * bj
    return out


def is_nonzero_square_mod(a, p):
    """True when a is a nonzero quadratic residue mod the odd prime p."""
    a %= p
    if a == 0:
        return False
    return any(x * x % p == a for x in range(1, p))
