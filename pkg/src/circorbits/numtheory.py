"""Exact integer arithmetic shared by the counting formulas.

Everything here is plain arbitrary-precision integer math; no floating
point is used anywhere. Counts can be astronomically large (binomials
such as C(360, 240)), so all routines stay exact.
"""

from __future__ import annotations

import math


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers; gcd(0, 0) is undefined."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*a + v*b = g = gcd(a, b), for a, b >= 1."""
    if a < 1 or b < 1:
        raise ValueError(f"extended_gcd needs positive integers, got ({a}, {b})")
    # Run Euclid on (g, next_g) and carry the Bezout coefficients along.
    u, next_u = 1, 0
    v, next_v = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        u, next_u = next_u, u - q * next_u
        v, next_v = next_v, v - q * next_v
        g, next_g = next_g, g - q * next_g
    return g, u, v


def moebius(m: int) -> int:
    """Moebius function: 1 for m=1, (-1)^h for a product of h distinct primes, 0 otherwise."""
    if m < 1:
        raise ValueError(f"moebius needs m >= 1, got {m}")
    h = 0
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            h += 1
        p += 1 if p == 2 else 2
    if m > 1:
        h += 1
    return -1 if h % 2 else 1


def divisors(m: int) -> list[int]:
    """All divisors of m >= 1 in increasing order, including 1 and m."""
    if m < 1:
        raise ValueError(f"divisors needs m >= 1, got {m}")
    small: list[int] = []
    large: list[int] = []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i != m // i:
                large.append(m // i)
        i += 1
    return small + large[::-1]


def binomial(x: int, y: int) -> int:
    """Exact binomial coefficient C(x, y) for x >= 0; zero when y < 0 or y > x.

    Computed by the multiplicative formula with exact stepwise division,
    so intermediates never exceed the final value times x.
    """
    if x < 0:
        raise ValueError(f"binomial needs x >= 0, got {x}")
    if y < 0 or y > x:
        return 0
    y = min(y, x - y)
    result = 1
    for i in range(1, y + 1):
        result = result * (x - y + i) // i
    return result


def scaled_binomial(l: int, k: int, m: int) -> int:
    """C(l/m, k/m) when m divides both l and k, else 0."""
    if l < 1:
        raise ValueError(f"scaled_binomial needs l >= 1, got {l}")
    if m < 1:
        raise ValueError(f"scaled_binomial needs m >= 1, got {m}")
    if l % m or k % m:
        return 0
    return binomial(l // m, k // m)
