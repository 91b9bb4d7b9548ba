"""Bernoulli numbers and the Hurwitz zeta function by Euler-Maclaurin."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from .context import mpf


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


def hurwitz_zeta(s: int, a) -> mpmath.mpf:
    """zeta(s, a) = sum_{k>=0} (k + a)^-s for integer s >= 2 and a > 0.

    Direct sum up to M, then the Euler-Maclaurin tail with Bernoulli
    corrections; M and the number of corrections follow the working
    precision.
    """
    if s < 2:
        raise ValueError("hurwitz_zeta needs s >= 2")
    a = mpf(a)
    if a <= 0:
        raise ValueError("hurwitz_zeta needs a > 0")
    dps = mpmath.mp.dps
    M = dps + 10
    J = dps // 2 + 5
    total = mpmath.fsum((a + k) ** (-s) for k in range(M))
    x = a + M
    total += x ** (1 - s) / (s - 1) + x ** (-s) / 2
    rising = mpmath.mpf(s)  # s (s+1) ... (s + 2j - 2)
    fact = mpmath.mpf(2)  # (2j)!
    for j in range(1, J + 1):
        term = mpf(bernoulli(2 * j)) / fact * rising * x ** (-s - 2 * j + 1)
        total += term
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return total


def zeta3() -> mpmath.mpf:
    return hurwitz_zeta(3, 1)
