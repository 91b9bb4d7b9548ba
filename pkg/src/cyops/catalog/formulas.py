"""Closed-form coefficient sums for the order-7 cases and a mod p^3 congruence."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..series import PowerSeries

FAMILIES = ("A", "B", "C", "D")


@lru_cache(maxsize=None)
def harmonic(n: int) -> Fraction:
    if n <= 0:
        return Fraction(0)
    return harmonic(n - 1) + Fraction(1, n)


def _base(family: str, k: int) -> int:
    """A(k), B(k), C(k), D(k)."""
    if family == "A":
        return comb(2 * k, k) ** 2
    if family == "B":
        return comb(2 * k, k) * comb(3 * k, k)
    if family == "C":
        return comb(2 * k, k) * comb(4 * k, 2 * k)
    if family == "D":
        return comb(3 * k, k) * comb(6 * k, 3 * k)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def _bracket(family: str, n: int, k: int) -> Fraction:
    H = harmonic
    m = n - k
    if family == "A":
        return 1 + 8 * k * (H(2 * k) - H(k) - H(2 * m) + H(m))
    if family == "B":
        return 1 + 6 * k * (H(3 * k) - H(k) - H(3 * m) + H(m))
    if family == "C":
        return 1 + 4 * k * (2 * H(4 * k) - H(k) - H(2 * k) + H(2 * m) - 2 * H(4 * m) + H(m))
    if family == "D":
        # D(k) = (6k)! / (k! (2k)! (3k)!), differentiated in k
        return 1 + 2 * k * (6 * H(6 * k) - H(k) - 2 * H(2 * k) - 3 * H(3 * k)
                            - 6 * H(6 * m) + H(m) + 2 * H(2 * m) + 3 * H(3 * m))
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def case_coefficient(family: str, n: int) -> int:
    """a_n = X(n) sum_k {1 + k d/dk} X(k)^2 X(n-k)^2 for X in A..D."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total = Fraction(0)
    for k in range(n + 1):
        total += _base(family, k) ** 2 * _base(family, n - k) ** 2 * _bracket(family, n, k)
    total *= _base(family, n)
    if total.denominator != 1:
        raise ArithmeticError(f"case {family} coefficient at n={n} is not an integer: {total}")
    return total.numerator


def uncorrected_case_d_coefficient(n: int) -> Fraction:
    """Case D with the bracket 1 + 6k(2H_6k - H_k - H_3k + H_3m - 2H_6m + H_m) in its uncorrected form.

    Kept to document that it disagrees with the case D operator from n = 1 on.
    """
    H = harmonic
    total = Fraction(0)
    for k in range(n + 1):
        m = n - k
        br = 1 + 6 * k * (2 * H(6 * k) - H(k) - H(3 * k) + H(3 * m) - 2 * H(6 * m) + H(m))
        total += _base("D", k) ** 2 * _base("D", m) ** 2 * br
    return total * _base("D", n)


def transformed_case_a(N: int) -> PowerSeries:
    """Y0 = (u/2)^(-1/4) sum C(2n,n)^4 (-z/(u/2))^n with u = 1 - 512 z + sqrt(1 - 1024 z)."""
    s = PowerSeries.from_poly([1, -1024], N).sqrt()
    half_u = (PowerSeries.from_poly([1, -512], N) + s) * Fraction(1, 2)
    x = -(PowerSeries.monomial(1, N) / half_u)
    g = PowerSeries([comb(2 * n, n) ** 4 for n in range(N)])
    return half_u.power(Fraction(-1, 4)) * g.compose(x)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def supercongruence_sum(p: int) -> Fraction:
    """sum_{n<p} C(2n,n)^2 sum_k (-1)^k 3^(n-3k) C(n,3k) C(n+k,n) (3k)!/k!^3 (39+172n+204n^2)/(-64)^n."""
    total = Fraction(0)
    for n in range(p):
        inner = 0
        for k in range(n // 3 + 1):
            inner += ((-1) ** k * 3 ** (n - 3 * k) * comb(n, 3 * k) * comb(n + k, n)
                      * (factorial(3 * k) // factorial(k) ** 3))
        total += Fraction(comb(2 * n, n) ** 2 * inner * (39 + 172 * n + 204 * n * n), (-64) ** n)
    return total


def supercongruence_residue(p: int) -> int:
    """The sum reduced mod p^3 (its denominator is a power of 2)."""
    if p <= 3 or not _is_prime(p):
        raise ValueError(f"need a prime p > 3, got {p}")
    s = supercongruence_sum(p)
    m = p ** 3
    return s.numerator * pow(s.denominator, -1, m) % m


def supercongruence_check(p: int) -> bool:
    return supercongruence_residue(p) == 39 * p * p % p ** 3
