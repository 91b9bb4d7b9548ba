"""Series solutions of theta-form operators at z = 0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import poly as P
from .series import LogSeries, PowerSeries, SeriesError
from .theta import OperatorError, ThetaOperator

DEFAULT_TRUNCATION = 61


class ResonanceError(OperatorError):
    """P_0(n) vanishes for some n >= 1, so the recurrence cannot be solved."""


def holomorphic_solution(op: ThetaOperator, N: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """a_0 = 1, a_n = -sum_{k>=1} P_k(n-k) a_{n-k} / P_0(n)."""
    p0 = op.P(0)
    if P.evaluate(p0, Fraction(0)) != 0:
        raise OperatorError("P_0(0) != 0: z = 0 is not a root of the indicial polynomial")
    a = [Fraction(1)]
    for n in range(1, N):
        d = P.evaluate(p0, Fraction(n))
        if d == 0:
            raise ResonanceError(f"P_0({n}) = 0")
        s = Fraction(0)
        for k in range(1, min(n, op.degree) + 1):
            if a[n - k]:
                s += P.evaluate(op.P(k), Fraction(n - k)) * a[n - k]
        a.append(-s / d)
    return PowerSeries(a)


def _eps_mul(a: list, b: list, n: int) -> list:
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        if x:
            for j in range(n - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _eps_inv(a: list, n: int) -> list:
    inv0 = 1 / a[0]
    out = [inv0]
    for k in range(1, n):
        s = sum((a[i] * out[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
        out.append(-s * inv0)
    return out


def _eps_eval(p, m: int, n: int) -> list:
    """p(m + eps) mod eps^n as a coefficient list."""
    sp = P.shift(p, m)
    return [P.coeff(sp, j) for j in range(n)]


@dataclass(frozen=True)
class FrobeniusBasis:
    """w_0..w_{n-1}; w_j = sum_{i<=j} f_{j-i} (log z)^i / i!.

    ``f[r]`` is the coefficient of eps^r in sum_m a_m(eps) z^m; f[0] is the
    holomorphic period and f[r](0) = 0 for r >= 1.
    """

    order: int
    f: tuple

    @property
    def solutions(self) -> tuple:
        return tuple(self.w(j) for j in range(self.order))

    def w(self, j: int) -> LogSeries:
        return LogSeries([self.f[j - i] for i in range(j + 1)])

    def __len__(self) -> int:
        return len(self.f[0])


def is_mum(op: ThetaOperator) -> bool:
    p0 = op.P(0)
    return P.degree(p0) == op.order and all(c == 0 for c in p0[:-1])


def frobenius_basis(op: ThetaOperator, N: int = DEFAULT_TRUNCATION) -> FrobeniusBasis:
    """Full log-basis at a MUM point via the recurrence over Q[eps]/eps^n."""
    n = op.order
    if not is_mum(op):
        raise OperatorError(f"not MUM at z = 0: P_0 = {P.to_str(op.P(0), 'T')}")
    rows = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
    for m in range(1, N):
        acc = [Fraction(0)] * n
        for k in range(1, min(m, op.degree) + 1):
            if any(rows[m - k]):
                term = _eps_mul(_eps_eval(op.P(k), m - k, n), rows[m - k], n)
                acc = [x + y for x, y in zip(acc, term)]
        inv = _eps_inv(_eps_eval(op.P(0), m, n), n)
        rows.append([-x for x in _eps_mul(inv, acc, n)])
    f = tuple(PowerSeries(rows[m][r] for m in range(N)) for r in range(n))
    return FrobeniusBasis(n, f)


def apply_operator(op: ThetaOperator, w):
    """D(w) for a PowerSeries or LogSeries w, keeping w's truncation."""
    log = isinstance(w, LogSeries)
    ws = w if log else LogSeries([w])
    N = len(ws)
    powers = [ws]
    for _ in range(op.order):
        powers.append(powers[-1].theta())
    total = LogSeries([PowerSeries.from_poly([], N)])
    for k, pk in enumerate(op.coeffs):
        if not pk:
            continue
        acc = LogSeries([PowerSeries.from_poly([], N)])
        for i, c in enumerate(pk):
            if c:
                acc = acc + powers[i] * c
        shifted = LogSeries([p.shift(k).truncate(N) for p in acc.parts])
        total = total + shifted
    return total if log else total.part(0)


def hadamard_product(a: PowerSeries, b) -> PowerSeries:
    if len(b) < len(a):
        raise SeriesError("coefficient stream shorter than the series")
    return a.hadamard(b)


_BINOMIAL_FAMILIES = {
    "C(2n,n)": lambda n: Fraction(comb(2 * n, n)),
    "C(4n,2n)": lambda n: Fraction(comb(4 * n, 2 * n)),
    "C(3n,n)": lambda n: Fraction(comb(3 * n, n)),
    "C(6n,3n)C(3n,n)/C(2n,n)": lambda n: Fraction(comb(6 * n, 3 * n) * comb(3 * n, n), comb(2 * n, n)),
    "A": lambda n: Fraction(comb(2 * n, n) ** 2),
    "B": lambda n: Fraction(comb(2 * n, n) * comb(3 * n, n)),
    "C": lambda n: Fraction(comb(2 * n, n) * comb(4 * n, 2 * n)),
    "D": lambda n: Fraction(comb(3 * n, n) * comb(6 * n, 3 * n)),
}

BINOMIAL_FAMILIES = tuple(_BINOMIAL_FAMILIES)


def binomial_stream(family: str, N: int) -> list[int]:
    try:
        term = _BINOMIAL_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {BINOMIAL_FAMILIES}") from None
    out = []
    for n in range(N):
        v = term(n)
        assert v.denominator == 1, f"{family} is not integral at n={n}"
        out.append(int(v))
    return out
