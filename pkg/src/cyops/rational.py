"""Operators sum_i a_i(z) d^i with rational-function coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import poly as P
from .poly import RatFunc
from .series import PowerSeries, SeriesError
from .theta import OperatorError

_ZERO = RatFunc.const(0)


def _lift(a) -> RatFunc:
    if isinstance(a, RatFunc):
        return a
    if isinstance(a, (tuple, list)):
        return RatFunc(P.poly(a))
    return RatFunc.const(a)


class RationalOperator:
    """``coeffs[i]`` is the coefficient a_i of d^i; the top one is nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [_lift(a) for a in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            raise OperatorError("the zero operator has no order")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def a(self, i: int) -> RatFunc:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"({c!r}) d^{i}" for i, c in enumerate(self.coeffs) if c]
        return "RationalOperator(" + " + ".join(terms) + ")"

    # -- ring structure --------------------------------------------------
    def __add__(self, other: "RationalOperator") -> "RationalOperator":
        n = max(len(self.coeffs), len(other.coeffs))
        return _build([self.a(i) + other.a(i) for i in range(n)])

    def __neg__(self) -> "RationalOperator":
        return RationalOperator([-c for c in self.coeffs])

    def __sub__(self, other: "RationalOperator") -> "RationalOperator":
        return self + (-other)

    def left_multiply(self, f) -> "RationalOperator":
        """f(z) * L."""
        f = _lift(f)
        return RationalOperator([f * c for c in self.coeffs])

    def __mul__(self, other: "RationalOperator") -> "RationalOperator":
        """Composition: (L1 L2)(y) = L1(L2(y)), using d^i b = sum C(i,k) b^(k) d^(i-k)."""
        out = [_ZERO] * (self.order + other.order + 1)
        for j, b in enumerate(other.coeffs):
            if not b:
                continue
            derivs = [b]
            for _ in range(self.order):
                derivs.append(derivs[-1].deriv())
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for k in range(i + 1):
                    if derivs[k]:
                        out[i - k + j] = out[i - k + j] + a * derivs[k] * comb(i, k)
        return _build(out)

    # -- derived operators -------------------------------------------------
    def dual(self) -> "RationalOperator":
        """sum_i (-1)^i d^i a_i."""
        out = [_ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            d = a
            for k in range(i + 1):
                if d:
                    out[i - k] = out[i - k] + d * ((-1) ** i * comb(i, k))
                d = d.deriv()
        return _build(out)

    def make_monic(self) -> "RationalOperator":
        lead = self.coeffs[-1]
        return RationalOperator([c / lead for c in self.coeffs])

    def change_variable(self, z_of_x: RatFunc) -> "RationalOperator":
        """Rewrite L in the coordinate x where z = z_of_x(x).

        Solutions y(z) become y(z(x)); d/dz = (1/z'(x)) d/dx.
        """
        z_of_x = _lift(z_of_x)
        dzdx = z_of_x.deriv()
        if not dzdx:
            raise OperatorError("coordinate change with constant z(x)")
        step = RationalOperator([_ZERO, 1 / dzdx])
        power = RationalOperator([1])
        total = None
        for a in self.coeffs:
            term = power.left_multiply(compose_ratfunc(a, z_of_x))
            total = term if total is None else total + term
            power = step * power
        return total

    def moebius_pullback(self, c) -> "RationalOperator":
        """Coordinate x with z = x / (1 + c x), i.e. x = z / (1 - c z)."""
        c = Fraction(c)
        if c == 0:
            return self
        return self.change_variable(RatFunc((0, 1), (1, c)))

    def conjugate(self, lam) -> "RationalOperator":
        """g L g^-1 for g with logarithmic derivative ``lam``: d -> d - lam."""
        lam = _lift(lam)
        if not lam:
            return self
        step = RationalOperator([-lam, 1])
        power = RationalOperator([1])
        total = None
        for a in self.coeffs:
            term = power.left_multiply(a)
            total = term if total is None else total + term
            power = step * power
        return total

    def apply(self, y: PowerSeries) -> PowerSeries:
        """L(y) as a power series; every a_i must be regular at z = 0."""
        N = len(y) - self.order
        if N <= 0:
            raise SeriesError("series too short for this operator")
        total = PowerSeries.from_poly([], N)
        d = y
        for a in self.coeffs:
            if a:
                total = total + ratfunc_series(a, N) * d.truncate(N)
            d = d.derivative()
        return total


def _build(coeffs) -> RationalOperator:
    cs = list(coeffs)
    while len(cs) > 1 and not cs[-1]:
        cs.pop()
    return RationalOperator(cs)


def compose_ratfunc(f: RatFunc, g: RatFunc) -> RatFunc:
    """f(g(x))."""
    def horner(p):
        acc = _ZERO
        for c in reversed(p):
            acc = acc * g + c
        return acc

    return horner(f.num) / horner(f.den)


def ratfunc_series(f: RatFunc, N: int) -> PowerSeries:
    if P.evaluate(f.den, 0) == 0:
        raise SeriesError("coefficient has a pole at z = 0")
    return PowerSeries.from_poly(f.num, N) / PowerSeries.from_poly(f.den, N)


def regular_solutions(op: RationalOperator, N: int) -> list[PowerSeries]:
    """Basis of power-series solutions at a regular point z = 0.

    Solution j has Taylor coefficients y_i = delta_ij for i < n.
    """
    L = op.make_monic()
    n = L.order
    a = [ratfunc_series(L.a(i), N) for i in range(n)]
    sols = []
    for j in range(n):
        y = [Fraction(0)] * (N + n)
        y[j] = Fraction(1)
        for m in range(N):
            # coefficient of z^m in y^(n) + sum a_i y^(i) vanishes
            s = Fraction(0)
            for i in range(n):
                ai = a[i].coeffs
                for l in range(m + 1):
                    if ai[l]:
                        t = m - l
                        s += ai[l] * y[t + i] * Fraction(_falling_int(t + i, i))
            y[m + n] = -s / _falling_int(m + n, n)
        sols.append(PowerSeries(y))
    return sols


def _falling_int(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


def symmetric_square(op: RationalOperator) -> RationalOperator:
    """Sym^2 of a monic d^2 + a1 d + a0."""
    if op.order != 2:
        raise OperatorError(f"symmetric square needs order 2, got {op.order}")
    if not op.is_monic:
        raise OperatorError("symmetric square needs a monic operator")
    a0, a1 = op.a(0), op.a(1)
    return RationalOperator([
        a1 * a0 * 4 + a0.deriv() * 2,
        a1 * a1 * 2 + a1.deriv() + a0 * 4,
        a1 * 3,
        1,
    ])


@dataclass(frozen=True)
class SelfDualityWitness:
    """log-derivative of alpha plus the CY(n,k) residuals.

    ``residual_relations`` holds CY(n, n-3), CY(n, n-5), ...; ``residuals``
    holds every coefficient of L alpha / alpha - (-1)^n L^dual.
    """

    log_derivative: RatFunc
    residual_relations: tuple
    residuals: tuple

    @property
    def self_dual(self) -> bool:
        return not any(self.residuals)


def alpha_ratios(lam: RatFunc, k: int) -> list[RatFunc]:
    """G_j = alpha^(j) / alpha for j <= k, from G_j = G_{j-1}' + lam G_{j-1}."""
    G = [RatFunc.const(1)]
    for _ in range(k):
        G.append(G[-1].deriv() + lam * G[-1])
    return G


def cy_relations(op: RationalOperator, lam=None) -> SelfDualityWitness:
    """Test L alpha = (-1)^n alpha L^dual given lam = alpha'/alpha.

    Without ``lam`` the operator must be monic and lam = -2 a_{n-1}/n.
    CY(n,k) = sum_{j>=k} C(j,k) (a_j G_{j-k} - (-1)^(n-j) a_j^(j-k)).
    """
    n = op.order
    if lam is None:
        if not op.is_monic:
            raise OperatorError("cy_relations without lam needs a monic operator")
        lam = op.a(n - 1) * Fraction(-2, n)
    lam = _lift(lam)
    G = alpha_ratios(lam, n)
    derivs = []
    for a in op.coeffs:
        ds = [a]
        for _ in range(n):
            ds.append(ds[-1].deriv())
        derivs.append(ds)
    res = []
    for k in range(n + 1):
        s = _ZERO
        for j in range(k, n + 1):
            a = op.a(j)
            if not a:
                continue
            sign = (-1) ** (n - j)
            s = s + (a * G[j - k] - derivs[j][j - k] * sign) * comb(j, k)
        res.append(s)
    rel = tuple(res[k] for k in range(n - 3, -1, -2))
    return SelfDualityWitness(lam, rel, tuple(res))


__all__ = [
    "RationalOperator",
    "SelfDualityWitness",
    "alpha_ratios",
    "compose_ratfunc",
    "cy_relations",
    "ratfunc_series",
    "regular_solutions",
    "symmetric_square",
]
