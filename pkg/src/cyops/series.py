"""Truncated power series and log-graded series over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class SeriesError(ValueError):
    """A series operation was asked for something its precondition forbids."""


def _F(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class PowerSeries:
    """c_0 + c_1 z + ... + c_{N-1} z^{N-1} + O(z^N).

    ``len(s)`` is the truncation N.  Binary operations keep the smaller
    truncation of their operands, so a result never claims more than is
    known.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(_F(c) for c in coeffs)

    @classmethod
    def from_poly(cls, p: Sequence, N: int) -> "PowerSeries":
        c = list(p[:N]) + [0] * max(0, N - len(p))
        return cls(c)

    @classmethod
    def one(cls, N: int) -> "PowerSeries":
        return cls.from_poly([1], N)

    @classmethod
    def monomial(cls, k: int, N: int, c=1) -> "PowerSeries":
        out = [0] * N
        if k < N:
            out[k] = c
        return cls(out)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"PowerSeries([{head}{', ...' if len(self) > 6 else ''}], N={len(self)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def truncate(self, N: int) -> "PowerSeries":
        if N > len(self):
            raise SeriesError(f"cannot extend a series known to O(z^{len(self)}) to O(z^{N})")
        return PowerSeries(self.coeffs[:N])

    def agrees_with(self, other: "PowerSeries", N: int | None = None) -> bool:
        n = min(len(self), len(other)) if N is None else N
        return self.coeffs[:n] == other.coeffs[:n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return len(self)

    # -- ring operations -------------------------------------------------
    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.from_poly([other], len(self))

    def __add__(self, other):
        o = self._coerce(other)
        n = min(len(self), len(o))
        return PowerSeries(a + b for a, b in zip(self.coeffs[:n], o.coeffs[:n]))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = _F(other)
            return PowerSeries(a * c for a in self.coeffs)
        n = min(len(self), len(other))
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            s = Fraction(0)
            for i in range(k + 1):
                ai = a[i]
                if ai:
                    bi = b[k - i]
                    if bi:
                        s += ai * bi
            out.append(s)
        return PowerSeries(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        a = self.coeffs
        if not a or a[0] == 0:
            raise SeriesError("reciprocal needs a nonzero constant term (c_0 = 0)")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, len(a)):
            s = sum((a[i] * out[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
            out.append(-s * inv0)
        return PowerSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return self * (1 / _F(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        out = PowerSeries.one(len(self))
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    # -- calculus ----------------------------------------------------------
    def derivative(self) -> "PowerSeries":
        return PowerSeries(i * c for i, c in enumerate(self.coeffs) if i)

    def theta(self) -> "PowerSeries":
        """z d/dz; keeps the truncation."""
        return PowerSeries(i * c for i, c in enumerate(self.coeffs))

    def integrate(self) -> "PowerSeries":
        """Antiderivative with zero constant term (one more known coefficient)."""
        return PowerSeries([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def theta_inverse(self) -> "PowerSeries":
        """Solve theta(g) = f with g(0) = 0; needs f(0) = 0."""
        if self.coeffs and self.coeffs[0] != 0:
            raise SeriesError(f"theta^-1 needs c_0 = 0, got c_0 = {self.coeffs[0]}")
        return PowerSeries([0] + [c / i for i, c in enumerate(self.coeffs) if i])

    def exp(self) -> "PowerSeries":
        a = self.coeffs
        if a and a[0] != 0:
            raise SeriesError(f"exp needs c_0 = 0, got c_0 = {a[0]}")
        # theta(e) = theta(a) e
        da = [i * c for i, c in enumerate(a)]
        out = [Fraction(1)]
        for k in range(1, len(a)):
            s = sum((da[i] * out[k - i] for i in range(1, k + 1) if da[i]), Fraction(0))
            out.append(s / k)
        return PowerSeries(out)

    def log(self) -> "PowerSeries":
        a = self.coeffs
        if not a or a[0] != 1:
            raise SeriesError(f"log needs c_0 = 1, got c_0 = {a[0] if a else None}")
        return (self.theta() / self).theta_inverse()

    def power(self, alpha) -> "PowerSeries":
        """f^alpha for rational alpha and f(0) = 1 (Miller recurrence)."""
        alpha = _F(alpha)
        a = self.coeffs
        if not a or a[0] != 1:
            raise SeriesError(f"rational power needs c_0 = 1, got c_0 = {a[0] if a else None}")
        out = [Fraction(1)]
        for k in range(1, len(a)):
            s = Fraction(0)
            for i in range(1, k + 1):
                if a[i]:
                    s += (alpha * i - (k - i)) * a[i] * out[k - i]
            out.append(s / k)
        return PowerSeries(out)

    def sqrt(self) -> "PowerSeries":
        return self.power(Fraction(1, 2))

    def compose(self, g: "PowerSeries") -> "PowerSeries":
        """self(g(z)); g must have zero constant term."""
        if g.coeffs and g.coeffs[0] != 0:
            raise SeriesError(f"compose needs inner c_0 = 0, got c_0 = {g.coeffs[0]}")
        n = min(len(self), len(g))
        g = g.truncate(n)
        acc = PowerSeries.from_poly([self.coeffs[n - 1]] if n else [], n)
        for c in reversed(self.coeffs[: n - 1]):
            acc = acc * g + c
        return acc

    def functional_inverse(self) -> "PowerSeries":
        """g with self(g(q)) = q, by Lagrange inversion."""
        a = self.coeffs
        if len(a) < 2:
            raise SeriesError("series too short to invert")
        if a[0] != 0:
            raise SeriesError(f"functional inverse needs c_0 = 0, got c_0 = {a[0]}")
        if a[1] == 0:
            raise SeriesError("functional inverse needs c_1 != 0, got c_1 = 0")
        N = len(a)
        # h = z / f(z); [q^n] g = [z^(n-1)] h^n / n
        h = PowerSeries(a[1:]).reciprocal()
        out = [Fraction(0)]
        hp = PowerSeries.one(N - 1)
        for n in range(1, N):
            hp = hp * h
            out.append(hp.coeffs[n - 1] / n)
        return PowerSeries(out)

    def hadamard(self, other: Sequence) -> "PowerSeries":
        n = min(len(self), len(other))
        return PowerSeries(self.coeffs[i] * other[i] for i in range(n))

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by z^k (k >= 0) keeping truncation N + k."""
        return PowerSeries([0] * k + list(self.coeffs))

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


class LogSeries:
    """sum_i f_i(z) (log z)^i / i! with power-series parts f_0..f_d."""

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[PowerSeries]):
        parts = list(parts)
        if not parts:
            raise SeriesError("log series needs at least one part")
        n = min(len(p) for p in parts)
        parts = [p.truncate(n) for p in parts]
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        self.parts = tuple(parts)

    @classmethod
    def from_series(cls, f: PowerSeries) -> "LogSeries":
        return cls([f])

    @classmethod
    def log_power(cls, d: int, N: int) -> "LogSeries":
        """(log z)^d / d!."""
        zero = PowerSeries.from_poly([], N)
        return cls([zero] * d + [PowerSeries.one(N)])

    @property
    def log_degree(self) -> int:
        return len(self.parts) - 1

    def __len__(self) -> int:
        return len(self.parts[0])

    def part(self, i: int) -> PowerSeries:
        if i < len(self.parts):
            return self.parts[i]
        return PowerSeries.from_poly([], len(self))

    def __repr__(self) -> str:
        return f"LogSeries(log_degree={self.log_degree}, N={len(self)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogSeries):
            return NotImplemented
        n = min(len(self), len(other))
        d = max(len(self.parts), len(other.parts))
        return all(self.part(i).truncate(n) == other.part(i).truncate(n) for i in range(d))

    def truncate(self, N: int) -> "LogSeries":
        return LogSeries([p.truncate(N) for p in self.parts])

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            other = LogSeries([other])
        d = max(len(self.parts), len(other.parts))
        return LogSeries([self.part(i) + other.part(i) for i in range(d)])

    def __neg__(self):
        return LogSeries([-p for p in self.parts])

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            other = LogSeries([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return LogSeries([p * other for p in self.parts])
        if not isinstance(other, LogSeries):
            return LogSeries([p * other for p in self.parts])
        n = min(len(self), len(other))
        out = [PowerSeries.from_poly([], n) for _ in range(len(self.parts) + len(other.parts) - 1)]
        for i, f in enumerate(self.parts):
            for j, g in enumerate(other.parts):
                out[i + j] = out[i + j] + (f * g) * comb(i + j, i)
        return LogSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            inv = other.reciprocal()
            return LogSeries([p * inv for p in self.parts])
        return LogSeries([p / other for p in self.parts])

    def theta(self) -> "LogSeries":
        """theta(f L^i/i!) = theta(f) L^i/i! + f L^(i-1)/(i-1)!."""
        d = len(self.parts)
        return LogSeries([self.parts[i].theta() + self.part(i + 1) for i in range(d)])

    def is_power_series(self) -> bool:
        return len(self.parts) == 1

    def change_coordinate(self, z_of_q: PowerSeries) -> "LogSeries":
        """Rewrite in q with log z = log q + u(q), u = log(z(q)/q).

        Needs z(q) = q + O(q^2).
        """
        zq = z_of_q
        if zq.coeffs[0] != 0 or zq.coeffs[1] != 1:
            raise SeriesError("coordinate change needs z(q) = q + O(q^2)")
        # z/q is known to one coefficient fewer than z(q)
        N = min(len(self), len(zq) - 1)
        u = PowerSeries(zq.coeffs[1 : N + 1]).log()
        zq = zq.truncate(N)
        pulled = [p.truncate(N).compose(zq) for p in self.parts]
        upow = [PowerSeries.one(N)]
        for k in range(1, len(pulled)):
            upow.append(upow[-1] * u * Fraction(1, k))  # u^k / k!
        out = []
        for a in range(len(pulled)):
            acc = PowerSeries.from_poly([], N)
            for i in range(a, len(pulled)):
                acc = acc + pulled[i] * upow[i - a]
            out.append(acc)
        return LogSeries(out)
