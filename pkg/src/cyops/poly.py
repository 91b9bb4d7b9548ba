"""Dense univariate polynomials and rational functions over Q.

Polynomials are tuples of :class:`fractions.Fraction`, lowest degree first,
with trailing zeros stripped (the zero polynomial is ``()``).  Everything
here is exact; nothing rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

Poly = tuple  # tuple[Fraction, ...]

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
X: Poly = (Fraction(0), Fraction(1))


def poly(coeffs: Iterable) -> Poly:
    """Build a normalized polynomial from low-to-high coefficients."""
    c = [Fraction(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1


def coeff(p: Poly, i: int) -> Fraction:
    return p[i] if 0 <= i < len(p) else Fraction(0)


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    return poly([a + (q[i] if i < len(q) else 0) for i, a in enumerate(p)])


def neg(p: Poly) -> Poly:
    return tuple(-a for a in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def power(p: Poly, e: int) -> Poly:
    out = ONE
    for _ in range(e):
        out = mul(out, p)
    return out


def prod(factors: Iterable[Poly]) -> Poly:
    out = ONE
    for f in factors:
        out = mul(out, f)
    return out


def evaluate(p: Poly, x):
    """Horner evaluation; ``x`` may be anything supporting ``*`` and ``+``."""
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def compose(p: Poly, q: Poly) -> Poly:
    """Return p(q(T))."""
    acc = ZERO
    for a in reversed(p):
        acc = add(mul(acc, q), (a,))
    return acc


def shift(p: Poly, c) -> Poly:
    """Return p(T + c)."""
    return compose(p, poly([c, 1]))


def reflect(p: Poly, c) -> Poly:
    """Return p(-T - c)."""
    return compose(p, poly([-Fraction(c), -1]))


def deriv(p: Poly, k: int = 1) -> Poly:
    for _ in range(k):
        p = poly([i * a for i, a in enumerate(p)][1:])
    return p


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for i in range(len(p) - 1 - dq, -1, -1):
        c = r[i + dq] / lead
        if c:
            quo[i] = c
            for j, b in enumerate(q):
                r[i + j] -= c * b
    return poly(quo), poly(r[:dq])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, 1 / p[-1])


def gcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p) if p else ZERO


def lcm(p: Poly, q: Poly) -> Poly:
    return monic(divmod_poly(mul(p, q), gcd(p, q))[0])


def valuation_at(p: Poly, s) -> int:
    """Multiplicity of z = s as a root of p (p nonzero)."""
    lin = poly([-Fraction(s), 1])
    v = 0
    while p:
        quo, rem = divmod_poly(p, lin)
        if rem:
            break
        p, v = quo, v + 1
    return v


def falling(k: int) -> Poly:
    """T(T-1)...(T-k+1)."""
    return prod(poly([-j, 1]) for j in range(k))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def from_roots(roots: Sequence, lead=1) -> Poly:
    return scale(prod(poly([-Fraction(r), 1]) for r in roots), lead)


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """Rational roots of p with multiplicities (rational root theorem)."""
    from math import gcd as igcd

    if not p:
        raise ValueError("zero polynomial has every root")
    out = []
    v = 0
    while p and p[0] == 0:
        p = p[1:]
        v += 1
    if v:
        out.append((Fraction(0), v))
    if len(p) <= 1:
        return out
    den = 1
    for a in p:
        den = den * a.denominator // igcd(den, a.denominator)
    ints = [int(a * den) for a in p]
    a0, an = abs(ints[0]), abs(ints[-1])
    cands = set()
    for num in _divisors(a0):
        for d in _divisors(an):
            cands.add(Fraction(num, d))
            cands.add(Fraction(-num, d))
    for r in sorted(cands):
        m = valuation_at(p, r)
        if m:
            out.append((r, m))
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def to_str(p: Poly, var: str = "z") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        a = p[i]
        if not a:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mon and abs(a) == 1:
            s = mon
        else:
            s = f"{abs(a)}" + (f"*{mon}" if mon else "")
        terms.append(("-" if a < 0 else "+", s))
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {sg} {s}" for sg, s in terms[1:])


class RatFunc:
    """Rational function num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = ONE, _reduced: bool = False):
        num, den = poly(num), poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = ONE
            else:
                g = gcd(num, den)
                if len(g) > 1:
                    num = divmod_poly(num, g)[0]
                    den = divmod_poly(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num, den = scale(num, 1 / lead), scale(den, 1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(poly([c]), ONE, True)

    @staticmethod
    def _lift(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, tuple):
            return RatFunc(other)
        return RatFunc.const(other)

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(add(self.num, o.num), self.den)
        return RatFunc(add(mul(self.num, o.den), mul(o.num, self.den)), mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(neg(self.num), self.den, True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(mul(self.num, o.num), mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(mul(self.num, o.den), mul(self.den, o.num))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc.const(1) / (self ** (-e))
        return RatFunc(power(self.num, e), power(self.den, e))

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        if self.den == ONE:
            return f"RatFunc({to_str(self.num)})"
        return f"RatFunc(({to_str(self.num)})/({to_str(self.den)}))"

    def is_poly(self) -> bool:
        return len(self.den) == 1

    def deriv(self, k: int = 1) -> "RatFunc":
        f = self
        for _ in range(k):
            f = RatFunc(sub(mul(deriv(f.num), f.den), mul(f.num, deriv(f.den))), mul(f.den, f.den))
        return f

    def __call__(self, x):
        return evaluate(self.num, x) / evaluate(self.den, x)

    def order_at(self, s) -> int:
        """Order of vanishing at z=s (negative for poles)."""
        if not self.num:
            raise ValueError("order of the zero function is undefined")
        return valuation_at(self.num, s) - valuation_at(self.den, s)

    def substitute(self, a, b, c, d) -> "RatFunc":
        """f((a x + b) / (c x + d)) as a rational function of x."""
        top, bot = poly([b, a]), poly([d, c])
        n = max(len(self.num), len(self.den)) - 1

        def homog(p: Poly) -> Poly:
            acc = ZERO
            for i, ai in enumerate(p):
                acc = add(acc, scale(mul(power(top, i), power(bot, n - i)), ai))
            return acc

        return RatFunc(homog(self.num), homog(self.den))


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
