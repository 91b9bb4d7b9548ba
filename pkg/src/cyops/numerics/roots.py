"""Real roots of exact rational polynomials."""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .context import DEFAULT, PrecisionContext, mpf


class RootError(ValueError):
    pass


def _sympy_poly(coeffs):
    import sympy

    x = sympy.Symbol("x")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x)


def real_roots(coeffs, ctx: PrecisionContext = DEFAULT) -> list:
    """All real roots (with multiplicity) of a polynomial given low to high.

    Roots are isolated exactly and refined to width 10^-(digits + 5).
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        return []
    p = _sympy_poly(coeffs)
    eps = Fraction(1, 10 ** (ctx.digits + 5))
    out = []
    with ctx.working():
        for (lo, hi), m in p.intervals(eps=eps):
            mid = (Fraction(int(lo.p), int(lo.q)) + Fraction(int(hi.p), int(hi.q))) / 2
            out.extend([+mpf(mid)] * m)
    return sorted(out)


def smallest_positive_root(coeffs, ctx: PrecisionContext = DEFAULT):
    pos = [r for r in real_roots(coeffs, ctx) if r > 0]
    if not pos:
        raise RootError("polynomial has no positive real root")
    return pos[0]
