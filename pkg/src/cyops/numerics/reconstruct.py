"""Rational reconstruction of high-precision reals by continued fractions."""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .context import DEFAULT, PrecisionContext, mpf


class ReconstructionError(ArithmeticError):
    pass


def convergents(x, bound: int):
    """Continued-fraction convergents p/q of x with q <= bound."""
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    y = mpmath.mpf(x)
    while True:
        a = int(mpmath.floor(y))
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > bound:
            return
        yield Fraction(h1, k1)
        frac = y - a
        if frac == 0:
            return
        y = 1 / frac


def rational_reconstruct(x, ctx: PrecisionContext = DEFAULT) -> tuple[Fraction, object]:
    """First convergent within ``ctx.tolerance`` of x, and its residual |x - p/q|."""
    with ctx.working():
        x = mpmath.mpf(x)
        if not mpmath.isfinite(x):
            raise ReconstructionError(f"cannot reconstruct non-finite {x}")
        for c in convergents(x, ctx.denominator_bound):
            r = abs(x - mpf(c))
            if r < ctx.tolerance:
                return c, r
    raise ReconstructionError(
        f"no convergent of {mpmath.nstr(x, 15)} within {ctx.tolerance} "
        f"with denominator <= {ctx.denominator_bound}")
