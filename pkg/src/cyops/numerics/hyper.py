"""Hypergeometric closed forms and the expansions of A_x and B_x."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..catalog.tables import RELATION_MATRICES
from .context import DEFAULT, PrecisionContext, mpf
from .reconstruct import ReconstructionError, rational_reconstruct
from .zeta import hurwitz_zeta, zeta3


@dataclass(frozen=True)
class GeometricInvariants:
    h3: Fraction
    c2h: Fraction
    c3: Fraction

    def as_tuple(self) -> tuple:
        return (self.h3, self.c2h, self.c3)


@dataclass(frozen=True)
class ClosedForm:
    """High-precision values and, where within tolerance, their rational snaps."""

    values: tuple
    rational: tuple | None
    residuals: tuple


def _check_s(s1, s2):
    for s in (s1, s2):
        if not 0 < s < 1:
            raise ValueError(f"s must lie in (0, 1), got {s}")


def _pieces(s1, s2):
    s1, s2 = Fraction(s1), Fraction(s2)
    _check_s(s1, s2)
    a, b = mpf(s1), mpf(s2)
    pi = mpmath.pi
    ell1 = 16 * mpmath.sin(pi * a) ** 2 * mpmath.sin(pi * b) ** 2
    cot2 = mpmath.cot(pi * a) ** 2 + mpmath.cot(pi * b) ** 2
    hz = sum(hurwitz_zeta(3, t) for t in (s1, s2, 1 - s1, 1 - s2))
    return ell1, cot2, hz / (3 * zeta3())


def _snap(values, ctx) -> ClosedForm:
    rat, res = [], []
    for v in values:
        try:
            c, r = rational_reconstruct(v, ctx)
        except ReconstructionError:
            return ClosedForm(tuple(values), None, ())
        rat.append(c)
        res.append(r)
    return ClosedForm(tuple(values), tuple(rat), tuple(res))


def hypergeometric_ell(s1, s2, ctx: PrecisionContext = DEFAULT) -> ClosedForm:
    """(ell_1, ell_2, ell_3) of the fifth-order hypergeometric operator with parameters s1, s2."""
    with ctx.working():
        l1, cot2, zr = _pieces(s1, s2)
        values = (l1, l1 * (5 + 3 * cot2), -l1 * (mpmath.mpf(2) / 3 + zr))
        return _snap(values, ctx)


def hypergeometric_invariants(s1, s2, ctx: PrecisionContext = DEFAULT) -> ClosedForm:
    """(H^3, c_2 H, c_3) of the fourth-order hypergeometric operator with parameters s1, s2."""
    with ctx.working():
        h3, cot2, zr = _pieces(s1, s2)
        values = (h3, h3 * (4 + 3 * cot2), h3 * (mpmath.mpf(4) / 3 - zr))
        return _snap(values, ctx)


def conjecture_transform(ell, family: str) -> GeometricInvariants:
    """Apply the exact linear relation for the binomial multiplier ``family``."""
    try:
        M = RELATION_MATRICES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(RELATION_MATRICES)}") from None
    if hasattr(ell, "ell"):
        ell = ell.ell
    if ell is None or len(ell) != 3:
        raise ValueError("need three reconstructed ell-numbers")
    v = [Fraction(x) for x in ell]
    out = [sum((Fraction(r) * x for r, x in zip(row, v)), Fraction(0)) for row in M]
    return GeometricInvariants(*out)


@dataclass(frozen=True)
class Expansion:
    """1 + a2 pi^2 x^2 + a3 zeta(3) x^3 + a4 pi^4 x^4 + O(x^5)."""

    a2: Fraction
    a3: Fraction
    a4: Fraction

    def numeric(self, ctx: PrecisionContext = DEFAULT) -> tuple:
        """Taylor coefficients of x^0..x^4 as reals."""
        with ctx.working():
            pi = mpmath.pi
            return (mpmath.mpf(1), mpmath.mpf(0), mpf(self.a2) * pi**2,
                    mpf(self.a3) * zeta3(), mpf(self.a4) * pi**4)


def expansion_coefficients(values, kind: str) -> Expansion:
    """Coefficients of A_x (kind "A", from (H^3, c_2H, c_3)) or B_x (kind "B", from ell)."""
    if isinstance(values, GeometricInvariants):
        values = values.as_tuple()
    a, b, c = (Fraction(x) for x in values)
    r = b / a
    if kind == "A":
        return Expansion(r / 6, c / a, Fraction(-1, 90) + r / 18 + r * r / 24 - 8 / a)
    if kind == "B":
        return Expansion(r / 6, c / a, r * r / 24 - 8 / a)
    raise ValueError(f"kind must be 'A' or 'B', got {kind!r}")


__all__ = [
    "ClosedForm",
    "Expansion",
    "GeometricInvariants",
    "conjecture_transform",
    "expansion_coefficients",
    "hypergeometric_ell",
    "hypergeometric_invariants",
]
