"""Indicial equations and the order-3 exponent classifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import poly as P
from .poly import Poly, RatFunc
from .rational import RationalOperator
from .theta import OperatorError, ThetaOperator, to_partial_form

INFINITY = "infinity"

Point = Union[Fraction, str, tuple]


@dataclass(frozen=True)
class IndicialData:
    """Indicial polynomial at one point, with its rational roots split off.

    ``point`` is a rational number, ``INFINITY``, or an irreducible
    polynomial (tuple) standing for each of its roots.  For an algebraic
    point whose indicial coefficients are not rational, ``polynomial`` and
    ``unresolved`` hold coefficients as residues modulo that polynomial and
    ``exponents`` is empty.
    """

    point: Point
    polynomial: tuple
    exponents: tuple
    unresolved: tuple
    regular: bool = False

    @property
    def resolved(self) -> bool:
        return len(self.unresolved) <= 1


def _as_monic_partial(op) -> RationalOperator:
    L = to_partial_form(op) if isinstance(op, ThetaOperator) else op
    return L.make_monic()


def _split_roots(poly: Poly) -> tuple[tuple, Poly]:
    roots = []
    rest = poly
    for r, m in P.rational_roots(poly):
        roots.extend([r] * m)
        for _ in range(m):
            rest = P.divmod_poly(rest, P.poly([-r, 1]))[0]
    return tuple(sorted(roots)), P.monic(rest)


def _indicial_from_limits(limits: list, n: int) -> Poly:
    out = P.ZERO
    for i, p in enumerate(limits):
        if p:
            out = P.add(out, P.scale(P.falling(i), p))
    return P.add(out, P.falling(n))


def _at_rational(L: RationalOperator, s: Fraction) -> IndicialData:
    n = L.order
    limits = []
    regular = True
    for i in range(n):
        a = L.a(i)
        if not a:
            limits.append(Fraction(0))
            continue
        vn, vd = P.valuation_at(a.num, s), P.valuation_at(a.den, s)
        pole = vd - vn
        if pole > 0:
            regular = False
        if pole > n - i:
            raise OperatorError(f"irregular singularity at z = {s}")
        if pole < n - i:
            limits.append(Fraction(0))
            continue
        lin = P.poly([-s, 1])
        num, den = a.num, a.den
        for _ in range(vn):
            num = P.divmod_poly(num, lin)[0]
        for _ in range(vd):
            den = P.divmod_poly(den, lin)[0]
        limits.append(P.evaluate(num, s) / P.evaluate(den, s))
    if regular:
        return IndicialData(s, P.falling(n), tuple(Fraction(k) for k in range(n)), P.ONE, True)
    poly = _indicial_from_limits(limits, n)
    ex, rest = _split_roots(poly)
    return IndicialData(s, poly, ex, rest)


def _mod(p: Poly, f: Poly) -> Poly:
    return P.divmod_poly(p, f)[1]


def _inverse_mod(a: Poly, f: Poly) -> Poly:
    """a^-1 in Q[z]/f by the extended Euclidean algorithm."""
    r0, r1 = f, _mod(a, f)
    s0, s1 = P.ZERO, P.ONE
    while r1:
        q, r = P.divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, P.sub(s0, P.mul(q, s1))
    if P.degree(r0) != 0:
        raise OperatorError("element is not invertible modulo the factor")
    return _mod(P.scale(s0, 1 / r0[0]), f)


def _multiplicity(p: Poly, f: Poly) -> tuple[int, Poly]:
    e = 0
    while p and P.degree(p) >= P.degree(f):
        q, r = P.divmod_poly(p, f)
        if r:
            break
        p, e = q, e + 1
    return e, p


def _at_factor(L: RationalOperator, f: Poly) -> IndicialData:
    f = P.monic(f)
    n = L.order
    fp = P.deriv(f)
    limits: list[Poly] = []
    regular = True
    for i in range(n):
        a = L.a(i)
        if not a:
            limits.append(P.ZERO)
            continue
        en, _ = _multiplicity(a.num, f)
        ed, d1 = _multiplicity(a.den, f)
        pole = ed - en
        if pole > 0:
            regular = False
        if pole > n - i:
            raise OperatorError(f"irregular singularity at roots of {P.to_str(f)}")
        if pole < n - i:
            limits.append(P.ZERO)
            continue
        # (z - s)^e / f^e -> 1 / f'(s)^e
        den = P.mul(d1, P.power(fp, ed))
        limits.append(_mod(P.mul(a.num, _inverse_mod(den, f)), f))
    if regular:
        return IndicialData(tuple(f), P.falling(n), tuple(Fraction(k) for k in range(n)), P.ONE, True)
    if all(P.degree(c) <= 0 for c in limits):
        poly = _indicial_from_limits([P.coeff(c, 0) for c in limits], n)
        ex, rest = _split_roots(poly)
        return IndicialData(tuple(f), poly, ex, rest)
    coeffs = [c for c in limits] + [P.ONE]
    # polynomial in T with coefficients in Q[z]/f, expanded in the falling basis
    poly_terms = tuple(coeffs)
    return IndicialData(tuple(f), poly_terms, (), poly_terms)


def indicial_equation(op, point) -> IndicialData:
    """Indicial data of ``op`` (theta- or d-form) at a point.

    ``point`` may be a rational, ``INFINITY``, or an irreducible polynomial
    given as a coefficient tuple (low to high).
    """
    L = _as_monic_partial(op)
    if point == INFINITY:
        M = L.change_variable(RatFunc((1,), (0, 1))).make_monic()
        d = _at_rational(M, Fraction(0))
        return IndicialData(INFINITY, d.polynomial, d.exponents, d.unresolved, d.regular)
    if isinstance(point, (tuple, list)):
        f = P.poly(point)
        if P.degree(f) == 1:
            return _at_rational(L, -f[0] / f[1])
        return _at_factor(L, f)
    return _at_rational(L, Fraction(point))


def singular_factors(op: ThetaOperator) -> list[tuple[Poly, int]]:
    """Irreducible factors over Q of c_n(z), with multiplicity."""
    import sympy

    z = sympy.Symbol("z")
    cn = op.c(op.order)
    expr = sum(sympy.Rational(c.numerator, c.denominator) * z**i for i, c in enumerate(cn))
    _, facs = sympy.factor_list(expr, z)
    out = []
    for fac, m in facs:
        coeffs = sympy.Poly(fac, z).all_coeffs()[::-1]
        out.append((P.monic(P.poly(Fraction(int(c.p), int(c.q)) for c in coeffs)), m))
    out.sort(key=lambda t: (P.degree(t[0]), t[0]))
    return out


@dataclass(frozen=True)
class Singularity:
    factor: tuple
    points: int
    data: IndicialData
    kind: str


@dataclass(frozen=True)
class MethodeReport:
    at_zero: IndicialData
    singularities: tuple = field(default_factory=tuple)
    degree: int = 0

    @property
    def zero_ok(self) -> bool:
        return self.at_zero.exponents == (0, 0, 0)

    def count(self, kind: str) -> int:
        return sum(s.points for s in self.singularities if s.kind == kind)

    @property
    def predicted_degree(self) -> int:
        return self.count("half") + 2 * (self.count("symmetric") + self.count("symmetric-edge"))

    @property
    def hypotheses_hold(self) -> bool:
        """Every finite singularity has one of the two admissible patterns."""
        return self.count("other") == 0 and self.count("symmetric-edge") == 0

    @property
    def passes(self) -> bool:
        return self.zero_ok and self.hypotheses_hold and self.predicted_degree == self.degree


def classify_exponents(ex: tuple) -> str:
    if len(ex) != 3:
        return "other"
    e = tuple(sorted(ex))
    if e == (0, Fraction(1, 2), 1):
        return "half"
    a = e[2]
    if e[0] == -a and e[1] == 0 and 0 < a < 1:
        # a = 1/2 is excluded from the degree-bound hypotheses but still counts twice in the degree
        return "symmetric" if a != Fraction(1, 2) else "symmetric-edge"
    return "other"


def check_methode(op: ThetaOperator) -> MethodeReport:
    """Exponent pattern at z = 0 and at each finite singularity of an order-3 operator."""
    if op.order != 3:
        raise OperatorError(f"exponent classifier is for order 3, got {op.order}")
    L = _as_monic_partial(op)
    at0 = _at_rational(L, Fraction(0))
    sings = []
    for f, _ in singular_factors(op):
        if P.degree(f) < 1 or f == P.X:
            continue
        d = indicial_equation(L, tuple(f))
        kind = classify_exponents(d.exponents) if d.resolved else "other"
        sings.append(Singularity(tuple(f), P.degree(f), d, kind))
    return MethodeReport(at0, tuple(sings), op.degree)


__all__ = [
    "INFINITY",
    "IndicialData",
    "MethodeReport",
    "Singularity",
    "check_methode",
    "classify_exponents",
    "indicial_equation",
    "singular_factors",
]
