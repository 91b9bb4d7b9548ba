"""Operators in theta-form: D = sum_k z^k P_k(theta), theta = z d/dz."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import poly as P
from .poly import Poly


class OperatorError(ValueError):
    """Raised for malformed or out-of-contract operators."""


@dataclass(frozen=True)
class ThetaOperator:
    """Exact operator ``sum_k z^k P_k(theta)``.

    ``coeffs[k]`` holds P_k as a low-to-high coefficient tuple in the
    indeterminate T standing for theta.
    """

    order: int
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or not self.coeffs[-1]:
            raise OperatorError("operator must have a nonzero top coefficient")
        top = max(P.degree(p) for p in self.coeffs)
        if top != self.order:
            raise OperatorError(f"declared order {self.order} but max deg P_k = {top}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def P(self, k: int) -> Poly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else P.ZERO

    def c(self, i: int) -> Poly:
        """Coefficient of theta^i as a polynomial in z."""
        return P.poly(P.coeff(pk, i) for pk in self.coeffs)

    def __mul__(self, other: "ThetaOperator") -> "ThetaOperator":
        # (z^a P(theta)) (z^b Q(theta)) = z^(a+b) P(theta + b) Q(theta)
        out: dict[int, Poly] = {}
        for a, pa in enumerate(self.coeffs):
            if not pa:
                continue
            for b, qb in enumerate(other.coeffs):
                if qb:
                    out[a + b] = P.add(out.get(a + b, P.ZERO), P.mul(P.shift(pa, b), qb))
        return _from_dict(out)

    def __add__(self, other: "ThetaOperator") -> "ThetaOperator":
        m = max(len(self.coeffs), len(other.coeffs))
        return _from_dict({k: P.add(self.P(k), other.P(k)) for k in range(m)})

    def __neg__(self) -> "ThetaOperator":
        return ThetaOperator(self.order, tuple(P.neg(p) for p in self.coeffs))

    def __sub__(self, other: "ThetaOperator") -> "ThetaOperator":
        return self + (-other)

    def scale(self, c) -> "ThetaOperator":
        return ThetaOperator(self.order, tuple(P.scale(p, c) for p in self.coeffs))

    def __str__(self) -> str:
        parts = []
        for k, pk in enumerate(self.coeffs):
            if pk:
                zk = "" if k == 0 else ("z*" if k == 1 else f"z^{k}*")
                parts.append(f"{zk}({P.to_str(pk, 'T')})")
        return " + ".join(parts)


def _from_dict(d: Mapping[int, Poly]) -> ThetaOperator:
    m = max((k for k, v in d.items() if v), default=-1)
    if m < 0:
        raise OperatorError("zero operator")
    coeffs = tuple(d.get(k, P.ZERO) for k in range(m + 1))
    return ThetaOperator(max(P.degree(p) for p in coeffs), coeffs)


def from_theta_coefficients(order: int, coeff_list: Sequence[Sequence]) -> ThetaOperator:
    """Build an operator from P_0..P_m given as T-coefficient lists.

    Trailing zero polynomials are dropped; an all-zero list is rejected.
    """
    if not coeff_list:
        raise OperatorError("empty coefficient list")
    coeffs = [P.poly(c) for c in coeff_list]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise OperatorError("zero operator")
    return ThetaOperator(order, tuple(coeffs))


def theta_poly(*factors, scale=1) -> Poly:
    """Product of linear/polynomial factors, each given low-to-high."""
    return P.scale(P.prod(P.poly(f) for f in factors), scale)


def general_form(n: int, m: int, d: Mapping[tuple[int, int], object]) -> ThetaOperator:
    """theta^n + sum_{k=1..m} z^k sum_j d[k,j] (theta + k/2)^e_j.

    The exponent is e_j = 2j+1 for odd n and e_j = 2j for even n, with
    0 <= j <= (n-1)//2 resp. n//2.
    """
    if n < 1 or m < 1:
        raise OperatorError("need n >= 1 and m >= 1")
    jmax = (n - 1) // 2 if n % 2 else n // 2
    blocks = {0: P.power(P.X, n)}
    for (k, j), val in d.items():
        if not 1 <= k <= m or not 0 <= j <= jmax:
            raise OperatorError(f"index ({k}, {j}) outside k in 1..{m}, j in 0..{jmax}")
        e = 2 * j + 1 if n % 2 else 2 * j
        term = P.scale(P.power(P.poly([Fraction(k, 2), 1]), e), val)
        blocks[k] = P.add(blocks.get(k, P.ZERO), term)
    return _from_dict({k: blocks.get(k, P.ZERO) for k in range(m + 1)})


def dual_theta(op: ThetaOperator) -> ThetaOperator:
    """Formal adjoint: P_k(T) -> P_k(-T - k - 1)."""
    return ThetaOperator(op.order, tuple(P.reflect(pk, k + 1) for k, pk in enumerate(op.coeffs)))


def check_yy(op: ThetaOperator) -> bool:
    """P_k(T) == (-1)^n P_k(-T - k) for every k."""
    sign = -1 if op.order % 2 else 1
    return all(P.reflect(pk, k) == P.scale(pk, sign) for k, pk in enumerate(op.coeffs))


def z_operator() -> ThetaOperator:
    return ThetaOperator(0, (P.ZERO, P.ONE))


def shifted_yy_identity(op: ThetaOperator) -> bool:
    """Operator identity D z == (-1)^n z D^dual, by direct expansion."""
    z = z_operator()
    lhs = op * z
    rhs = z * dual_theta(op)
    if op.order % 2:
        rhs = -rhs
    return lhs == rhs


def leading_polynomial(op: ThetaOperator, strict: bool = False) -> Poly:
    """c_n(z) normalized to value 1 at z = 0.

    With ``strict`` a non-YY operator raises instead of returning the
    (non-canonical) polynomial.
    """
    cn = op.c(op.order)
    if not cn or cn[0] == 0:
        raise OperatorError("c_n(0) = 0: operator not normalized at a MUM point")
    if strict and not check_yy(op):
        raise OperatorError("leading polynomial requested for a non-YY operator")
    return P.scale(cn, 1 / cn[0])


def p_of_z_via_integral(op: ThetaOperator, N: int):
    """exp((2/n) * integral c_{n-1} / (z c_n)), truncated to N coefficients."""
    from .series import PowerSeries

    n = op.order
    cn, cm = op.c(n), op.c(n - 1)
    if not cn or cn[0] == 0:
        raise OperatorError("c_n(0) = 0")
    if P.coeff(cm, 0) != 0:
        raise OperatorError("c_{n-1}(0) != 0: integrand has a 1/z pole, P(z) is not a series")
    num = PowerSeries.from_poly(cm[1:] if cm else (), N)
    den = PowerSeries.from_poly(cn, N)
    integrand = num / den
    return (integrand.integrate() * Fraction(2, n)).exp()


def to_partial_form(op: ThetaOperator):
    """Rewrite via theta^i = sum_j S(i, j) z^j d^j."""
    from .rational import RationalOperator
    n = op.order
    cols: list[list[Fraction]] = [[Fraction(0)] * (op.degree + n + 1) for _ in range(n + 1)]
    for k, pk in enumerate(op.coeffs):
        for i, pki in enumerate(pk):
            if not pki:
                continue
            for j in range(1, i + 1) if i else (0,):
                cols[j][k + j] += pki * P.stirling2(i, j)
    return RationalOperator(tuple(P.RatFunc(c) for c in cols))


def from_partial_form(op) -> ThetaOperator:
    """Inverse of :func:`to_partial_form` for polynomial coefficients.

    z^l d^j = z^(l-j) T(T-1)...(T-j+1) needs l >= j for every monomial.
    """
    blocks: dict[int, Poly] = {}
    for j, a in enumerate(op.coeffs):
        if not a:
            continue
        if not a.is_poly():
            raise OperatorError(f"coefficient of d^{j} is not a polynomial")
        for l, c in enumerate(a.num):
            if not c:
                continue
            if l < j:
                raise OperatorError(f"monomial z^{l} d^{j} has no theta-form")
            blocks[l - j] = P.add(blocks.get(l - j, P.ZERO), P.scale(P.falling(j), c))
    return _from_dict(blocks)
