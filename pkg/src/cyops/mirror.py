"""Mirror maps with the Yukawa couplings and instanton numbers built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .frobenius import FrobeniusBasis
from .series import LogSeries, PowerSeries, SeriesError


@dataclass(frozen=True)
class MirrorMap:
    """z(q) together with J(q) = 1/z(q) = q^-1 * j_regular(q)."""

    z_of_q: PowerSeries
    j_regular: PowerSeries

    def j_coefficients(self) -> dict[int, Fraction]:
        """Coefficients of J(q) keyed by exponent, starting at -1."""
        return {i - 1: c for i, c in enumerate(self.j_regular)}


def q_of_z_canonical(basis: FrobeniusBasis) -> PowerSeries:
    """q = exp(w1/w0) = z exp(f1/f0) as a series in z."""
    f0, f1 = basis.f[0], basis.f[1]
    return (f1 / f0).exp().shift(1).truncate(len(f0))


def mirror_map_order3(basis: FrobeniusBasis) -> MirrorMap:
    z = q_of_z_canonical(basis).functional_inverse()
    # z(q) = q u(q) with u(0) = 1, so J = q^-1 / u
    u = PowerSeries(z.coeffs[1:])
    return MirrorMap(z, u.reciprocal())


def wronskian_series(basis: FrobeniusBasis) -> PowerSeries:
    """w0 theta(w1) - w1 theta(w0); log terms cancel, constant term 1."""
    w = wronskian_t(basis, 0, 1)
    if not w.is_power_series():
        raise SeriesError("w0/w1 wronskian unexpectedly carries log terms")
    return w.part(0)


def q_of_z_order5(basis: FrobeniusBasis, p_of_z) -> PowerSeries:
    """q = exp integral w0 / ((w0 theta w1 - w1 theta w0) z sqrt(P)) dz.

    The integrand is g(z)/z with g(0) = 1; the log z part integrates to
    log z and the constant of integration is fixed so q = z + O(z^2).
    """
    N = len(basis)
    f0 = basis.f[0]
    if p_of_z.truncate(1).coeffs[0] != 1:
        raise SeriesError("P(0) must be 1")
    g = f0 / (wronskian_series(basis) * p_of_z.truncate(N).sqrt())
    if g.coeffs[0] != 1:
        raise SeriesError(f"integrand residue at z=0 is {g.coeffs[0]}, expected 1")
    tail = (g - 1).theta_inverse()
    return tail.exp().shift(1).truncate(N)


def q_of_z_order3_integral(basis: FrobeniusBasis) -> PowerSeries:
    """Same integral shape with the order-3 integrand W / (z w0^2)."""
    f0 = basis.f[0]
    g = wronskian_series(basis) / (f0 * f0)
    return (g - 1).theta_inverse().exp().shift(1).truncate(len(f0))


def mirror_map_order5(basis: FrobeniusBasis, p_of_z) -> MirrorMap:
    z = q_of_z_order5(basis, p_of_z).functional_inverse()
    u = PowerSeries(z.coeffs[1:])
    return MirrorMap(z, u.reciprocal())


def q_over_z_dz_dq(z_of_q: PowerSeries) -> PowerSeries:
    """(q/z) dz/dq = theta_q(z) / z."""
    u = PowerSeries(z_of_q.coeffs[1:])
    return PowerSeries(z_of_q.theta().coeffs[1:]) / u


def yukawa_order5(z_of_q: PowerSeries, w0: PowerSeries, p_of_z) -> PowerSeries:
    """K = ((q/z) dz/dq)^2 / (w0 sqrt(P)), with z = z(q)."""
    N = min(len(z_of_q), len(w0))
    z_of_q = z_of_q.truncate(N)
    factor = q_over_z_dz_dq(z_of_q)
    den = (w0.truncate(N) * p_of_z.truncate(N).sqrt()).compose(z_of_q)
    n = min(len(factor), len(den))
    return (factor.truncate(n) * factor.truncate(n)) / den.truncate(n)


def yukawa_order5_program(z_of_q: PowerSeries, w0: PowerSeries, p_of_z) -> PowerSeries:
    """Second route: 1/sqrt(P) * 1/w0 * (q/z dz/dq)^2 built term by term in z first."""
    N = min(len(z_of_q), len(w0))
    inv_sqrt = p_of_z.truncate(N).power(Fraction(-1, 2))
    pre = (inv_sqrt * w0.truncate(N).reciprocal()).compose(z_of_q.truncate(N))
    dz = z_of_q.truncate(N).derivative()
    u = PowerSeries(z_of_q.coeffs[1:N])
    ratio = dz.truncate(len(u)) / u
    n = min(len(pre), len(ratio))
    return pre.truncate(n) * ratio.truncate(n) * ratio.truncate(n)


def ratios_in_q(basis: FrobeniusBasis, z_of_q: PowerSeries, upto: int | None = None) -> list[LogSeries]:
    """y_j / y_0 rewritten in q, with log q as the log variable."""
    n = basis.order if upto is None else upto
    f0 = basis.f[0]
    out = []
    for j in range(n):
        y = basis.w(j) / f0
        out.append(y.change_coordinate(z_of_q))
    return out


def yukawa_from_ratio(ratio_q: LogSeries) -> PowerSeries:
    """(q d/dq)^2 of y_2/y_0 in q; must come out log-free."""
    k = ratio_q.theta().theta()
    if not k.is_power_series():
        raise SeriesError("(q d/dq)^2 (y2/y0) still has log terms")
    return k.part(0)


def yukawa_order7(basis: FrobeniusBasis, z_of_q: PowerSeries | None = None) -> PowerSeries:
    if z_of_q is None:
        z_of_q = mirror_map_order3(basis).z_of_q
    return yukawa_from_ratio(ratios_in_q(basis, z_of_q, upto=3)[2])


@dataclass(frozen=True)
class InstantonTable:
    weight: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, d: int) -> Fraction:
        return self.values[d]

    def as_list(self) -> list[Fraction]:
        return [self.values[d] for d in sorted(self.values)]


def instanton_numbers(K: PowerSeries, weight: int, D: int | None = None) -> InstantonTable:
    """Invert K = 1 + sum_d d^w n_d q^d / (1 - q^d)."""
    if K.coeffs[0] != 1:
        raise SeriesError(f"K(0) must be 1, got {K.coeffs[0]}")
    D = len(K) - 1 if D is None else D
    if D >= len(K):
        raise SeriesError(f"need K to O(q^{D + 1}), have O(q^{len(K)})")
    n: dict[int, Fraction] = {}
    for d in range(1, D + 1):
        s = K.coeffs[d]
        for e in range(1, d):
            if d % e == 0:
                s -= Fraction(e) ** weight * n[e]
        n[d] = s / Fraction(d) ** weight
    return InstantonTable(weight, n)


def lambert_series(table: InstantonTable, N: int) -> PowerSeries:
    """1 + sum_d d^w n_d q^d / (1 - q^d) to O(q^N)."""
    out = [Fraction(0)] * N
    out[0] = Fraction(1)
    for d, nd in table.values.items():
        if 1 <= d < N:
            term = Fraction(d) ** table.weight * nd
            for m in range(d, N, d):
                out[m] += term
    return PowerSeries(out)


def wronskian_t(basis: FrobeniusBasis, j: int, k: int) -> LogSeries:
    """T_jk = z (y_j y_k' - y_j' y_k) = y_j theta(y_k) - theta(y_j) y_k."""
    yj, yk = basis.w(j), basis.w(k)
    return yj * yk.theta() - yj.theta() * yk


def gw_potential(ratios: list[LogSeries]) -> LogSeries:
    """Phi = (Y1 Y2 - Y3)/2 with Y_j = y_j/y_0 (already in q)."""
    if len(ratios) < 4:
        raise SeriesError("Gromov-Witten potential needs y_0..y_3")
    return (ratios[1] * ratios[2] - ratios[3]) * Fraction(1, 2)


def triple_integral_t(K: PowerSeries) -> PowerSeries:
    """T(q) = -sum_{d>=1} c_d q^d / d^3 from K = 1 + sum c_d q^d."""
    if K.coeffs[0] != 1:
        raise SeriesError(f"K(0) must be 1, got {K.coeffs[0]}")
    return PowerSeries([0] + [-c / Fraction(d) ** 3 for d, c in enumerate(K.coeffs) if d])
