"""Critical points of the mirror map: levels at order 3 and ell-numbers at order 5."""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from ..frobenius import frobenius_basis
from ..mirror import mirror_map_order3, mirror_map_order5, triple_integral_t, yukawa_order5
from ..series import PowerSeries
from ..theta import OperatorError, ThetaOperator, check_yy, leading_polynomial
from .context import DEFAULT, PrecisionContext, evaluate_series
from .reconstruct import ReconstructionError, rational_reconstruct
from .roots import RootError, real_roots, smallest_positive_root
from .zeta import zeta3

BAD_CASE = "Bad case"


@dataclass(frozen=True)
class CriticalPoint:
    q_c: object
    z_at_qc: object
    k_at_qc: object | None
    good: bool
    rule: str  # "z_c", "other-root" or "smallest-positive"


def critical_q(z_of_q: PowerSeries, z_c, K: PowerSeries | None = None, ctx: PrecisionContext = DEFAULT,
               p_roots=()) -> CriticalPoint:
    """Real root q_c of dz/dq where z(q_c) lands on z_c.

    Among the real roots of the truncated dz/dq the smallest in magnitude
    with z(q_c) = z_c wins.  Failing that, one landing on another real root
    of P (``p_roots``) is taken, then the smallest positive root.
    """
    roots = real_roots(z_of_q.derivative().coeffs, ctx)
    if not roots:
        raise RootError("truncated dz/dq has no real root")
    with ctx.working():
        def close(a, b):
            return abs(a - b) <= 1e-6 * max(1, abs(b))

        zs = [(r, evaluate_series(z_of_q.coeffs, r)) for r in roots]
        by_size = sorted(zs, key=lambda t: abs(t[0]))
        pick = next(((r, zr, "z_c") for r, zr in by_size if close(zr, z_c)), None)
        if pick is None:
            pick = next(((r, zr, "other-root") for r, zr in by_size
                         if any(close(zr, s) for s in p_roots)), None)
        if pick is None:
            pos = [(r, zr) for r, zr in zs if r > 0]
            if not pos:
                raise RootError("no admissible critical point of the mirror map")
            r, zr = pos[0]
            pick = (r, zr, "smallest-positive")
        q_c, z_at, rule = pick
        k_val = evaluate_series(K.coeffs, q_c) if K is not None else None
        good = k_val is None or abs(k_val) < ctx.good_threshold
    return CriticalPoint(q_c, z_at, k_val, good, rule)


@dataclass(frozen=True)
class LevelResult:
    level: object
    nearest: int
    residual: object
    tau_c: object
    q_c: object
    z_c: object
    rule: str


def level_from_qc(q_c):
    """4 pi^2 / ln^2(q_c) for 0 < q_c < 1."""
    q_c = mpmath.mpf(q_c)
    if not 0 < q_c < 1:
        raise RootError("q_c must lie in (0, 1)")
    return 4 * mpmath.pi**2 / mpmath.log(q_c) ** 2


def _p_roots(op: ThetaOperator, ctx: PrecisionContext):
    Pz = leading_polynomial(op)
    return Pz, real_roots(Pz, ctx)


def level_order3(op: ThetaOperator, ctx: PrecisionContext = DEFAULT, basis=None) -> LevelResult:
    """ell = 4 / tau_c^2 with q_c = exp(-pi tau_c)."""
    if op.order != 3:
        raise OperatorError(f"level is defined for order 3, got {op.order}")
    basis = basis or frobenius_basis(op, ctx.truncation)
    z = mirror_map_order3(basis).z_of_q
    Pz, proots = _p_roots(op, ctx)
    z_c = smallest_positive_root(Pz, ctx)
    cp = critical_q(z, z_c, None, ctx, proots)
    with ctx.working():
        if not 0 < cp.q_c < 1:
            raise RootError(f"q_c = {mpmath.nstr(cp.q_c, 10)} is not in (0, 1); tau_c is not real positive")
        tau = -mpmath.log(cp.q_c) / mpmath.pi
        lev = level_from_qc(cp.q_c)
        n = int(mpmath.nint(lev))
        return LevelResult(lev, n, abs(lev - n), tau, cp.q_c, z_c, cp.rule)


@dataclass(frozen=True)
class EllNumbers:
    good: bool
    z_c: object
    q_c: object
    k_at_qc: object
    rule: str
    tau_c: object = None
    alpha_c: object = None
    h: object = None
    raw: tuple = ()
    ell: tuple | None = None
    residuals: tuple = ()
    notes: tuple = field(default_factory=tuple)

    @property
    def f(self):
        """Legacy name for tau_c^2."""
        return None if self.tau_c is None else self.tau_c**2

    @property
    def e(self):
        """Legacy name for 2 alpha_c."""
        return None if self.alpha_c is None else 2 * self.alpha_c

    @property
    def ell1(self):
        return self.ell[0] if self.ell else None

    @property
    def ell2(self):
        return self.ell[1] if self.ell else None

    @property
    def ell3(self):
        return self.ell[2] if self.ell else None


@dataclass(frozen=True)
class Order5Pipeline:
    """Exact q-series needed by the ell computation."""

    z_of_q: PowerSeries
    K: PowerSeries
    T: PowerSeries
    dg_q: PowerSeries
    p: tuple


def order5_pipeline(op: ThetaOperator, N: int) -> Order5Pipeline:
    if op.order != 5:
        raise OperatorError(f"ell-numbers need an order-5 operator, got order {op.order}")
    basis = frobenius_basis(op, N)
    Pz = leading_polynomial(op)
    Ps = PowerSeries.from_poly(Pz, N)
    z = mirror_map_order5(basis, Ps).z_of_q
    w0 = basis.f[0]
    K = yukawa_order5(z, w0, Ps)
    dg = w0.theta().theta() * Ps.sqrt()
    n = min(len(z), len(dg))
    dg_q = dg.truncate(n).compose(z.truncate(n))
    return Order5Pipeline(z, K, triple_integral_t(K), dg_q, Pz)


def ell_numbers(op: ThetaOperator, ctx: PrecisionContext = DEFAULT) -> EllNumbers:
    """tau_c, alpha_c, h at the critical point and their ell-number reconstructions."""
    if not check_yy(op):
        raise OperatorError("ell-numbers are defined for YY operators")
    pipe = order5_pipeline(op, ctx.truncation)
    proots = real_roots(pipe.p, ctx)
    pos = [r for r in proots if r > 0]
    if not pos:
        raise RootError("P(z) has no positive real root")
    z_c = pos[0]
    cp = critical_q(pipe.z_of_q, z_c, pipe.K, ctx, proots)
    if not cp.good:
        return EllNumbers(False, z_c, cp.q_c, cp.k_at_qc, cp.rule, notes=(BAD_CASE,))
    with ctx.working():
        q_c = cp.q_c
        pi2 = mpmath.pi**2
        tau = 1 / (pi2 * evaluate_series(pipe.dg_q.coeffs, q_c))
        # real part of log q_c; q_c < 0 occurs when z_c is not the landing point
        t0 = mpmath.log(abs(q_c))
        T_c = evaluate_series(pipe.T.coeffs, q_c)
        qdT_c = evaluate_series(pipe.T.theta().coeffs, q_c)
        alpha = (t0**2 / 2 - qdT_c) / pi2 - tau
        h = (-pi2 * t0 * alpha + t0**3 / 6 - T_c) / zeta3()
        f = tau**2
        raw = (16 / f, 96 * alpha / f, -16 * h / f)
        ell, res, notes = [], [], []
        for v in raw:
            try:
                c, r = rational_reconstruct(v, ctx)
                ell.append(c)
                res.append(r)
            except ReconstructionError as exc:
                ell.append(None)
                res.append(None)
                notes.append(str(exc))
    return EllNumbers(True, z_c, cp.q_c, cp.k_at_qc, cp.rule, tau, alpha, h, raw,
                      tuple(ell) if all(e is not None for e in ell) else None, tuple(res), tuple(notes))


__all__ = [
    "BAD_CASE",
    "CriticalPoint",
    "EllNumbers",
    "LevelResult",
    "Order5Pipeline",
    "critical_q",
    "ell_numbers",
    "level_from_qc",
    "level_order3",
    "order5_pipeline",
]
