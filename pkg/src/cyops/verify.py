"""Per-entry regression checks shared by ``cyops catalog verify-all`` and the test suite."""

from __future__ import annotations

from fractions import Fraction

import mpmath

from . import poly as P
from .catalog import CatalogEntry, formulas
from .frobenius import apply_operator, frobenius_basis
from .indicial import check_methode, indicial_equation
from .mirror import instanton_numbers, mirror_map_order3, mirror_map_order5, yukawa_order7
from .numerics import PrecisionContext, ell_numbers, level_order3
from .series import PowerSeries
from .theta import ThetaOperator, check_yy, leading_polynomial, p_of_z_via_integral


def fmt(x, digits: int = 20) -> str:
    """Stable text for exact or floating values."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, digits, min_fixed=-1e9, max_fixed=1e9)
    if isinstance(x, (tuple, list)):
        return "[" + ", ".join(fmt(v, digits) for v in x) + "]"
    return str(x)


def mirror_map(op: ThetaOperator, N: int) -> PowerSeries:
    """z(q): the order-5 coordinate for order 5, q = exp(w1/w0) otherwise."""
    basis = frobenius_basis(op, N)
    if op.order == 5:
        Ps = PowerSeries.from_poly(leading_polynomial(op), N)
        return mirror_map_order5(basis, Ps).z_of_q
    return mirror_map_order3(basis).z_of_q


def p_formula_holds(op: ThetaOperator) -> bool:
    N = 2 * op.degree + 5
    return p_of_z_via_integral(op, N).truncate(N) == PowerSeries.from_poly(leading_polynomial(op), N)


def zero_is_mum(op: ThetaOperator) -> bool:
    return indicial_equation(op, 0).exponents == (0,) * op.order


def instanton_prefix(op: ThetaOperator, count: int, weight: int = 4, N: int | None = None):
    N = N or count + 2
    K = yukawa_order7(frobenius_basis(op, N))
    return instanton_numbers(K, weight, count).as_list()


def verify_entry(entry: CatalogEntry, ctx: PrecisionContext, numeric: bool = True) -> dict:
    """Flat record of check name -> text value, plus a ``status`` field."""
    op = entry.operator
    rec: dict = {"id": entry.id, "group": entry.group, "order": op.order, "degree": op.degree}
    bad: list[str] = []

    yy = check_yy(op)
    rec["yy"] = "pass" if yy else "fail"
    if yy != entry.expected.get("yy", (True,))[0]:
        bad.append("yy")
    rec["mum_at_zero"] = zero_is_mum(op)
    if not rec["mum_at_zero"]:
        bad.append("mum_at_zero")
    if yy:
        rec["p_formula"] = p_formula_holds(op)
        if not rec["p_formula"]:
            bad.append("p_formula")
        rec["p"] = P.to_str(leading_polynomial(op))

    if "annihilates" in entry.expected:
        y0 = formulas.transformed_case_a(41)
        rec["annihilates_y0"] = apply_operator(op, y0).truncate(40).is_zero()
        if not rec["annihilates_y0"]:
            bad.append("annihilates_y0")

    if op.order == 3:
        rep = check_methode(op)
        rec["methode"] = "pass" if rep.passes else "fail"
        rec["methode_degree"] = f"{rep.predicted_degree}/{rep.degree}"
        if entry.group == "order3-construction" and not rep.passes:
            bad.append("methode")

    if op.order in (3, 5) and yy:
        z = mirror_map(op, 31)
        rec["mirror_integral"] = all(c.denominator == 1 for c in z.coeffs[:30])
        if not rec["mirror_integral"]:
            bad.append("mirror_integral")

    if numeric:
        if "level" in entry.expected:
            lv = level_order3(op, ctx)
            label = entry.expected["level"][0]
            rec["level"] = fmt(lv.level)
            rec["level_residual"] = mpmath.nstr(abs(lv.level - label), 5)
            if abs(lv.level - label) >= ctx.tolerance:
                bad.append("level")
        if "ell" in entry.expected:
            r = ell_numbers(op, ctx)
            rec["good"] = r.good
            rec["ell"] = fmt(r.ell) if r.ell else "none"
            rec["ell_expected"] = fmt(entry.expected["ell"][0])
            rec["tau_c"], rec["alpha_c"], rec["h"] = fmt(r.tau_c), fmt(r.alpha_c), fmt(r.h)
            rec["q_c"], rec["z_c"] = fmt(r.q_c), fmt(r.z_c)
            match = r.ell is not None and tuple(r.ell) == tuple(entry.expected["ell"][0])
            if "ell_excluded" in entry.expected:
                rec["ell_check"] = "excluded"
            else:
                rec["ell_check"] = "match" if match else "mismatch"
                if not match:
                    bad.append("ell")
        if "instantons" in entry.expected:
            want = entry.expected["instantons"][0]
            got = instanton_prefix(op, len(want))
            rec["instantons"] = fmt(got)
            if tuple(got) != tuple(want):
                rec["instantons_expected"] = fmt(want)
                bad.append("instantons")

    rec["status"] = "ok" if not bad else "mismatch:" + ",".join(bad)
    return {k: fmt(v) for k, v in rec.items()}


__all__ = ["fmt", "instanton_prefix", "mirror_map", "p_formula_holds", "verify_entry", "zero_is_mum"]
