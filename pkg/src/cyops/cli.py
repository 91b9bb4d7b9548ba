"""``cyops`` command line.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
Environment overrides (used when the flag is absent): CYOPS_TRUNCATION,
CYOPS_DIGITS, CYOPS_TOLERANCE, CYOPS_FORMAT.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import catalog, cyop
from . import poly as P
from .catalog import formulas, tables
from .frobenius import frobenius_basis
from .indicial import INFINITY, check_methode, indicial_equation
from .mirror import instanton_numbers, yukawa_order5, yukawa_order7
from .numerics import (BAD_CASE, PrecisionContext, RootError, conjecture_transform, ell_numbers,
                       hypergeometric_ell, hypergeometric_invariants, level_order3)
from .series import PowerSeries
from .theta import OperatorError, ThetaOperator, check_yy, dual_theta, leading_polynomial
from .verify import fmt, mirror_map, verify_entry

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _env(name, cast, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not a valid value") from None


def _context(args) -> PrecisionContext:
    N = args.order_truncation if args.order_truncation is not None else _env("CYOPS_TRUNCATION", int, 61)
    digits = args.digits if args.digits is not None else _env("CYOPS_DIGITS", int, 30)
    tol = args.tolerance if args.tolerance is not None else _env("CYOPS_TOLERANCE", float, 1e-6)
    try:
        return PrecisionContext(digits=digits, truncation=N, tolerance=tol, good_threshold=1e-6)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _format(args) -> str:
    f = args.format or os.environ.get("CYOPS_FORMAT", "text")
    if f not in ("text", "structured"):
        raise UsageError(f"unknown format {f!r}")
    return f


def _resolve(target: str) -> tuple[str, ThetaOperator]:
    path = Path(target)
    if path.suffix == ".cyop" or path.is_file():
        if not path.is_file():
            raise UsageError(f"no such file: {target}")
        return target, cyop.load(path)
    try:
        return target, catalog.get_entry(target).operator
    except catalog.UnknownEntry:
        raise UsageError(f"{target!r} is neither a .cyop file nor a catalog id") from None


def _json_value(v):
    # exact values go out as strings; flags and plain numbers stay native
    if v is None or isinstance(v, (bool, int)):
        return v
    if isinstance(v, (tuple, list)):
        return [_json_value(x) for x in v]
    return fmt(v)


class Out:
    """Collects a flat record; prints text lines or one JSON object."""

    def __init__(self, style: str):
        self.style = style
        self.rec: dict = {}

    def put(self, key, value, text: str | None = None):
        self.rec[key] = _json_value(value)
        if self.style == "text":
            print(text if text is not None else f"{key}: {fmt(value)}")

    def series(self, key, s: PowerSeries, start: int = 0):
        self.rec[key] = {str(i + start): str(c) for i, c in enumerate(s.coeffs)}
        if self.style == "text":
            print(f"{key}:")
            for i, c in enumerate(s.coeffs):
                print(f"  {i + start}: {c}")

    def flush(self):
        if self.style == "structured":
            print(json.dumps(self.rec, sort_keys=True))


# -- commands ---------------------------------------------------------------

def cmd_dual(args, ctx, out):
    name, op = _resolve(args.target)
    d = dual_theta(op)
    out.put("self_dual", d == op)
    if out.style == "text":
        print(cyop.dumps(d, f"dual of {name}"), end="")
    out.rec["dual"] = cyop.dumps(d)
    return OK


def cmd_check(args, ctx, out):
    name, op = _resolve(args.target)
    yy = check_yy(op)
    out.put("id", name)
    out.put("yy", "pass" if yy else "fail", f"YY: {'pass' if yy else 'fail'}")
    at0 = indicial_equation(op, 0)
    out.put("exponents_at_0", at0.exponents)
    try:
        inf = indicial_equation(op, INFINITY)
        out.put("exponents_at_infinity", inf.exponents if inf.resolved else "unresolved")
    except (OperatorError, RootError) as exc:
        out.put("exponents_at_infinity", f"error: {exc}")
    if op.order == 3:
        rep = check_methode(op)
        for s in rep.singularities:
            out.put(f"singularity[{P.to_str(s.factor)}]",
                    f"{s.kind} {fmt(s.data.exponents) if s.data.exponents else 'unresolved'}")
        out.put("methode", "pass" if rep.passes else "fail")
        out.put("methode_degree", f"predicted {rep.predicted_degree}, actual {rep.degree}")
    return OK if yy else FAILED


def cmd_solve(args, ctx, out):
    _, op = _resolve(args.target)
    b = frobenius_basis(op, ctx.truncation)
    upto = op.order if args.all else 1
    for r in range(upto):
        out.series(f"f{r}", b.f[r])
    return OK


def cmd_mirror(args, ctx, out):
    _, op = _resolve(args.target)
    z = mirror_map(op, ctx.truncation)
    out.series("z_of_q", z)
    return OK


def _yukawa(op, N):
    b = frobenius_basis(op, N)
    if op.order == 5:
        Ps = PowerSeries.from_poly(leading_polynomial(op), N)
        return yukawa_order5(mirror_map(op, N), b.f[0], Ps)
    if op.order == 7:
        return yukawa_order7(b)
    raise UsageError(f"Yukawa coupling is implemented for orders 5 and 7, got {op.order}")


def cmd_yukawa(args, ctx, out):
    _, op = _resolve(args.target)
    out.series("K", _yukawa(op, ctx.truncation))
    return OK


def cmd_instantons(args, ctx, out):
    _, op = _resolve(args.target)
    if args.count < 1:
        raise UsageError("--count must be positive")
    N = max(ctx.truncation, args.count + 3) if op.order == 5 else args.count + 2
    K = _yukawa(op, N)
    table = instanton_numbers(K, args.weight, args.count)
    for d, n in sorted(table.values.items()):
        out.put(f"n{d}", n, f"n_{d} = {n}")
    return OK


def cmd_ell(args, ctx, out):
    _, op = _resolve(args.target)
    if op.order != 5:
        raise UsageError(f"ell-numbers need an order-5 operator, got order {op.order}")
    r = ell_numbers(op, ctx)
    out.put("good", r.good)
    if not r.good:
        if out.style == "text":
            print(BAD_CASE)
        out.put("k_at_qc", r.k_at_qc)
        return OK
    for key in ("z_c", "q_c", "tau_c", "alpha_c", "h", "f", "e"):
        out.put(key, getattr(r, key))
    out.put("rule", r.rule)
    out.put("ell", r.ell if r.ell else "none", f"ell = {fmt(r.ell) if r.ell else 'not reconstructed'}")
    if r.residuals:
        out.put("residuals", [fmt(x, 5) for x in r.residuals if x is not None])
    return OK if r.ell else FAILED


def cmd_level(args, ctx, out):
    _, op = _resolve(args.target)
    if op.order != 3:
        raise UsageError(f"level needs an order-3 operator, got order {op.order}")
    r = level_order3(op, ctx)
    out.put("z_c", r.z_c)
    out.put("q_c", r.q_c)
    out.put("tau_c", r.tau_c)
    out.put("level", r.level)
    out.put("nearest", r.nearest)
    out.put("residual", fmt(r.residual, 5))
    return OK


def cmd_catalog(args, ctx, out):
    if args.action == "list":
        for e in catalog.list_entries(order=args.order, group=args.group):
            if out.style == "text":
                print(f"{e.id}\torder {e.order}\tdegree {e.operator.degree}\t{e.group}")
            else:
                print(json.dumps({"id": e.id, "order": e.order, "degree": e.operator.degree,
                                  "group": e.group}, sort_keys=True))
        return OK
    if args.action in ("show", "export"):
        if not args.id:
            raise UsageError(f"catalog {args.action} needs an entry id")
        try:
            e = catalog.get_entry(args.id)
        except catalog.UnknownEntry as exc:
            raise UsageError(str(exc.args[0])) from None
        text = cyop.dumps(e.operator, f"{e.id}: {e.provenance}")
        if args.action == "export":
            if args.output:
                Path(args.output).write_text(text, encoding="utf-8")
            else:
                sys.stdout.write(text)
            return OK
        out.put("id", e.id)
        out.put("group", e.group)
        out.put("provenance", e.provenance)
        out.put("operator", str(e.operator))
        for k, (v, src) in sorted(e.expected.items()):
            out.put(f"expected.{k}", f"{fmt(v)} ({src})")
        return OK
    # verify-all
    entries = catalog.list_entries(order=args.order, group=args.group)
    numeric = not args.skip_numeric
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(verify_entry, entries, [ctx] * len(entries),
                                    [numeric] * len(entries)))
    else:
        records = [verify_entry(e, ctx, numeric) for e in entries]
    failed = 0
    for rec in records:
        if rec["status"] != "ok":
            failed += 1
        if out.style == "structured":
            print(json.dumps(rec, sort_keys=True))
        else:
            print(" ".join(f"{k}={v}" for k, v in rec.items()))
    if out.style == "text":
        print(f"{len(records) - failed}/{len(records)} entries ok")
    return OK if failed == 0 else FAILED


def cmd_congruence(args, ctx, out):
    if args.pmax < 5:
        raise UsageError("--pmax must be at least 5")
    bad = []
    for p in range(5, args.pmax + 1):
        if formulas._is_prime(p):
            ok = formulas.supercongruence_check(p)
            out.put(f"p{p}", ok, f"p = {p}: {'holds' if ok else 'FAILS'}")
            if not ok:
                bad.append(p)
    return OK if not bad else FAILED


def _fraction_arg(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


def cmd_hyper(args, ctx, out):
    try:
        e = hypergeometric_ell(args.s1, args.s2, ctx)
        g = hypergeometric_invariants(args.s1, args.s2, ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.put("ell", e.rational if e.rational else e.values)
    out.put("invariants", g.rational if g.rational else g.values)
    return OK


def cmd_conjecture(args, ctx, out):
    if args.family not in tables.RELATION_MATRICES:
        raise UsageError(f"unknown family {args.family!r}; choose from {sorted(tables.RELATION_MATRICES)}")
    if args.ell:
        g = conjecture_transform(args.ell, args.family)
        out.put("invariants", g.as_tuple())
        return OK
    bad = 0
    for ref, fam, inv in tables.RELATION_PAIRS:
        if fam != args.family:
            continue
        g = conjecture_transform(tables.ell_row(ref).ell, fam).as_tuple()
        want = tables.INVARIANT_TABLE[inv]
        ok = g == tuple(Fraction(x) for x in want)
        bad += not ok
        out.put(ref, f"{fmt(g)} {'==' if ok else '!='} {inv} {fmt(want)}")
    return OK if bad == 0 else FAILED


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", "--order-truncation", type=int, default=None,
                        help="series truncation (default 61, env CYOPS_TRUNCATION)")
    common.add_argument("--digits", type=int, default=None, help="decimal digits (default 30, env CYOPS_DIGITS)")
    common.add_argument("--format", choices=("text", "structured"), default=None,
                        help="output style (env CYOPS_FORMAT)")
    common.add_argument("--tolerance", type=float, default=None,
                        help="reconstruction tolerance (default 1e-6, env CYOPS_TOLERANCE)")

    p = argparse.ArgumentParser(prog="cyops",
                                description="Calabi-Yau type differential operator toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def target_cmd(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("target", help=".cyop file or catalog id")
        sp.set_defaults(fn=fn)
        return sp

    target_cmd("dual", cmd_dual, "print the dual operator")
    target_cmd("check", cmd_check, "YY test, exponents, order-3 exponent classifier")
    target_cmd("solve", cmd_solve, "Frobenius solutions at z = 0").add_argument(
        "--all", action="store_true", help="print every f_r, not just the holomorphic one")
    target_cmd("mirror", cmd_mirror, "mirror map z(q)")
    target_cmd("yukawa", cmd_yukawa, "Yukawa coupling K(q)")
    sp = target_cmd("instantons", cmd_instantons, "instanton numbers from K(q)")
    sp.add_argument("--weight", type=int, default=4)
    sp.add_argument("--count", type=int, default=4)
    target_cmd("ell", cmd_ell, "ell-numbers of an order-5 operator")
    target_cmd("level", cmd_level, "level of an order-3 operator")

    sp = sub.add_parser("catalog", parents=[common], help="built-in operators")
    sp.add_argument("action", choices=("list", "show", "export", "verify-all"))
    sp.add_argument("id", nargs="?")
    sp.add_argument("-o", "--output", help="file for export")
    sp.add_argument("--order", type=int)
    sp.add_argument("--group")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--skip-numeric", action="store_true", help="only the exact checks")
    sp.set_defaults(fn=cmd_catalog)

    sp = sub.add_parser("congruence", parents=[common], help="mod p^3 congruence for primes 5..P")
    sp.add_argument("--pmax", type=int, default=97)
    sp.set_defaults(fn=cmd_congruence)

    sp = sub.add_parser("hyper", parents=[common], help="hypergeometric closed forms")
    sp.add_argument("--s1", type=_fraction_arg, required=True)
    sp.add_argument("--s2", type=_fraction_arg, required=True)
    sp.set_defaults(fn=cmd_hyper)

    sp = sub.add_parser("conjecture", parents=[common], help="binomial relation between ell and invariants")
    sp.add_argument("--family", required=True)
    sp.add_argument("--ell", type=_fraction_arg, nargs=3, metavar=("L1", "L2", "L3"))
    sp.set_defaults(fn=cmd_conjecture)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctx = _context(args)
        out = Out(_format(args))
        code = args.fn(args, ctx, out)
        out.flush()
        return code
    except cyop.CyopParseError as exc:
        print(f"cyops: parse error: {exc}", file=sys.stderr)
        return USAGE
    except UsageError as exc:
        print(f"cyops: {exc}", file=sys.stderr)
        return USAGE
    except (OperatorError, RootError) as exc:
        print(f"cyops: {exc}", file=sys.stderr)
        return FAILED
    except ArithmeticError as exc:
        print(f"cyops: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
