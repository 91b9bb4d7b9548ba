from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from cyops import catalog
from cyops.frobenius import frobenius_basis
from cyops.mirror import (InstantonTable, instanton_numbers, lambert_series, mirror_map_order3,
                          mirror_map_order5, q_of_z_canonical, q_of_z_order3_integral,
                          q_of_z_order5, ratios_in_q, triple_integral_t, yukawa_from_ratio,
                          yukawa_order5, yukawa_order5_program)
from cyops.series import LogSeries, PowerSeries
from cyops.theta import leading_polynomial


@given(st.lists(st.fractions(max_denominator=9).filter(lambda f: abs(f) < 50), min_size=1, max_size=12),
       st.integers(1, 4))
def test_lambert_roundtrip(ns, w):
    table = InstantonTable(w, {d + 1: n for d, n in enumerate(ns)})
    K = lambert_series(table, len(ns) + 1)
    assert instanton_numbers(K, w).values == table.values


def test_order3_q_coordinates_agree():
    for eid in ("11A", "22A", "31A"):
        b = frobenius_basis(catalog.get_entry(eid).operator, 20)
        assert q_of_z_order3_integral(b) == q_of_z_canonical(b)


def test_order3_mirror_j_expansion():
    m = mirror_map_order3(frobenius_basis(catalog.get_entry("11A").operator, 15))
    assert m.z_of_q.coeffs[:2] == (0, 1)
    assert m.j_coefficients()[-1] == 1
    assert all(c.denominator == 1 for c in m.j_regular.coeffs)


def _order5(eid, N=20):
    op = catalog.get_entry(eid).operator
    b = frobenius_basis(op, N)
    Ps = PowerSeries.from_poly(leading_polynomial(op), N)
    return op, b, Ps


def test_order5_yukawa_routes_agree():
    for eid in ("AESZ-355", "bin2*5'", "hyp5-(1/2,1/2)"):
        _, b, Ps = _order5(eid)
        z = mirror_map_order5(b, Ps).z_of_q
        K1 = yukawa_order5(z, b.f[0], Ps)
        K2 = yukawa_order5_program(z, b.f[0], Ps)
        n = min(len(K1), len(K2))
        assert K1.truncate(n) == K2.truncate(n)
        assert K1.coeffs[0] == 1


def test_order5_q_starts_at_z():
    _, b, Ps = _order5("AESZ-32")
    q = q_of_z_order5(b, Ps)
    assert q.coeffs[:2] == (0, 1)


def test_order7_log_bookkeeping():
    b = frobenius_basis(catalog.get_entry("7-A").operator, 20)
    z = mirror_map_order3(b).z_of_q
    Y = ratios_in_q(b, z, upto=4)
    K = yukawa_from_ratio(Y[2])
    N = len(K)
    lhs = Y[3].theta().theta().truncate(N)
    assert lhs == (LogSeries.log_power(1, N) * K).truncate(N)


def test_triple_integral():
    K = PowerSeries([1, 8, 27])
    assert triple_integral_t(K) == PowerSeries([0, -8, Fraction(-27, 8)])
    assert triple_integral_t(K).theta().theta().theta() == PowerSeries([0, -8, -27])
