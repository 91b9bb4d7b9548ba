from fractions import Fraction

import pytest
from hypothesis import given

from strategies import series_coeffs
from cyops.series import LogSeries, PowerSeries, SeriesError


@given(series_coeffs(unit=True))
def test_exp_log_roundtrip(cs):
    f = PowerSeries(cs)
    assert f.log().exp() == f


@given(series_coeffs(unit=True))
def test_sqrt_squares_back(cs):
    f = PowerSeries(cs)
    r = f.sqrt()
    assert r * r == f


@given(series_coeffs(unit=True), series_coeffs())
def test_division_inverts_multiplication(u, v):
    a, b = PowerSeries(u), PowerSeries(v)
    assert (b * a) / a == b


@given(series_coeffs())
def test_functional_inverse(cs):
    cs = [Fraction(0), Fraction(1)] + cs[2:]
    f = PowerSeries(cs)
    g = f.functional_inverse()
    assert f.compose(g) == PowerSeries.monomial(1, len(f))
    assert g.compose(f) == PowerSeries.monomial(1, len(f))


@given(series_coeffs(), series_coeffs(unit=True))
def test_power_law(cs, us):
    u = PowerSeries(us)
    assert u.power(Fraction(1, 3)) ** 3 == u
    assert u.power(Fraction(-1, 2)) * u.sqrt() == PowerSeries.one(len(u))


def test_theta_and_integrals():
    f = PowerSeries([1, 2, 3, 4])
    assert f.theta() == PowerSeries([0, 2, 6, 12])
    assert f.theta().theta_inverse() == PowerSeries([0, 2, 3, 4])
    assert f.derivative() == PowerSeries([2, 6, 12])


def test_truncation_guards():
    f = PowerSeries([1, 1])
    with pytest.raises(SeriesError):
        f.truncate(5)
    with pytest.raises(SeriesError):
        PowerSeries([2, 1]).log()


def test_log_series_theta_of_log():
    N = 6
    L = LogSeries.log_power(2, N)  # (log z)^2 / 2
    assert L.theta() == LogSeries.log_power(1, N)
    assert LogSeries.log_power(1, N).theta() == LogSeries.from_series(PowerSeries.one(N))


def test_change_coordinate_of_log():
    # log z in terms of q when z = q / (1 - q): log q - log(1 - q)
    N = 8
    z = PowerSeries([0] + [1] * (N - 1))
    out = LogSeries.log_power(1, N).change_coordinate(z)
    assert out.part(1) == PowerSeries.one(N - 1)
    assert out.part(0) == PowerSeries([0] + [Fraction(1, k) for k in range(1, N - 1)])
