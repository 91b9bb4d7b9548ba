from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyops import catalog
from cyops.catalog.tables import HYPERGEOMETRIC_PAIRS
from cyops.numerics import (DEFAULT, PrecisionContext, ReconstructionError, RootError, bernoulli,
                            conjecture_transform, critical_q, ell_numbers, expansion_coefficients,
                            hurwitz_zeta, hypergeometric_ell, hypergeometric_invariants,
                            level_from_qc, mpf, rational_reconstruct, smallest_positive_root)
from cyops.series import PowerSeries
from cyops.theta import leading_polynomial


@pytest.mark.parametrize("x, want", [(0.333333333, Fraction(1, 3)), (38.999999991, Fraction(39)),
                                     ("1.2307692301", Fraction(16, 13)), (-2.5, Fraction(-5, 2))])
def test_reconstruct(x, want):
    assert rational_reconstruct(mpmath.mpf(x))[0] == want


@pytest.mark.parametrize("x", [mpmath.inf, mpmath.nan])
def test_reconstruct_rejects_nonfinite(x):
    with pytest.raises(ReconstructionError):
        rational_reconstruct(x)


def test_positive_roots():
    with mpmath.workdps(30):
        assert abs(smallest_positive_root([1, -1024]) - mpmath.mpf(1) / 1024) < 1e-28
        r = smallest_positive_root([1, -11, -1])
        assert abs(r - (mpmath.sqrt(125) - 11) / 2) < 1e-28
        p11 = leading_polynomial(catalog.get_entry("11A").operator)
        r11 = smallest_positive_root(p11)
        assert r11 > 0 and abs(mpmath.polyval([mpf(c) for c in reversed(p11)], r11)) < 1e-25
    with pytest.raises(RootError):
        smallest_positive_root([1, 0, 1])


@settings(max_examples=40)
@given(st.integers(3, 6), st.fractions(Fraction(1, 20), Fraction(19, 20), max_denominator=20))
def test_hurwitz_matches_mpmath(s, a):
    with mpmath.workdps(30):
        want = mpmath.zeta(s, mpmath.mpf(a.numerator) / a.denominator)
        assert abs(hurwitz_zeta(s, a) - want) < 1e-27 * abs(want)


def test_bernoulli():
    with mpmath.workdps(30):
        for n in range(0, 31):
            b = bernoulli(n)
            assert abs(mpf(b) - mpmath.bernoulli(n)) < 1e-25 * max(1, abs(b)), n


def test_level_one():
    with mpmath.workdps(30):
        assert abs(level_from_qc(mpmath.exp(-2 * mpmath.pi)) - 1) < 1e-25
    with pytest.raises(RootError):
        level_from_qc(2)


def test_bad_case_flag():
    z = PowerSeries([0, 1, -1])  # dz/dq vanishes at 1/2, z = 1/4
    cp = critical_q(z, Fraction(1, 4), PowerSeries([1, 1000]))
    assert cp.rule == "z_c" and not cp.good
    assert critical_q(z, Fraction(1, 4), PowerSeries([0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])).good


def test_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(digits=20)
    with pytest.raises(ValueError):
        PrecisionContext(truncation=4)


def test_precision_scaling_and_determinism():
    op = catalog.get_entry("AESZ-355").operator
    lo = ell_numbers(op, DEFAULT)
    hi = ell_numbers(op, PrecisionContext(digits=60, truncation=81))
    assert lo.ell == hi.ell == (132, 264, -360)
    assert all(h < l for h, l in zip(hi.residuals, lo.residuals))
    again = ell_numbers(op, DEFAULT)
    assert again.raw == lo.raw


def test_hypergeometric_structure():
    for s1, s2 in HYPERGEOMETRIC_PAIRS:
        e = hypergeometric_ell(s1, s2).rational
        g = hypergeometric_invariants(s1, s2).rational
        assert g[0] == e[0]
        # c2H/H^3 - 4 and ell2/ell1 - 5 share the cotangent term
        assert g[1] / g[0] - 4 == e[1] / e[0] - 5
    with pytest.raises(ValueError):
        hypergeometric_ell(0, Fraction(1, 2))


@pytest.mark.parametrize("ell, fam, want", [
    ((48, 144, -224), "C(2n,n)", (48, 96, -128)),
    ((24, 144, -448), "C(4n,2n)", (48, 96, -128)),
    ((16, 104, -314), "C(4n,2n)", (32, 80, -116)),
])
def test_conjecture_examples(ell, fam, want):
    assert conjecture_transform(ell, fam).as_tuple() == want


def test_conjecture_unknown_family():
    with pytest.raises(ValueError):
        conjecture_transform((1, 2, 3), "C(7n,n)")


def test_expansion_examples():
    b = expansion_coefficients((16, 80, -160), "B")
    assert b.a3 == -10 and b.a2 == Fraction(5, 6)
    g = hypergeometric_invariants(Fraction(1, 2), Fraction(1, 2)).rational
    a = expansion_coefficients(g, "A")
    assert a.a2 == g[1] / g[0] / 6
    with pytest.raises(ValueError):
        expansion_coefficients(g, "C")


def _gamma_oracle(s1, s2):
    ps = [mpmath.mpf(s.numerator) / s.denominator for s in (s1, 1 - s1, s2, 1 - s2)]
    la = 4 * mpmath.psi(0, 1) - sum(mpmath.psi(0, p) for p in ps)

    def A(x):
        return (mpmath.exp(la * x) * mpmath.fprod(mpmath.gamma(p + x) / mpmath.gamma(p) for p in ps)
                / mpmath.gamma(1 + x) ** 4)

    def B(x):
        return 4**x * mpmath.gamma(mpmath.mpf(1) / 2 + x) / mpmath.gamma(mpmath.mpf(1) / 2) / mpmath.gamma(1 + x) * A(x)

    return mpmath.taylor(A, 0, 4), mpmath.taylor(B, 0, 4)


@pytest.mark.parametrize("s1, s2", HYPERGEOMETRIC_PAIRS)
def test_expansions_against_gamma_oracle(s1, s2):
    with mpmath.workdps(40):
        ta, tb = _gamma_oracle(s1, s2)
        ea = expansion_coefficients(hypergeometric_invariants(s1, s2).rational, "A").numeric(PrecisionContext(digits=40))
        eb = expansion_coefficients(hypergeometric_ell(s1, s2).rational, "B").numeric(PrecisionContext(digits=40))
        assert max(abs(x - y) for x, y in zip(ta, ea)) < 1e-25
        assert max(abs(x - y) for x, y in zip(tb, eb)) < 1e-25
