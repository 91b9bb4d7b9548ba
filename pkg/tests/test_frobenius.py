from fractions import Fraction
from math import comb

import pytest

from cyops import catalog
from cyops.frobenius import (ResonanceError, apply_operator, binomial_stream, frobenius_basis,
                             hadamard_product, holomorphic_solution)
from cyops.series import PowerSeries
from cyops.theta import from_theta_coefficients


def test_hypergeometric_coefficients():
    op = catalog.get_entry("hyp5-(1/2,1/2)").operator
    y = holomorphic_solution(op, 31)
    assert list(y.coeffs) == [comb(2 * n, n) ** 5 for n in range(31)]


@pytest.mark.parametrize("eid", ["11A", "13A", "AESZ-244", "bin2*3.9", "7-D", "7-A-order4"])
def test_basis_is_annihilated(eid):
    op = catalog.get_entry(eid).operator
    b = frobenius_basis(op, 25)
    assert len(b.solutions) == op.order
    for w in b.solutions:
        out = apply_operator(op, w)
        assert all(p.is_zero() for p in out.parts)
    assert all(b.f[r].coeffs[0] == 0 for r in range(1, op.order))


def test_holomorphic_matches_basis():
    op = catalog.get_entry("AESZ-355").operator
    assert frobenius_basis(op, 20).f[0] == holomorphic_solution(op, 20)


def test_resonance_detected():
    op = from_theta_coefficients(2, [[0, -2, 1], [1]])  # P_0 = T(T - 2)
    with pytest.raises(ResonanceError):
        holomorphic_solution(op, 5)


def test_hadamard_with_ones_and_binomials():
    a = PowerSeries([1, 2, 3, 4])
    assert hadamard_product(a, [1] * 4) == a
    assert binomial_stream("C(2n,n)", 5) == [1, 2, 6, 20, 70]
    assert binomial_stream("C(6n,3n)C(3n,n)/C(2n,n)", 3) == [1, 30, 2310]
    with pytest.raises(ValueError):
        binomial_stream("nope", 3)


def test_transformed_case_a_hadamard():
    w5 = holomorphic_solution(catalog.get_entry("7-A-wronskian5").operator, 30)
    y7 = holomorphic_solution(catalog.get_entry("7-A-transformed").operator, 30)
    sq = [Fraction(c) ** 2 for c in binomial_stream("C(2n,n)", 30)]
    assert hadamard_product(w5, sq) == y7
