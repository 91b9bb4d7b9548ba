import pytest

from cyops import catalog
from cyops.catalog import formulas
from cyops.frobenius import apply_operator, holomorphic_solution


def test_order3_list_order():
    ids = [e.id for e in catalog.list_entries(group="order3-list")]
    assert len(ids) == 12 and ids[0] == "11A"
    assert [e.id for e in catalog.list_entries(order=3)][:12] == ids


def test_lookup():
    e = catalog.get_entry("7-B")
    assert e.order == 7 and e.yy and "instantons" in e.expected
    with pytest.raises(catalog.UnknownEntry):
        catalog.get_entry("no-such-operator")


def test_classes():
    for e in catalog.list_entries():
        assert e.yy == (e.id not in catalog.NON_YY)


@pytest.mark.parametrize("fam", ["A", "B", "C", "D"])
def test_case_sums_solve_their_operator(fam):
    y = holomorphic_solution(catalog.get_entry(f"7-{fam}").operator, 21)
    assert list(y.coeffs) == [formulas.case_coefficient(fam, n) for n in range(21)]


def test_case_a_start():
    assert formulas.case_coefficient("A", 0) == 1
    assert formulas.case_coefficient("A", 1) == 384


def test_uncorrected_case_d_differs():
    diffs = [n for n in range(1, 8)
             if formulas.uncorrected_case_d_coefficient(n) != formulas.case_coefficient("D", n)]
    assert diffs


def test_transformed_period():
    y0 = formulas.transformed_case_a(41)
    assert y0.coeffs[0] == 1
    assert apply_operator(catalog.get_entry("7-A-order4").operator, y0).truncate(40).is_zero()


@pytest.mark.parametrize("p", [5, 7, 11])
def test_congruence(p):
    assert formulas.supercongruence_check(p)


@pytest.mark.parametrize("p", [2, 3, 9])
def test_congruence_rejects(p):
    with pytest.raises(ValueError):
        formulas.supercongruence_residue(p)
