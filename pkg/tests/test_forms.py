from fractions import Fraction as F

import pytest

from nilkahler import forms as fm
from nilkahler.algebra import abelian, catalog
from nilkahler.forms import KForm, ce_differential, interior_product, wedge


def b(n, *idx):
    return KForm.basis(n, *idx)


def unit(n, i):
    return tuple(F(int(k == i)) for k in range(1, n + 1))


def test_wedge_examples():
    assert wedge(b(4, 1, 2), b(4, 3, 4)) == b(4, 1, 2, 3, 4)
    assert wedge(b(4, 1, 2), b(4, 1)).is_zero()
    w = b(4, 1, 2) + b(4, 3, 4)
    assert wedge(w, w) == b(4, 1, 2, 3, 4) * 2


def test_wedge_anticommutes_on_odd_forms():
    assert wedge(b(3, 1), b(3, 2)) == -wedge(b(3, 2), b(3, 1))


def test_index_order_sign():
    assert KForm(3, 2, {(2, 1): 1}) == -b(3, 1, 2)
    assert KForm(3, 2, {(1, 1): 5}).is_zero()


def test_interior_product_examples():
    assert interior_product(unit(2, 1), b(2, 1, 2)) == b(2, 2)
    assert interior_product(unit(3, 3), b(3, 1, 2)).is_zero()
    assert interior_product(unit(3, 2), b(3, 1, 2, 3)) == -b(3, 1, 3)


def test_differential_on_g2_renamed():
    g = catalog("g2_renamed")
    assert ce_differential(g, b(6, 3)) == -b(6, 1, 2)
    assert ce_differential(g, b(6, 4)) == -b(6, 1, 3)
    assert ce_differential(g, b(6, 5)) == -b(6, 2, 3)
    for k in (1, 2, 6):
        assert ce_differential(g, b(6, k)).is_zero()


def test_differential_on_g3_renamed():
    assert ce_differential(catalog("g3_renamed"), b(6, 5)) == -b(6, 1, 2) - b(6, 3, 4)


def test_differential_of_two_form_is_negative_cyclic_sum():
    g = catalog("g1_magnin")
    om = KForm(6, 2, {(1, 2): 3, (2, 4): -1, (3, 6): F(1, 2), (4, 5): 2, (5, 6): 7})
    d = ce_differential(g, om)
    for i, j, k in [(1, 2, 3), (1, 3, 5), (2, 3, 5), (1, 2, 5)]:
        X, Y, Z = unit(6, i), unit(6, j), unit(6, k)
        assert d(X, Y, Z) == -fm.cyclic_closedness(g, om, X, Y, Z)


def test_nondegeneracy():
    om0 = b(6, 1, 5) - b(6, 2, 4) - b(6, 3, 6)
    assert fm.two_form_nondegenerate(om0)
    assert not fm.two_form_nondegenerate(b(6, 1, 2))


def test_contact():
    assert fm.is_contact(catalog("h5_heisenberg_like"), b(5, 5))
    assert not fm.is_contact(abelian(5), b(5, 5))
    assert fm.is_contact(catalog("h3"), b(3, 3))
    with pytest.raises(fm.FormError):
        fm.is_contact(catalog("g1"), b(6, 6))


def test_top_coefficient():
    mu = KForm.volume(6)
    assert fm.top_coefficient(mu, mu) == 1
    assert fm.top_coefficient(KForm.zero(6, 6), mu) == 0
    om0 = b(6, 1, 5) - b(6, 2, 4) - b(6, 3, 6)
    assert fm.top_coefficient(fm.power(om0, 3), mu) == 6
    assert fm.top_coefficient(mu, mu * 2) == F(1, 2)


def test_evaluation_uses_determinant_convention():
    om = b(2, 1, 2)
    assert om(unit(2, 1), unit(2, 2)) == 1
    assert om(unit(2, 2), unit(2, 1)) == -1


def test_matrix_round_trip():
    om = KForm(4, 2, {(1, 2): 3, (2, 4): F(-1, 2)})
    assert KForm.from_matrix(om.matrix()) == om


def test_json_round_trip_and_errors():
    om = KForm(6, 3, {(1, 2, 3): F(5, 7), (2, 4, 6): -1})
    assert fm.loads(fm.dumps(om)) == om
    with pytest.raises(fm.FormError):
        KForm(3, 2, {(1, 4): 1})
    with pytest.raises(ValueError):
        fm.form_from_dict({"dim": 3})
