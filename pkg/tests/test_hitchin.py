import random
from fractions import Fraction as F

import pytest

from nilkahler import families as fam
from nilkahler.algebra import catalog
from nilkahler.forms import FormError, KForm, ce_differential, interior_product
from nilkahler.hitchin import DegenerateFormError, dual_iso, hitchin_operator, induced_structure
from nilkahler.operators import Endomorphism

MU = KForm.volume(6)
P2 = Endomorphism.diag([1, -1, 1, -1, -1, 1])


def test_dual_iso():
    e1 = tuple(F(int(k == 1)) for k in range(1, 7))
    assert dual_iso(interior_product(e1, MU), MU) == e1
    assert dual_iso(KForm.zero(6, 5), MU) == (F(0),) * 6
    assert dual_iso(KForm.basis(6, 2, 3, 4, 5, 6), MU) == e1


def test_zero_form_is_degenerate():
    res = hitchin_operator(KForm.zero(6, 3), MU)
    assert res.K.is_zero() and res.lam == 0 and res.kind == "degenerate"
    with pytest.raises(DegenerateFormError):
        induced_structure(KForm.zero(6, 3), MU)


def test_split_form_is_para():
    Om = KForm.basis(6, 1, 2, 3) + KForm.basis(6, 4, 5, 6)
    res = hitchin_operator(Om, MU)
    assert res.kind == "para"
    P = res.normalized
    assert P @ P == Endomorphism.identity(6)
    assert P.trace() == 0


def test_real_part_of_complex_volume_is_complex():
    # Re((e1 + i e2)(e3 + i e4)(e5 + i e6))
    Om = (KForm.basis(6, 1, 3, 5) - KForm.basis(6, 1, 4, 6)
          - KForm.basis(6, 2, 3, 6) - KForm.basis(6, 2, 4, 5))
    res = hitchin_operator(Om, MU)
    assert res.kind == "complex"
    J = res.normalized
    assert J @ J == -Endomorphism.identity(6)


def test_g1_omega2_special_point():
    p = {"w46": 1, "w16": 0, "w26": 0, "w36": 0, "w45": 0, "w24": 0,
         "w12": 2, "w14": -1, "w23": 3, "w34": F(1, 2), "w35": 5}
    om = fam.emit("g1.omega2", p)
    res = hitchin_operator(ce_differential(catalog("g1_magnin"), om), MU)
    assert res.lam == 1
    assert res.normalized == P2


def test_g1_omega2_random_points_match_stated_matrix():
    for p in fam.random_admissible("g1.omega2", seed=3, count=5):
        res = hitchin_operator(ce_differential(catalog("g1_magnin"), fam.emit("g1.omega2", p)), MU)
        assert res.lam == p["w46"] ** 4
        assert res.normalized == fam.emit("g1.P_domega2", p)


def test_g2_differentials_are_degenerate():
    rng = random.Random(5)
    g2 = catalog("g2_renamed")
    for _ in range(20):
        om = KForm(6, 2, {(i, j): fam.random_rational(rng) for i in range(1, 7) for j in range(i + 1, 7)})
        assert hitchin_operator(ce_differential(g2, om), MU).kind == "degenerate"


def test_closed_forms_give_zero_operator():
    g3 = catalog("g3_renamed")
    om = KForm.basis(6, 1, 2) + KForm.basis(6, 3, 6) * 4
    d = ce_differential(g3, om)
    assert d.is_zero()
    assert hitchin_operator(d, MU).K.is_zero()


def test_requires_three_form_in_dimension_six():
    with pytest.raises(FormError):
        hitchin_operator(KForm.basis(6, 1, 2), MU)
