from fractions import Fraction as F

import pytest

from nilkahler import linalg


def test_to_fraction_literals():
    assert linalg.to_fraction("-3/2") == F(-3, 2)
    assert linalg.to_fraction("−1/4") == F(-1, 4)
    assert linalg.to_fraction(7) == 7
    with pytest.raises(TypeError):
        linalg.to_fraction(0.5)
    with pytest.raises(TypeError):
        linalg.to_fraction(True)


def test_frac_str():
    assert linalg.frac_str(F(3)) == "3"
    assert linalg.frac_str(F(-6, 4)) == "-3/2"


def test_det_and_inverse():
    a = [[F(2), F(1)], [F(5), F(3)]]
    assert linalg.det(a) == 1
    inv = linalg.inverse(a)
    assert linalg.mat_mul(a, inv) == linalg.identity(2)
    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse([[F(1), F(2)], [F(2), F(4)]])


def test_kernel_and_rank():
    a = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    assert linalg.rank(a) == 1
    ker = linalg.kernel(a)
    assert len(ker) == 2
    for v in ker:
        assert not any(linalg.mat_vec(a, v))


def test_solve():
    a = [[F(1), F(1)], [F(1), F(-1)]]
    assert linalg.solve(a, [F(3), F(1)]) == (F(2), F(1))


@pytest.mark.parametrize("m, sig", [
    ([[1, 0], [0, -1]], (1, 1)),
    ([[0, 1], [1, 0]], (1, 1)),
    ([[2, 1], [1, 2]], (2, 0)),
    ([[0, 0], [0, 0]], (0, 0)),
    ([[0, 1, 0], [1, 0, 0], [0, 0, -3]], (1, 2)),
])
def test_signature(m, sig):
    assert linalg.signature(linalg.matrix(m)) == sig


def test_rational_sqrt():
    assert linalg.rational_sqrt(F(9, 4)) == F(3, 2)
    assert linalg.rational_sqrt(F(2)) is None
    assert linalg.rational_sqrt(F(-1)) is None
