import pytest

from cubiq.errors import InvalidInput, NotNormalForm
from cubiq.gaussian import GInt
from cubiq.pythagoras import (
    Normalization,
    PythQuadruple,
    brute_force_params,
    euler_param,
    gauss_product_param,
    normalize_quadruple,
    quadruple_from_params,
    quadruples_with_d,
)


def test_quadruple_from_params():
    assert quadruple_from_params(1, 1, 0, 1) == PythQuadruple(1, 2, 2, 3)
    assert quadruple_from_params(2, 0, -1, 0) == PythQuadruple(3, 0, 4, 5)


def test_gauss_product_param_examples():
    assert (1, 1, 0, 1) in gauss_product_param(2, 1, GInt(-1, 1))
    assert gauss_product_param(1, 1, 1) == [(1, 0, 1, 0), (0, 1, 0, -1), (-1, 0, -1, 0), (0, -1, 0, 1)]
    assert (2, 0, -1, 0) in gauss_product_param(4, 1, -2)


def test_gauss_product_param_with_a_zero_side():
    params = gauss_product_param(0, 1, 0)
    assert len(params) == 4
    assert all(p[:2] == (0, 0) and p[2] ** 2 + p[3] ** 2 == 1 for p in params)
    params = gauss_product_param(1, 0, 0)
    assert all(p[2:] == (0, 0) and p[0] ** 2 + p[1] ** 2 == 1 for p in params)


def test_gauss_product_param_factors_gamma():
    for m, n, p, q in gauss_product_param(5, 2, GInt(1, 3)):
        assert m * m + n * n == 5 and p * p + q * q == 2
        assert GInt(m, n) * GInt(p, q) == GInt(1, 3)


@pytest.mark.parametrize("x, y, gamma", [(-1, 1, 1), (0, 0, 0), (2, 3, 1), (2, 2, 2)])
def test_gauss_product_param_rejects(x, y, gamma):
    with pytest.raises(InvalidInput):
        gauss_product_param(x, y, gamma)


def test_euler_param_examples():
    assert (2, 0, -1, 0) in euler_param(PythQuadruple(3, 0, 4, 5))
    assert (1, 0, 0, 0) in euler_param(PythQuadruple(1, 0, 0, 1))
    params = euler_param(PythQuadruple(1, 2, 2, 3))
    assert len(params) == 4 and (1, 1, 0, 1) in params


@pytest.mark.parametrize(
    "quadruple, condition",
    [
        ((1, 1, 1, 2), "a^2 + b^2 + c^2 = d^2"),
        ((1, 2, 2, -3), "d > 0"),
        ((3, 0, 0, 3), "gcd(a, b, c) = 1"),
        ((2, 1, 2, 3), "a odd"),
    ],
)
def test_euler_param_rejects(quadruple, condition):
    with pytest.raises(NotNormalForm) as info:
        euler_param(PythQuadruple(*quadruple))
    assert info.value.condition == condition
    assert PythQuadruple(*quadruple).normal_form_violation() == condition


def test_euler_params_match_search():
    for d in range(1, 32, 2):
        for q in quadruples_with_d(d):
            assert sorted(euler_param(q)) == brute_force_params(q), q


def test_quadruples_with_d():
    assert quadruples_with_d(3) == [PythQuadruple(1, 2, 2, 3)]
    assert quadruples_with_d(1) == [PythQuadruple(1, 0, 0, 1)]
    found = quadruples_with_d(9)
    assert PythQuadruple(1, 4, 8, 9) in found and PythQuadruple(7, 4, 4, 9) in found
    assert all(q.normal_form_violation() is None and 0 <= q.b <= q.c for q in found)


@pytest.mark.parametrize("d", [0, 4, -3])
def test_quadruples_with_d_rejects(d):
    with pytest.raises(InvalidInput):
        quadruples_with_d(d)


def test_normalize_quadruple():
    q, how = normalize_quadruple(2, 1, 2, -3)
    assert q == PythQuadruple(1, 2, 2, 3)
    assert how == Normalization((1, 0, 2), -1)
    with pytest.raises(NotNormalForm):
        normalize_quadruple(2, 2, 0, 0)
    with pytest.raises(NotNormalForm):
        normalize_quadruple(1, 1, 1, 1)


def test_quadruple_text():
    assert str(PythQuadruple(1, 2, 2, 3)) == "1 2 2 3"
    assert PythQuadruple(1, 2, 2, 3).as_tuple() == (1, 2, 2, 3)
