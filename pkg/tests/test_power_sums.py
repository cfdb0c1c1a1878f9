from fractions import Fraction as F
from math import gcd

import pytest

from apsums.classical import euler_poly
from apsums.errors import ParameterError
from apsums.poly import Poly, poly_eval
from apsums.power_sums import (
    PowerSumFamily,
    ProgressionParams,
    build_S,
    build_T,
    direct_alt_power_sum,
    direct_power_sum,
    family_poly,
    parity_branch,
)

TP, TM = PowerSumFamily.T_PLUS, PowerSumFamily.T_MINUS

GRID = [
    (a, b)
    for a in range(-5, 6)
    for b in range(-5, 6)
    if a != 0 and gcd(a, b) == 1
]


def test_params_validation():
    with pytest.raises(ParameterError):
        ProgressionParams(0, 1, 2)
    with pytest.raises(ParameterError):
        ProgressionParams(2, 4, 2)
    with pytest.raises(ParameterError):
        ProgressionParams(1, 0, -1)


def test_family_parse():
    assert PowerSumFamily.parse("T+") is TP
    assert PowerSumFamily.parse("T_MINUS") is TM
    with pytest.raises(ParameterError):
        PowerSumFamily.parse("U")


def test_build_s_examples():
    s = build_S(ProgressionParams(1, 0, 2))
    assert s == Poly((0, 1, -3, 2)) / 6
    assert poly_eval(build_S(ProgressionParams(2, 1, 2)), 3) == 35


def test_build_s_vanishes_at_zero():
    for a, b in GRID[:20]:
        for k in range(1, 6):
            assert poly_eval(build_S(ProgressionParams(a, b, k)), 0) == 0


def test_build_t_examples():
    p = ProgressionParams(1, 1, 2)
    assert poly_eval(build_T(p, TP), 3) == 6
    for a, b in GRID[:20]:
        for k in range(0, 6):
            params = ProgressionParams(a, b, k)
            ek_r = poly_eval(euler_poly(k), F(b, a))
            assert poly_eval(build_T(params, TP), 0) == a**k * ek_r
            assert poly_eval(build_T(params, TM), 0) == 0


def test_build_t_rejects_s():
    with pytest.raises(ParameterError):
        build_T(ProgressionParams(1, 0, 2), PowerSumFamily.S)


def test_direct_sums():
    assert direct_power_sum(ProgressionParams(1, 0, 2), 25) == 4900 == 70**2
    assert direct_power_sum(ProgressionParams(2, 1, 2), 3) == 35
    assert direct_alt_power_sum(ProgressionParams(1, 1, 2), 3) == 6
    assert direct_alt_power_sum(ProgressionParams(1, 1, 3), 4) == -44
    for a, b in GRID[:10]:
        assert direct_power_sum(ProgressionParams(a, b, 3), 1) == b**3
        assert direct_alt_power_sum(ProgressionParams(a, b, 3), 1) == b**3
    with pytest.raises(ParameterError):
        direct_power_sum(ProgressionParams(1, 0, 2), 0)


@pytest.mark.parametrize("k", range(0, 13))
def test_closed_forms_match_direct_sums(k):
    for a, b in GRID:
        params = ProgressionParams(a, b, k)
        s = build_S(params)
        tp, tm = build_T(params, TP), build_T(params, TM)
        for n in range(1, 31):
            assert poly_eval(s, n) == direct_power_sum(params, n)
            t = tp if n % 2 else tm
            assert poly_eval(t, n) == direct_alt_power_sum(params, n)


@pytest.mark.parametrize("k", range(0, 10))
def test_parity_linkage(k):
    for a, b in GRID[::3]:
        params = ProgressionParams(a, b, k)
        total = build_T(params, TP) + build_T(params, TM)
        assert total == Poly.constant(a**k * poly_eval(euler_poly(k), F(b, a)))


@pytest.mark.parametrize("k", range(1, 10))
def test_degree_and_leading(k):
    for a, b in GRID[::4]:
        params = ProgressionParams(a, b, k)
        s = build_S(params)
        assert s.degree == k + 1 and s.leading == F(a**k, k + 1)
        assert build_T(params, TP).degree == k and build_T(params, TP).leading == F(a**k, 2)
        assert build_T(params, TM).degree == k and build_T(params, TM).leading == -F(a**k, 2)


def test_family_poly_dispatch_and_parity():
    params = ProgressionParams(3, 2, 4)
    assert family_poly(PowerSumFamily.S, params) == build_S(params)
    assert family_poly(TM, params) == build_T(params, TM)
    assert parity_branch(7) is TP and parity_branch(8) is TM
