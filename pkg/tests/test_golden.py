import math
import random
import warnings

import pytest
from hypothesis import given, strategies as st

from euclid_potential.golden import (
    INV_PHI,
    ONE,
    PHI,
    ZERO,
    ApproximationWarning,
    GoldenInt,
    golden_add,
    golden_cmp,
    golden_make,
    golden_mul_phi,
    golden_phi_pow,
    golden_sign,
    golden_sub,
    golden_to_float,
)

from oracles import fib_table, golden_sign_numeric, golden_value

coef = st.integers(-(10**6), 10**6)
goldens = st.builds(GoldenInt, coef, coef)


def test_make():
    assert golden_make(0, 0) == ZERO
    # phi**2 == phi + 1
    assert golden_make(1, 1) == golden_mul_phi(PHI)
    # 1/phi == phi - 1: phi * (-1 + phi) == 1
    assert golden_mul_phi(golden_make(-1, 1)) == ONE


def test_add_sub():
    assert golden_add(GoldenInt(1, 2), GoldenInt(3, 4)) == GoldenInt(4, 6)
    g = GoldenInt(7, -3)
    assert golden_add(g, ZERO) == g
    assert golden_sub(GoldenInt(2, 3), GoldenInt(2, 3)) == ZERO


@pytest.mark.parametrize("g, out", [((0, 1), (1, 1)), ((0, 0), (0, 0)), ((2, 3), (3, 5))])
def test_mul_phi(g, out):
    assert golden_mul_phi(GoldenInt(*g)) == GoldenInt(*out)


@pytest.mark.parametrize("g, s", [((0, 0), 0), ((-3, 2), 1), ((5, -3), 1), ((3, -2), -1), ((-5, 3), -1)])
def test_sign_examples(g, s):
    assert golden_sign(GoldenInt(*g)) == s
    assert golden_sign_numeric(*g) == s


@pytest.mark.parametrize("g1, g2, c", [((0, 1), (1, 0), 1), ((2, 3), (2, 3), 0), ((2, 3), (5, 8), -1)])
def test_cmp_examples(g1, g2, c):
    assert golden_cmp(GoldenInt(*g1), GoldenInt(*g2)) == c


def test_phi_pow_examples():
    assert golden_phi_pow(1) == GoldenInt(0, 1)
    assert golden_phi_pow(2) == GoldenInt(1, 1)
    g = PHI
    for _ in range(9):
        g = golden_mul_phi(g)
    assert golden_phi_pow(10) == g == GoldenInt(34, 55)


def test_phi_pow_rejects_zero():
    with pytest.raises(ValueError):
        golden_phi_pow(0)


def test_phi_pow_recurrence_and_fibonacci():
    table = fib_table(181)
    for m in range(1, 181):
        assert golden_mul_phi(golden_phi_pow(m)) == golden_phi_pow(m + 1)
        assert golden_phi_pow(m) == GoldenInt(table[m - 1], table[m])


def test_identity_one_plus_inverse_phi_is_phi():
    assert golden_mul_phi(INV_PHI) == ONE
    assert ONE + INV_PHI == PHI


def test_to_float():
    assert golden_to_float(PHI) == pytest.approx(1.61803398875, abs=1e-11)
    assert golden_to_float(ZERO) == 0.0
    assert golden_to_float(GoldenInt(3, 5)) == pytest.approx(11.0902, abs=1e-4)
    assert float(GoldenInt(3, 5)) == golden_to_float(GoldenInt(3, 5))


def test_to_float_warns_on_large_coefficients():
    with pytest.warns(ApproximationWarning):
        golden_to_float(GoldenInt(2**60, -(2**59)))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        golden_to_float(GoldenInt(2**52, 1))
    with pytest.warns(ApproximationWarning):
        assert golden_to_float(GoldenInt(10**400, 1)) == math.inf


def test_str():
    assert str(GoldenInt(4, 8)) == "4+8·φ"
    assert str(GoldenInt(4, -1)) == "4-1·φ"


def test_sign_matches_high_precision_near_phi_ratios():
    # consecutive Fibonacci ratios are the hardest inputs for the sign test
    table = fib_table(120)
    for n in range(2, 120):
        for a, b in ((-table[n], table[n - 1]), (table[n], -table[n - 1])):
            assert golden_sign(GoldenInt(a, b)) == golden_sign_numeric(a, b)


@given(coef, coef)
def test_sign_property(a, b):
    assert golden_sign(GoldenInt(a, b)) == golden_sign_numeric(a, b)
    assert (golden_sign(GoldenInt(a, b)) == 0) == (a == 0 and b == 0)


@given(goldens, goldens)
def test_cmp_antisymmetric(g1, g2):
    assert golden_cmp(g1, g2) == -golden_cmp(g2, g1)
    assert (golden_cmp(g1, g2) == 0) == (g1 == g2)
    assert (g1 < g2) == (golden_value(g1.a, g1.b) < golden_value(g2.a, g2.b))


@given(goldens, goldens, goldens)
def test_cmp_transitive(g1, g2, g3):
    if golden_cmp(g1, g2) <= 0 and golden_cmp(g2, g3) <= 0:
        assert golden_cmp(g1, g3) <= 0


def test_sorting_matches_numeric_order():
    rng = random.Random(7)
    items = [GoldenInt(rng.randint(-1000, 1000), rng.randint(-1000, 1000)) for _ in range(500)]
    assert sorted(items) == sorted(items, key=lambda g: golden_value(g.a, g.b))
