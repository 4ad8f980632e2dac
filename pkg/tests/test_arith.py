from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fmzv.algebra.arith import (
    INFINITY, Valuation, as_rational, b_coeff, bernoulli, bernoulli_numbers, expected_dimensions, nu_p,
)
from fmzv.misc.errors import InvalidArgumentError

nonzero = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000).filter(bool)


def test_nu_p_examples():
    assert nu_p(2, Fraction(4865, 512)) == -9
    assert nu_p(2, 12) == 2
    assert nu_p(3, Fraction(1, 18)) == -2
    assert nu_p(2, 0) == Valuation(INFINITY)
    assert nu_p(2, 0).is_infinite


def test_nu_p_rejects_composite():
    with pytest.raises(InvalidArgumentError):
        nu_p(4, 2)


def test_infinity_is_above_every_integer():
    assert Valuation(INFINITY) > 10 ** 6
    assert Valuation(3) + Valuation(INFINITY) == Valuation(INFINITY)
    assert str(Valuation(INFINITY)) == "Infinity"


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero)
def test_nu_p_multiplicative(a, b):
    assert nu_p(2, a * b) == nu_p(2, a) + nu_p(2, b)


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero)
def test_nu_p_ultrametric(a, b):
    va, vb = nu_p(2, a), nu_p(2, b)
    total = nu_p(2, a + b)
    assert total >= min(va, vb)
    if va != vb:
        assert total == min(va, vb)


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)


@pytest.mark.parametrize("k", range(2, 41, 2))
def test_bernoulli_against_sympy(k):
    expected = sympy.bernoulli(k)
    assert bernoulli(k) == Fraction(int(expected.p), int(expected.q))


def test_bernoulli_numbers_list():
    assert bernoulli_numbers(4) == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]


@pytest.mark.parametrize("n, expected", [(1, 1), (2, Fraction(2, 5)), (3, Fraction(8, 35))])
def test_b_coeff(n, expected):
    assert b_coeff(n) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_b_coeff_matches_even_zeta(n):
    # zeta(2n) / zeta(2)^n with zeta(2) = pi^2 / 6
    ratio = sympy.nsimplify(sympy.zeta(2 * n) / sympy.zeta(2) ** n)
    assert b_coeff(n) == Fraction(int(ratio.p), int(ratio.q))


def test_as_rational_refuses_floats():
    with pytest.raises(InvalidArgumentError):
        as_rational(0.5)
    assert as_rational("3/4") == Fraction(3, 4)


def test_expected_dimensions():
    assert expected_dimensions(8) == [1, 0, 1, 1, 1, 2, 2, 3, 4]
    assert expected_dimensions(14)[-1] == 21
