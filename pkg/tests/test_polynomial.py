# tests/test_polynomial.py
from math import comb

import pytest

from core.errors import ArithmeticRangeError, CombinatoricsError
from core.polynomial import (
    IntPolynomial, expand_over_one_minus_z, gaussian_binomial, multiply_zseries, q_integer,
)


def test_trailing_zeros_are_trimmed():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    zero = IntPolynomial((0, 0))
    assert zero.is_zero()
    assert zero.degree == -1
    assert zero.to_string() == "0"


def test_to_string_ascending():
    assert IntPolynomial((0, 2, 3, 4, 1)).to_string('d') == "2d + 3d^2 + 4d^3 + d^4"
    assert IntPolynomial((0, -4, 3, -2, 1)).to_string('d') == "-4d + 3d^2 - 2d^3 + d^4"
    assert IntPolynomial((1, 1)).to_string('q') == "1 + q"


def test_arithmetic_with_int_coercion():
    one_plus_q = IntPolynomial((1, 1))
    one_minus_q = 1 - IntPolynomial.monomial(1)
    assert (one_plus_q * one_minus_q).coeffs == (1, 0, -1)
    assert (one_plus_q + 2).coeffs == (3, 1)
    assert (3 * one_plus_q).coeffs == (3, 3)
    assert (one_plus_q ** 2).coeffs == (1, 2, 1)
    assert one_plus_q.shift(2).coeffs == (0, 0, 1, 1)


def test_evaluation_and_weighted_sum():
    assert IntPolynomial((1, 2, 1))(2) == 9
    # histogram derajat family n=5: jumlah derajat 4·C(4,2)
    assert IntPolynomial((0, 2, 3, 4, 1)).weighted_sum() == 24
    assert IntPolynomial((1, 3, 5, 6, 5, 3, 1)).is_palindromic()
    assert not IntPolynomial((1, 2)).is_palindromic()


def test_synthetic_division():
    quotient, remainder = IntPolynomial((-1, 0, 1)).divmod(IntPolynomial((-1, 1)))
    assert quotient.coeffs == (1, 1)
    assert remainder.is_zero()

    with pytest.raises(CombinatoricsError):
        IntPolynomial((1, 0, 1)).exact_div(IntPolynomial((-1, 1)))
    with pytest.raises(CombinatoricsError, match="inexact"):
        IntPolynomial((1, 1)).divmod(IntPolynomial((0, 2)))
    with pytest.raises(ZeroDivisionError):
        IntPolynomial((1,)).divmod(IntPolynomial())


def test_coefficients_checked_against_64_bit_range():
    with pytest.raises(ArithmeticRangeError):
        IntPolynomial((2**63,))
    with pytest.raises(OverflowError):
        IntPolynomial((1, 1)) * (2**62) * 2
    assert IntPolynomial((2**63 - 1,)).coeffs == (2**63 - 1,)


def test_q_integer():
    assert q_integer(3).coeffs == (1, 1, 1)
    assert q_integer(0).is_zero()


@pytest.mark.parametrize("n,k,expected", [
    (4, 2, (1, 1, 2, 1, 1)),
    (5, 2, (1, 1, 2, 2, 2, 1, 1)),
    (3, 0, (1,)),
    (3, 3, (1,)),
])
def test_gaussian_binomial_values(n, k, expected):
    assert gaussian_binomial(n, k).coeffs == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_gaussian_binomial_specialises_to_binomial(n):
    for k in range(n + 1):
        poly = gaussian_binomial(n, k)
        assert poly(1) == comb(n, k)
        assert poly == gaussian_binomial(n, n - k)
        assert poly.is_palindromic()


def test_gaussian_binomial_rejects_bad_k():
    with pytest.raises(CombinatoricsError):
        gaussian_binomial(3, 4)


def test_expand_over_one_minus_z():
    one = IntPolynomial.constant(1)
    assert expand_over_one_minus_z({0: one}, 1, 3) == [one] * 4
    cubed = expand_over_one_minus_z({0: one}, 3, 3)
    assert [p(1) for p in cubed] == [1, 3, 6, 10]
    shifted = expand_over_one_minus_z({2: one}, 1, 3)
    assert [p.is_zero() for p in shifted] == [True, True, False, False]


def test_multiply_zseries_drops_zero_terms():
    one = IntPolynomial.constant(1)
    product = multiply_zseries({0: one, 1: -one}, {0: one, 1: one})
    assert product == {0: one, 2: -one}
