from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linesing.schubert import CohClass, SchubertBasis, one, sigma1, sigma11, zero
from linesing.series import AdamsWeightPolynomial, RingSeries, adams_weight_series

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def geometric(order):
    """f = z/(1-z) truncated: all coefficients 1 from z^1 on."""
    return RingSeries(order, [0] + [1] * order)


@st.composite
def positive_valuation_series(draw):
    order = draw(st.integers(min_value=1, max_value=6))
    coeffs = [zero]
    for _ in range(order):
        a = draw(small_fractions)
        b = draw(small_fractions)
        coeffs.append(a * one + b * sigma1)
    return RingSeries(order, coeffs)


def test_constructor_pads_and_truncates():
    s = RingSeries(3, [1, 2])
    assert s.coeffs == (one, 2 * one, zero, zero)
    s = RingSeries(1, [1, 2, 3, 4])
    assert s.coeffs == (one, 2 * one)
    with pytest.raises(ValueError):
        RingSeries(-1)
    with pytest.raises(TypeError):
        RingSeries(2, [0.5])


def test_arithmetic_and_valuation():
    f = geometric(4)
    assert (f + f).coefficient(2) == 2
    assert (f - f) == RingSeries.zero(4)
    assert (f * sigma1).coefficient(3) == sigma1
    assert RingSeries.zero(5).valuation() is None
    assert RingSeries.one(5).valuation() == 0
    assert (f * f).valuation() == 2
    with pytest.raises(ValueError):
        f + RingSeries.one(3)


def test_product_is_truncated_convolution():
    f = geometric(5)
    sq = f * f
    # (z + z^2 + ...)^2 has coefficient m-1 at z^m
    assert [sq.coefficient(m) for m in range(6)] \
        == [zero, zero, one, 2 * one, 3 * one, 4 * one]


def test_adams_weight_polynomials():
    assert AdamsWeightPolynomial.build(0).coeffs == (0, 1)
    assert AdamsWeightPolynomial.build(1).coeffs == (0, 1, 1)
    assert AdamsWeightPolynomial.build(2).coeffs == (0, 1, 3, 2)
    assert AdamsWeightPolynomial.build(3).coeffs == (0, 1, 7, 12, 6)
    with pytest.raises(ValueError):
        AdamsWeightPolynomial.build(-1)


def test_adams_weight_polynomial_recursion():
    # coefficient recursion a[k+1][j] = j*a[k][j] + (j-1)*a[k][j-1]
    for k in range(6):
        cur = AdamsWeightPolynomial.build(k).coeffs
        nxt = AdamsWeightPolynomial.build(k + 1).coeffs
        padded = cur + (0,) * (len(nxt) - len(cur))
        for j in range(1, len(nxt)):
            assert nxt[j] == j * padded[j] + (j - 1) * padded[j - 1]


def test_weight_series_values():
    # z^i coefficient of the k-th series is i^k
    for k in range(4):
        s = adams_weight_series(k, 8)
        for i in range(1, 9):
            assert s.coefficient(i) == i ** k
        assert s.coefficient(0) == zero
    assert adams_weight_series(2, 8).coefficient(3) == 9


def test_weight_series_log_case():
    s = adams_weight_series(-1, 6)
    assert [s.coefficient(i) for i in range(7)] \
        == [zero] + [CohClass.scalar(F(1, i)) for i in range(1, 7)]
    with pytest.raises(ValueError):
        adams_weight_series(-2, 4)


def test_weight_series_as_polynomial_in_f():
    f = geometric(7)
    assert adams_weight_series(0, 7) == f
    assert adams_weight_series(1, 7) == f + f * f
    assert adams_weight_series(2, 7) == f + 3 * (f * f) + 2 * (f * f * f)


def test_binomial_extraction_oracle():
    # f^a (1+f)^b = sum over m >= a of C(b-1+m, a+b-1) z^m
    order = 10
    f = geometric(order)
    for a in range(4):
        for b in range(4):
            if a == b == 0:
                continue
            s = RingSeries.one(order)
            for _ in range(a):
                s = s * f
            for _ in range(b):
                s = s * (f + 1)
            for m in range(order + 1):
                expect = comb(b - 1 + m, a + b - 1) if m >= a else 0
                assert s.coefficient(m) == expect, (a, b, m)


def test_exp_basics():
    assert RingSeries.zero(4).exp() == RingSeries.one(4)
    z = RingSeries(5, [0, 1])
    e = z.exp()
    assert [e.coefficient(n) for n in range(6)] \
        == [CohClass.scalar(F(1, fact)) for fact in (1, 1, 2, 6, 24, 120)]
    with pytest.raises(ValueError):
        RingSeries.one(3).exp()


def test_exp_of_log_series_is_geometric_power():
    # exp(2 * sum z^i/i) = (1-z)^-2 with coefficients m+1
    s = (adams_weight_series(-1, 8) * 2).exp()
    for m in range(9):
        assert s.coefficient(m) == m + 1


def test_exp_with_nilpotent_class_coefficients():
    # exp(sigma1 * z) terminates in the ring: sigma1^n = 0 for n > 4
    s = RingSeries(6, [0, sigma1]).exp()
    assert s.coefficient(1) == sigma1
    assert s.coefficient(2) == (sigma1 * sigma1) / 2
    assert s.coefficient(5) == zero
    assert s.coefficient(6) == zero


@given(positive_valuation_series())
@settings(max_examples=40, deadline=None)
def test_exp_inverse_property(a):
    assert a.exp() * (-a).exp() == RingSeries.one(a.order)


@given(positive_valuation_series(), positive_valuation_series())
@settings(max_examples=40, deadline=None)
def test_exp_is_homomorphism(a, b):
    order = min(a.order, b.order)
    a = RingSeries(order, a.coeffs[: order + 1])
    b = RingSeries(order, b.coeffs[: order + 1])
    assert (a + b).exp() == a.exp() * b.exp()
