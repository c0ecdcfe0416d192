from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tmcf.exactalg import (
    NEG_INF,
    LaurentSeries,
    Polynomial,
    T,
    format_polynomial,
    parse_polynomial,
    poly_compose_power,
    poly_derivative,
    poly_divrem,
    poly_eval,
    series_from_word,
    series_invert,
    series_mul,
    series_sub,
)

from conftest import polys, small_fracs


def test_zero_polynomial_degree_is_below_every_int():
    z = Polynomial([0, 0, 0])
    assert z.coeffs == ()
    assert z.degree == NEG_INF
    assert z.degree < -(10**9)


def test_divrem_one_step():
    q, r = poly_divrem(T**2 + 1, T)
    assert (q, r) == (T, Polynomial([1]))


def test_divrem_exact_p1_instance():
    q, r = poly_divrem(T**8 - 1, T**4 - 1)
    assert q == T**4 + 1
    assert r.is_zero()
    # long-division oracle: q * den reconstitutes num
    assert q * (T**4 - 1) == T**8 - 1


def test_divrem_by_one():
    p = Polynomial([Fraction(1, 3), 0, -2, 5])
    assert poly_divrem(p, Polynomial([1])) == (p, Polynomial())


def test_divrem_zero_divisor():
    with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
        poly_divrem(T, Polynomial())


@settings(max_examples=200, deadline=None)
@given(polys(30), polys(30, nonzero=True))
def test_divrem_reconstitutes(p, q):
    quo, rem = poly_divrem(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


def test_eval_examples():
    assert poly_eval(T**4 + 1, 1) == 2
    assert poly_eval(Polynomial(), Fraction(7, 3)) == 0
    # T - (-1)^n is T + 1 for odd n
    for n in range(1, 7):
        assert poly_eval(T - (-1) ** n, 1) == (2 if n % 2 else 0)


def test_derivative_examples():
    assert poly_derivative(T**4 + 1) == Polynomial([0, 0, 0, 4])
    assert poly_eval(poly_derivative(T**4 + 1), 1) == 4
    assert poly_derivative(Polynomial([Fraction(5, 2)])).is_zero()


@given(polys(12), polys(12), small_fracs)
def test_derivative_linear_and_product_rule(p, q, c):
    d = poly_derivative
    assert d(p + q.scale(c)) == d(p) + d(q).scale(c)
    assert d(p * q) == d(p) * q + p * d(q)


def test_compose_power_examples():
    assert poly_compose_power(T + 1, 3) == T**3 + 1
    r = poly_compose_power(T**4 + 1, 4)
    assert r == T**16 + 1 and r.degree == 16
    p = Polynomial([1, 2, 3])
    assert poly_compose_power(p, 1) == p
    with pytest.raises(ValueError):
        poly_compose_power(p, 0)


@given(polys(15), st.integers(min_value=1, max_value=5), small_fracs)
def test_compose_power_eval(p, c, x):
    assert poly_eval(poly_compose_power(p, c), x) == poly_eval(p, x**c)


@pytest.mark.parametrize(
    "poly, text",
    [
        (Polynomial(), "0"),
        (T + 1, "T + 1"),
        (Polynomial([Fraction(-1, 2), Fraction(1, 2)]), "1/2*T - 1/2"),
        (Polynomial([-1, 2, 0, Fraction(-1, 2)]), "-1/2*T^3 + 2*T - 1"),
        (-(T**5), "-T^5"),
        (Polynomial([Fraction(-3, 4)]), "-3/4"),
    ],
)
def test_format(poly, text):
    assert format_polynomial(poly) == text
    assert parse_polynomial(text) == poly


@given(polys(20))
def test_format_round_trip(p):
    assert parse_polynomial(format_polynomial(p)) == p


@pytest.mark.parametrize("bad", ["", "T +", "2 T", "x + 1", "* T"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_polynomial(bad)


# -- Laurent series -----------------------------------------------------------

def test_series_from_word_examples():
    s = series_from_word([1, -1, -1, 1, -1], 4)
    assert (s.top, s.precision) == (-1, 4)
    assert [s.coefficient(-n) for n in range(1, 5)] == [1, -1, -1, 1]
    s2 = series_from_word([1, 1, -1, -1], 4)
    assert [s2.coefficient(-n) for n in range(1, 5)] == [1, 1, -1, -1]
    s3 = series_from_word([1, 1], 2)
    assert s3.coeffs == (1, 1)


def test_series_from_word_short():
    with pytest.raises(ValueError, match="insufficient word prefix"):
        series_from_word([1, -1], 3)


def test_series_coefficient_below_precision_is_unknown():
    s = series_from_word([1, 1, 1], 3)
    with pytest.raises(ValueError):
        s.coefficient(-4)


@given(st.lists(st.sampled_from([1, -1]), min_size=1, max_size=60))
def test_series_round_trip(letters):
    s = series_from_word(letters, len(letters))
    assert [int(s.coefficient(-n)) for n in range(1, len(letters) + 1)] == letters


def test_invert_geometric():
    s = series_from_word([1, 1, 0, 0, 0, 0], 6)  # T^-1 (1 + T^-1)
    inv = series_invert(s)
    # 1/(T^-1 + T^-2) = T * sum (-1)^k T^-k
    assert inv.top == 1
    assert inv.precision == 6 - 2
    assert [inv.coefficient(1 - k) for k in range(6)] == [(-1) ** k for k in range(6)]


def test_invert_zero():
    with pytest.raises(ZeroDivisionError):
        series_invert(LaurentSeries.zero(5))


def test_sub_self_is_zero():
    s = series_from_word([1, -1, -1, 1, -1, 1, 1, -1], 8)
    d = series_sub(s, s)
    assert d.is_zero() and d.precision == 8


def test_mul_by_one():
    s = series_from_word([1, -1, -1, 1, -1, 1, 1, -1], 8)
    one = LaurentSeries.from_polynomial(Polynomial([1]), 8)
    assert series_mul(one, s) == s


@settings(max_examples=50, deadline=None)
@given(st.lists(small_fracs, min_size=4, max_size=12).filter(lambda c: c[0] != 0), st.integers(-2, 2))
def test_invert_times_self_is_one(cs, top):
    s = LaurentSeries(top, cs, len(cs) - 1 - top)
    prod = series_mul(s, series_invert(s))
    one = LaurentSeries.from_polynomial(Polynomial([1]), prod.precision)
    assert prod.precision == s.precision + top  # relative precision is preserved
    assert prod.agrees_with(one)


@settings(max_examples=50, deadline=None)
@given(st.lists(small_fracs, min_size=2, max_size=10), st.lists(small_fracs, min_size=2, max_size=10))
def test_mul_precision_is_never_overstated(a, b):
    # perturb beyond the stated precision: the known part of the product must not move
    sa = LaurentSeries(-1, a, len(a))
    sb = LaurentSeries(-1, b, len(b))
    prod = series_mul(sa, sb)
    sa2 = LaurentSeries(-1, a + [Fraction(7)], len(a) + 1)
    sb2 = LaurentSeries(-1, b + [Fraction(-3)], len(b) + 1)
    prod2 = series_mul(sa2, sb2)
    assert prod2.precision >= prod.precision
    assert prod.agrees_with(prod2)
