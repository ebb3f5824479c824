import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavecount.errors import NotCoprime, PreconditionViolated
from wavecount.exact import (
    RatPoly,
    TruncSeries,
    bernoulli_number,
    floor_rational,
    format_poly,
    frac_part,
    mod_inverse,
    poly_shift,
    series_coeff,
    series_exp,
    series_inv,
    series_log,
    series_mul,
)

rationals = st.fractions(max_denominator=10 ** 6)


def bernoulli_oracle(n):
    # n! [t^n] t / (e^t - 1), from the reciprocal of sum t^k/(k+1)!
    c = [Fraction(1)]
    for k in range(1, n + 1):
        c.append(-sum(Fraction(1, math.factorial(j + 1)) * c[k - j] for j in range(1, k + 1)))
    return c[n] * math.factorial(n)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)),
                                        (4, Fraction(-1, 30)), (12, Fraction(-691, 2730))])
def test_bernoulli_values(n, expected):
    assert bernoulli_number(n) == expected


def test_bernoulli_matches_series_oracle():
    assert [bernoulli_number(n) for n in range(25)] == [bernoulli_oracle(n) for n in range(25)]


def test_bernoulli_odd_vanish():
    assert all(bernoulli_number(n) == 0 for n in range(3, 41, 2))


def test_bernoulli_memo_concurrent():
    results = {}

    def work(i):
        results[i] = [bernoulli_number(n) for n in range(60, 0, -7)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = [bernoulli_oracle(n) for n in range(60, 0, -7)]
    assert all(r == expected for r in results.values())


@pytest.mark.parametrize("a,m,expected", [(3, 4, 3), (4, 3, 1), (1, 7, 1)])
def test_mod_inverse(a, m, expected):
    assert mod_inverse(a, m) == expected


def test_mod_inverse_not_coprime():
    with pytest.raises(NotCoprime):
        mod_inverse(4, 6)


@pytest.mark.parametrize("x,expected", [(Fraction(3, 4), Fraction(3, 4)), (Fraction(-1, 3), Fraction(2, 3)),
                                        (5, 0)])
def test_frac_part(x, expected):
    assert frac_part(x) == expected


@given(rationals)
def test_frac_plus_floor(x):
    assert frac_part(x) + floor_rational(x) == x
    assert 0 <= frac_part(x) < 1


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_series_examples():
    zero = TruncSeries((), 5)
    assert series_exp(zero) == TruncSeries.one(5)
    t = TruncSeries.variable(8)
    assert series_log(series_exp(t)) == t
    denom = series_mul(series_inv(TruncSeries((1, 0, 0, -1), 12)), series_inv(TruncSeries((1, 0, 0, 0, -1), 12)))
    assert series_coeff(denom, 12) == 2


def test_series_preconditions():
    with pytest.raises(PreconditionViolated, match="zero constant"):
        series_exp(TruncSeries((1, 1), 3))
    with pytest.raises(PreconditionViolated, match="constant term 1"):
        series_log(TruncSeries((2, 1), 3))
    with pytest.raises(PreconditionViolated, match="nonzero"):
        series_inv(TruncSeries((0, 1), 3))


def test_series_mixed_orders_truncate():
    a = TruncSeries((1, 1, 1, 1, 1), 4)
    b = TruncSeries((1, 1), 2)
    assert series_mul(a, b).order == 2


series_strategy = st.lists(st.fractions(max_denominator=20, min_value=-5, max_value=5), min_size=1, max_size=8)


@settings(max_examples=50)
@given(series_strategy)
def test_exp_log_roundtrip(tail):
    s = TruncSeries(tuple([Fraction(1)] + tail), len(tail))
    assert series_exp(series_log(s)) == s
    assert series_mul(s, series_inv(s)) == TruncSeries.one(len(tail))


def test_poly_shift_examples():
    x2 = RatPoly((0, 0, 1))
    assert poly_shift(x2, 1) == RatPoly((1, 2, 1))
    assert poly_shift(RatPoly((0, 1)), Fraction(-1, 2)) == RatPoly((Fraction(-1, 2), 1))


@settings(max_examples=20)
@given(st.lists(st.fractions(max_denominator=50, min_value=-10, max_value=10), max_size=7),
       st.fractions(max_denominator=30, min_value=-10, max_value=10))
def test_poly_shift_roundtrip(coeffs, c):
    p = RatPoly(coeffs)
    assert poly_shift(poly_shift(p, c), -c) == p
    assert poly_shift(p, c)(Fraction(1, 3)) == p(Fraction(1, 3) + c)


def test_ratpoly_invariants():
    p = RatPoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2) and p.degree == 1
    assert RatPoly(()).is_zero() and RatPoly(()).degree == -1
    assert (p * p)(3) == 49


def test_format_poly():
    assert format_poly(RatPoly((Fraction(3, 4), Fraction(1, 2)))) == "1/2·l + 3/4"
    assert format_poly(RatPoly((Fraction(-1, 8), 0, Fraction(1, 2)), "lbar")) == "1/2·lbar^2 - 1/8"
    assert format_poly(RatPoly(())) == "0"
