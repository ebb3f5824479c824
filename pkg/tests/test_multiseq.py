import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavecount.errors import ArityMismatch, InsufficientConstants, LengthMismatch
from wavecount.multiseq import (
    Degrees,
    SeqConstants,
    a_genus,
    augmented_elementary,
    combine_constants,
    d_constant,
    elementary_symmetric,
    gen_bernoulli,
    gen_euler,
    homogeneous_H,
    power_sums,
    power_sums_from_elementary,
    seq_constants,
    todd_polynomials,
)

degree_sets = st.lists(st.integers(1, 8), min_size=1, max_size=5)


def test_degrees_sorted_and_parsed():
    d = Degrees.parse("4, 2,3")
    assert d.entries == (2, 3, 4)
    assert (d.D, d.product, d.total, d.lcm) == (3, 24, 9, 12)
    assert d.even().entries == (2, 4) and d.odd().entries == (3,)
    assert d.with_one().entries == (1, 2, 3, 4)


def test_elementary_and_power_sums():
    assert elementary_symmetric((2, 3, 4)) == [1, 9, 26, 24]
    assert power_sums((2, 3, 4), 2) == [9, 29]
    assert power_sums_from_elementary([1, 9, 26, 24], 3) == [9, 29, 99]


@given(degree_sets)
def test_augmented_elementary(d):
    assert augmented_elementary(elementary_symmetric(d)) == elementary_symmetric(list(d) + [1])


def test_tau_values():
    # tau_1 = s_2/24, tau_2 = s_4/1440 (B_2 = 1/6, B_4 = -1/30)
    c = seq_constants((1, 2), "tau_untwisted", 2)
    assert c.values == (Fraction(5, 24), Fraction(17, 1440))
    v = seq_constants((1,), "varsigma_twisted", 2)
    assert v.values == (Fraction(3, 24), Fraction(15, 1440))


def test_H_small():
    c = SeqConstants("tau_untwisted", (Fraction(1, 2), Fraction(1, 3)))
    # H_1 = c1, H_2 = (c1^2 + c2)/2
    assert homogeneous_H(c, 1) == Fraction(1, 2)
    assert homogeneous_H(c, 2) == (Fraction(1, 4) + Fraction(1, 3)) / 2


@settings(max_examples=30, deadline=None)
@given(degree_sets, st.integers(0, 5))
def test_brioschi_equals_series(d, r):
    c = seq_constants(d, "tau_untwisted", 5)
    assert homogeneous_H(c, r, "brioschi") == homogeneous_H(c, r, "series")


def test_H_errors():
    c = SeqConstants("tau_untwisted", (Fraction(1),))
    with pytest.raises(InsufficientConstants):
        homogeneous_H(c, 2)
    with pytest.raises(LengthMismatch):
        combine_constants(c, SeqConstants("varsigma_twisted", ()))


def test_todd_low_order():
    # T_1 = c1/2, T_2 = (c1^2 + c2)/12 for roots with elementary symmetrics c
    e = elementary_symmetric((2, 3))
    T = todd_polynomials(e, 2)
    assert T[1] == Fraction(5, 2)
    assert T[2] == Fraction(25 + 6, 12)


def test_a_genus_low_order():
    # Q(z) = 1 - 2z/3 + ..., so A_1 = -2 p_1 / 3
    assert a_genus([3], 1) == Fraction(-2)


@settings(max_examples=25, deadline=None)
@given(degree_sets, st.integers(0, 6), st.fractions(max_denominator=7, min_value=-4, max_value=4))
def test_todd_route_matches_series(d, nu, x):
    n = len(d)
    assert gen_bernoulli(n, nu, x, d, "todd") == gen_bernoulli(n, nu, x, d, "series")


@pytest.mark.parametrize("nu,expected", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6))])
def test_single_bernoulli_is_classical(nu, expected):
    assert gen_bernoulli(1, nu, 0, (1,)) == expected


def test_single_euler_is_classical():
    # E_1(x) = x - 1/2, E_2(x) = x^2 - x
    assert gen_euler(1, 1, Fraction(1, 2), (1,)) == 0
    assert gen_euler(1, 2, 3, (1,)) == 6


@settings(max_examples=25, deadline=None)
@given(degree_sets, st.integers(0, 4))
def test_d_constant_odd_vanishes(d, k):
    assert d_constant(len(d), 2 * k + 1, d) == 0


def test_arity_checked():
    with pytest.raises(ArityMismatch):
        gen_bernoulli(3, 1, 0, (1, 2))


def test_bernoulli_of_ones_at_zero():
    # 2! [t^2] (1 - t/2 + t^2/12)^2 = 2 (1/4 + 2/12)
    val = gen_bernoulli(2, 2, 0, (1, 1))
    assert val == math.factorial(2) * (Fraction(1, 4) + 2 * Fraction(1, 12))
