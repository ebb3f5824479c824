import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavecount.errors import DegenerateDegree, NotCoprime
from wavecount.exact import RatPoly, poly_shift
from wavecount.waves import (
    check_reciprocity,
    decompose,
    denumerant,
    denumerant_table_enum,
    denumerant_table_series,
    evaluate_waves,
    frobenius,
    popoviciu,
    popoviciu_gcd,
    undulant,
    wave_w1,
    wave_w1_todd,
    wave_w2,
    wave_w2_bernoulli_euler,
)


def brute(d, l):
    # direct count over the first D-1 multiplicities
    *head, last = d
    def go(i, rest):
        if i == len(head):
            return 1 if rest % last == 0 else 0
        return sum(go(i + 1, rest - k * head[i]) for k in range(rest // head[i] + 1))
    return go(0, l) if l >= 0 else 0


def test_denumerant_examples():
    assert [denumerant((2, 3), l) for l in range(8)] == [1, 0, 1, 1, 1, 1, 2, 1]
    assert denumerant((1, 5, 10, 25, 50), 100) == 292
    assert denumerant((3, 4), -1) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 30))
def test_tables_match_brute(d, l):
    assert denumerant_table_series(d, l)[l] == denumerant_table_enum(d, l)[l] == brute(sorted(d), l)


def test_verify_flag():
    assert denumerant((2, 3, 5), 20, verify=True) == brute((2, 3, 5), 20)


@settings(max_examples=60)
@given(st.integers(1, 60), st.integers(1, 60), st.integers(0, 300))
def test_popoviciu(a, b, l):
    if math.gcd(a, b) == 1:
        assert popoviciu(a, b, l) == denumerant((a, b), l)
    assert popoviciu_gcd(a, b, l) == denumerant((a, b), l)


def test_popoviciu_errors():
    with pytest.raises(NotCoprime):
        popoviciu(4, 6, 3)
    assert frobenius(3, 5) == 7
    with pytest.raises(DegenerateDegree):
        frobenius(1, 5)
    with pytest.raises(NotCoprime):
        frobenius(4, 6)


# hand-derived waves: n(l) for (2,1) is l/2 + 3/4 + (-1)^l/4; for (2,2) it is (l/2 + 1)(1 + (-1)^l)/2
@pytest.mark.parametrize("d,w1_l,w2_l", [
    ((2, 1), RatPoly((Fraction(3, 4), Fraction(1, 2))), RatPoly((Fraction(1, 4),))),
    ((2, 2), RatPoly((Fraction(1, 2), Fraction(1, 4))), RatPoly((Fraction(1, 2), Fraction(1, 4)))),
    ((1, 1, 1), RatPoly((1, Fraction(3, 2), Fraction(1, 2))), RatPoly(())),
])
def test_waves_hand_examples(d, w1_l, w2_l):
    w1, w2 = decompose(d).in_l()
    assert w1 == w1_l and w2 == w2_l


def test_w1_hand_values():
    assert wave_w1((3, 4)).coeffs == (0, Fraction(1, 12))
    # (1,3,4): (1/12)(lbar^2/2 - tau_1), tau_1 = 26/24
    assert wave_w1((1, 3, 4)).coeffs == (Fraction(-13, 144), 0, Fraction(1, 24))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=1, max_size=6), st.integers(0, 40))
def test_ones_and_twos_have_no_undulant(d, l):
    # only the roots 1 and -1 occur, so the two waves are the whole count
    assert undulant(d, l) == 0


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 7), min_size=1, max_size=4))
def test_w1_todd_route(d):
    assert poly_shift(wave_w1(d), Fraction(sum(d), 2), "l") == wave_w1_todd(d)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 7), min_size=1, max_size=4))
def test_w1_leading_coefficient(d):
    w = wave_w1(d)
    assert w.degree == len(d) - 1
    assert w.coeff(len(d) - 1) == Fraction(1, math.factorial(len(d) - 1) * math.prod(d))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 8), min_size=1, max_size=5))
def test_w2_forms_agree(d):
    w2 = wave_w2(d)
    assert wave_w2_bernoulli_euler(d, "w21") == w2
    assert wave_w2_bernoulli_euler(d, "w22") == w2
    assert wave_w2_bernoulli_euler(d, "w23") == poly_shift(w2, Fraction(sum(d), 2), "l")


def test_w2_zero_without_even_degree():
    assert wave_w2((1, 3, 5)).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 8), min_size=1, max_size=5))
def test_reciprocity(d):
    assert check_reciprocity(decompose(d)).passed


def test_undulant_periodic():
    d = (3, 4)
    w = decompose(d)
    res = [undulant(d, l, w) for l in range(48)]
    assert res[:12] == res[12:24] == res[24:36]


def test_evaluate_needs_integer():
    with pytest.raises(ValueError):
        evaluate_waves(decompose((2, 1)), Fraction(1, 2))
