"""Denumerants and their first two Sylvester waves.

The denumerant of degrees d at l counts nonnegative solutions of
sum d_i m_i = l.  It splits as W1(l) + (-1)^l W2(l) + U(l), where W1 is the
polynomial part, W2 the wave of the root -1 and U the residual from roots of
unity of order >= 3.  Both waves are polynomials in the augmented argument
lbar = l + sigma_1/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateDegree, NotCoprime, OracleMismatch
from .exact import RatPoly, as_rational, mod_inverse, poly_shift
from .multiseq import (
    Degrees,
    combine_constants,
    d_constant,
    elementary_symmetric,
    gen_bernoulli_poly,
    gen_euler_const,
    gen_euler_poly,
    homogeneous_H,
    seq_constants,
    todd_polynomials,
)


# -- denumerant oracle --------------------------------------------------------

def denumerant_table_enum(d, lmax: int) -> list[int]:
    """Counts for l = 0..lmax by enumerating every solution tuple."""
    d = Degrees.of(d)
    counts = [0] * (lmax + 1) if lmax >= 0 else []
    if lmax < 0:
        return counts
    *head, last = d.entries

    def walk(i: int, partial: int) -> None:
        if i == len(head):
            for total in range(partial, lmax + 1, last):
                counts[total] += 1
            return
        step = head[i]
        for s in range(partial, lmax + 1, step):
            walk(i + 1, s)

    walk(0, 0)
    return counts


def denumerant_table_series(d, lmax: int) -> list[int]:
    """Coefficients of prod 1/(1 - sigma^d_i) through sigma^lmax."""
    if lmax < 0:
        return []
    coeffs = [1] + [0] * lmax
    for step in Degrees.of(d):
        # multiplying by 1/(1 - sigma^step) is a strided prefix sum
        for k in range(step, lmax + 1):
            coeffs[k] += coeffs[k - step]
    return coeffs


def denumerant(d, l: int, verify: bool = False) -> int:
    """Number of nonnegative solutions of sum d_i m_i = l (0 for l < 0).

    With ``verify=True`` the enumeration oracle is run as well and an
    :class:`OracleMismatch` is raised on disagreement.
    """
    if l < 0:
        return 0
    value = denumerant_table_series(d, l)[l]
    if verify:
        brute = denumerant_table_enum(d, l)[l]
        if brute != value:
            raise OracleMismatch(f"denumerant({d}, {l}): series {value} != enumeration {brute}")
    return value


# -- Popoviciu closed forms ---------------------------------------------------

def popoviciu(d1: int, d2: int, l: int) -> int:
    """Two-degree denumerant for coprime degrees via modular inverses."""
    if math.gcd(d1, d2) != 1:
        raise NotCoprime(f"gcd({d1}, {d2}) != 1")
    return _popoviciu_core(d1, d2, l, mod_inverse(d1, d2), mod_inverse(d2, d1), 1)


def _popoviciu_core(d1: int, d2: int, l: int, inv1: int, inv2: int, e: int) -> int:
    # l e/(d1 d2) + 1 - {inv1 l/d2} - {inv2 l/d1}, scaled by d1 d2; {a/b} = (a mod b)/b
    num = l * e + d1 * d2 - d1 * ((inv1 * l) % d2) - d2 * ((inv2 * l) % d1)
    q, r = divmod(num, d1 * d2)
    assert r == 0, (d1, d2, l)
    return q


def reduced_inverses(d1: int, d2: int) -> tuple[int, int]:
    """(delta_1, delta_2) with delta_1 d1/e = 1 mod d2/e and delta_2 d2/e = 1 mod d1/e."""
    e = math.gcd(d1, d2)
    return mod_inverse(d1 // e, d2 // e), mod_inverse(d2 // e, d1 // e)


def popoviciu_gcd(d1: int, d2: int, l: int) -> int:
    e = math.gcd(d1, d2)
    if l % e:
        return 0
    delta1, delta2 = reduced_inverses(d1, d2)
    return _popoviciu_core(d1, d2, l, delta1, delta2, e)


def frobenius(d1: int, d2: int) -> int:
    if min(d1, d2) == 1:
        raise DegenerateDegree("a degree equal to 1 makes every l representable")
    if math.gcd(d1, d2) != 1:
        raise NotCoprime(f"gcd({d1}, {d2}) != 1")
    return d1 * d2 - d1 - d2


# -- waves ---------------------------------------------------------------------

@dataclass(frozen=True)
class WaveDecomposition:
    degrees: Degrees
    lbar_shift: Fraction
    w1: RatPoly
    w2: RatPoly
    even_degrees: Degrees = field(default=None)
    odd_degrees: Degrees = field(default=None)

    def __post_init__(self):
        if self.even_degrees is None:
            object.__setattr__(self, "even_degrees", self.degrees.even())
        if self.odd_degrees is None:
            object.__setattr__(self, "odd_degrees", self.degrees.odd())

    def in_l(self) -> tuple[RatPoly, RatPoly]:
        """W1 and W2 re-expressed as polynomials in l."""
        return (poly_shift(self.w1, self.lbar_shift, "l"),
                poly_shift(self.w2, self.lbar_shift, "l"))


def sylvester_expansion(H: Sequence[Fraction], top: int, prefactor: Fraction) -> RatPoly:
    """prefactor * sum_r (-1)^r H_r lbar^(top-2r) / (top-2r)!, negative powers dropped."""
    coeffs = [Fraction(0)] * (top + 1)
    for r in range(top // 2 + 1):
        k = top - 2 * r
        coeffs[k] = prefactor * (-1) ** r * H[r] / math.factorial(k)
    return RatPoly(coeffs, "lbar")


def wave_w1(d) -> RatPoly:
    """Polynomial part W1 of the denumerant, in lbar."""
    d = Degrees.of(d)
    top = d.D - 1
    K = top // 2
    tau = seq_constants(d, "tau_untwisted", K)
    H = [homogeneous_H(tau, r) for r in range(K + 1)]
    return sylvester_expansion(H, top, Fraction(1, d.product))


def wave_w1_todd(d) -> RatPoly:
    """W1 in l from Todd polynomials (coefficient of 1/t, no lbar symmetry used)."""
    d = Degrees.of(d)
    top = d.D - 1
    T = todd_polynomials(elementary_symmetric(d), top)
    return RatPoly([T[top - k] / (math.factorial(k) * d.product) for k in range(top + 1)], "l")


def wave_w2(d) -> RatPoly:
    """(-1)^l-wave W2 with the sign factor stripped, in lbar; zero if no even degree."""
    d = Degrees.of(d)
    alpha, beta = d.even(), d.odd()
    if alpha.D == 0:
        return RatPoly((), "lbar")
    top = alpha.D - 1
    K = top // 2
    consts = combine_constants(seq_constants(alpha, "tau_untwisted", K),
                               seq_constants(beta, "varsigma_twisted", K))
    H = [homogeneous_H(consts, r) for r in range(K + 1)]
    return sylvester_expansion(H, top, Fraction(1, 2 ** beta.D * alpha.product))


def wave_w2_bernoulli_euler(d, form: str = "w21") -> RatPoly:
    """W2 from a Bernoulli-Euler convolution; forms 'w21' and 'w22' are in lbar, 'w23' in l.

    These are validators for :func:`wave_w2`.
    """
    d = Degrees.of(d)
    alpha, beta = d.even(), d.odd()
    if alpha.D == 0:
        return RatPoly((), "l" if form == "w23" else "lbar")
    a = alpha.D
    top = a - 1
    A, Bsum = Fraction(alpha.total, 2), Fraction(beta.total, 2)
    out = RatPoly((), "lbar")
    if form == "w21":
        pref = Fraction(1, 2 ** beta.D * math.factorial(top) * alpha.product)
        for nu in range(top + 1):
            bern = poly_shift(gen_bernoulli_poly(nu, alpha, "lbar"), A)
            out = out + bern * (math.comb(top, nu) * gen_euler_const(beta.D, top - nu, beta))
        return out * pref
    if form == "w22":
        pref = Fraction(1, 2 ** (d.D - 1) * math.factorial(top) * alpha.product)
        for nu in range(top + 1):
            euler = poly_shift(gen_euler_poly(nu, beta, "lbar"), Bsum)
            out = out + euler * (math.comb(top, nu) * 2 ** nu * d_constant(a, top - nu, alpha))
        return out * pref
    if form == "w23":
        pref = Fraction(1, 2 ** beta.D * math.factorial(top) * alpha.product)
        out = RatPoly((), "l")
        for nu in range(top + 1):
            bern = poly_shift(gen_bernoulli_poly(nu, alpha, "l"), alpha.total)
            e = gen_euler_poly(top - nu, beta)(beta.total)
            out = out + bern * (math.comb(top, nu) * e)
        return out * pref
    raise ValueError(f"unknown W2 form {form!r}")


def decompose(d) -> WaveDecomposition:
    d = Degrees.of(d)
    return WaveDecomposition(d, Fraction(d.total, 2), wave_w1(d), wave_w2(d))


def evaluate_waves(w: WaveDecomposition, l) -> Fraction:
    lbar = as_rational(l) + w.lbar_shift
    sign = 1
    if w.w2.coeffs:
        l = as_rational(l)
        if l.denominator != 1:
            raise ValueError("the (-1)^l factor needs an integer l")
        sign = -1 if l.numerator % 2 else 1
    return w.w1(lbar) + sign * w.w2(lbar)


def undulant(d, l: int, w: WaveDecomposition | None = None) -> Fraction:
    """Residual of the denumerant after removing W1 and W2."""
    w = w or decompose(d)
    return denumerant(w.degrees, l) - evaluate_waves(w, l)


@dataclass
class ReciprocityReport:
    passed: bool
    w1_offending: dict[int, Fraction]
    w2_offending: dict[int, Fraction]


def check_reciprocity(w: WaveDecomposition) -> ReciprocityReport:
    """W1 may only carry lbar^k with k = D-1 (mod 2), W2 only k = alpha-1 (mod 2)."""
    D, alpha = w.degrees.D, w.even_degrees.D
    bad1 = {k: c for k, c in enumerate(w.w1.coeffs) if c and (k - (D - 1)) % 2}
    bad2 = {k: c for k, c in enumerate(w.w2.coeffs) if c and (k - (alpha - 1)) % 2}
    if alpha == 0:
        bad2 = {k: c for k, c in enumerate(w.w2.coeffs) if c}
    return ReciprocityReport(not bad1 and not bad2, bad1, bad2)
