"""Ehrhart quasipolynomials of the weighted simplex sum d_i x_i <= 1, x_i >= 0.

The count at dilation l is the denumerant of the degrees with a 1 appended,
so its polynomial part is a first wave.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionViolated
from .exact import RatPoly, TruncSeries, poly_shift, series_inv, series_mul
from .multiseq import Degrees, constants_from_power_sums, homogeneous_H
from .waves import denumerant, denumerant_table_series, sylvester_expansion


@dataclass(frozen=True)
class EhrhartResult:
    degrees: Degrees
    poly_part_l: RatPoly
    poly_part_lbar: RatPoly
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def lbar_shift(self) -> Fraction:
        return Fraction(self.degrees.total + 1, 2)


def _check_l(l: int) -> None:
    if l < 0:
        raise PreconditionViolated(f"dilation must be >= 0, got {l}")


def ehrhart_count(d, l: int) -> int:
    """Lattice points of the closed l-dilate: #{m >= 0 : sum d_i m_i <= l}."""
    _check_l(l)
    return denumerant(Degrees.of(d).with_one(), l)


def ehrhart_counts(d, lmax: int) -> list[int]:
    return denumerant_table_series(Degrees.of(d).with_one(), lmax)


def accumulate(d, l: int, method: str = "sum") -> int:
    """Accumulated degeneracy sum_{l' <= l} denumerant(d, l').

    ``method="series"`` multiplies the generating function by 1/(1 - sigma).
    """
    _check_l(l)
    table = denumerant_table_series(d, l)
    if method == "sum":
        return sum(table)
    if method == "series":
        h = TruncSeries(tuple(table), l)
        geometric = series_inv(TruncSeries((1, -1), l))
        return int(series_mul(h, geometric).coeffs[l])
    raise PreconditionViolated(f"unknown method {method!r}")


def ehrhart_poly_part(d, lmax: int | None = None) -> EhrhartResult:
    """Polynomial part of the Ehrhart quasipolynomial, in lbar and in l.

    Uses the untwisted constants with s_2k + 1 in place of s_2k, which is the
    first wave of the degrees with 1 appended.
    """
    d = Degrees.of(d)
    top = d.D
    K = top // 2
    sums = [sum(x ** (2 * k) for x in d) + 1 for k in range(1, K + 1)]
    tau = constants_from_power_sums(sums, "tau_untwisted")
    H = [homogeneous_H(tau, r) for r in range(K + 1)]
    lbar_poly = sylvester_expansion(H, top, Fraction(1, d.product))
    l_poly = poly_shift(lbar_poly, Fraction(d.total + 1, 2), "l")
    counts = {}
    if lmax is not None:
        counts = dict(enumerate(ehrhart_counts(d, lmax)))
    return EhrhartResult(d, l_poly, lbar_poly, counts)


def reference_d2(d1: int, d2: int) -> RatPoly:
    """Reference two-degree polynomial part, in l."""
    pref = Fraction(1, 2 * d1 * d2)
    const = Fraction(d1 * d1 + d2 * d2 + 3 * d1 * d2 + 1, 6)
    return RatPoly([pref * const, pref * (d1 + d2 + 1), pref], "l")


def reference_d3(d1: int, d2: int, d3: int) -> RatPoly:
    """Reference three-degree polynomial part without its periodic terms, in l."""
    pref = Fraction(1, 2 * d1 * d2 * d3)
    s1 = d1 + d2 + d3
    s2 = d2 * d3 + d3 * d1 + d1 * d2
    sq = d1 * d1 + d2 * d2 + d3 * d3
    return RatPoly([Fraction(0), pref * Fraction(3 * (s1 + s2) + sq, 6),
                    pref * Fraction(s1 + 1, 2), pref * Fraction(1, 3)], "l")


def reference_poly(d) -> RatPoly:
    d = Degrees.of(d)
    if d.D == 2:
        return reference_d2(*d.entries)
    if d.D == 3:
        return reference_d3(*d.entries)
    raise PreconditionViolated(f"reference polynomials exist only for 2 or 3 degrees, got {d.D}")


def compare_with_reference(d) -> dict[int, Fraction]:
    """Coefficient differences computed - reference, by power of l."""
    d = Degrees.of(d)
    computed = ehrhart_poly_part(d).poly_part_l
    ref = reference_poly(d)
    n = max(computed.degree, ref.degree)
    return {k: computed.coeff(k) - ref.coeff(k) for k in range(n + 1)}


def leading_coefficient(d) -> Fraction:
    """Simplex volume term 1/(D! prod d_i)."""
    d = Degrees.of(d)
    return Fraction(1, math.factorial(d.D) * d.product)
