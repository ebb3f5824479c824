"""Symmetric functions of the degrees and the multiplicative sequences built on them.

Two characteristic series appear: the untwisted x/sinh x and the twisted
1/cosh y.  Their log-series are written with Bernoulli numbers, so all
constants stay rational.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArityMismatch, InsufficientConstants, LengthMismatch, PreconditionViolated
from .exact import (
    RatPoly,
    RationalLike,
    TruncSeries,
    as_rational,
    bernoulli_number,
    exp_series,
    series_exp,
    series_inv,
    series_log,
    series_mul,
)

KINDS = ("tau_untwisted", "varsigma_twisted", "combined")


@dataclass(frozen=True)
class Degrees:
    """Multiset of positive integer degrees, kept sorted ascending."""

    entries: tuple[int, ...]

    def __post_init__(self):
        es = tuple(sorted(int(e) for e in self.entries))
        if any(e < 1 for e in es):
            raise PreconditionViolated(f"degrees must be positive integers, got {es}")
        object.__setattr__(self, "entries", es)

    @classmethod
    def of(cls, d: "Degrees | Iterable[int]") -> "Degrees":
        return d if isinstance(d, Degrees) else cls(tuple(d))

    @classmethod
    def parse(cls, text: str) -> "Degrees":
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def D(self) -> int:
        return len(self.entries)

    @property
    def product(self) -> int:
        return math.prod(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def lcm(self) -> int:
        return math.lcm(*self.entries) if self.entries else 1

    def even(self) -> "Degrees":
        return Degrees(tuple(e for e in self.entries if e % 2 == 0))

    def odd(self) -> "Degrees":
        return Degrees(tuple(e for e in self.entries if e % 2 == 1))

    def with_one(self) -> "Degrees":
        return Degrees(self.entries + (1,))

    def __str__(self):
        return ",".join(map(str, self.entries))


@dataclass(frozen=True)
class SeqConstants:
    kind: str
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PreconditionViolated(f"unknown constant kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))

    def __len__(self):
        return len(self.values)


# -- symmetric functions ------------------------------------------------------

def power_sums(d, kmax: int) -> list[int]:
    """s_1..s_kmax of the degrees."""
    d = Degrees.of(d)
    if kmax < 1:
        raise PreconditionViolated("kmax must be >= 1")
    return [sum(x ** p for x in d) for p in range(1, kmax + 1)]


def elementary_symmetric(d) -> list[int]:
    """sigma_0..sigma_D, the coefficients of prod (1 + d_i t)."""
    out = [1]
    for x in Degrees.of(d):
        out = [a + x * b for a, b in zip(out + [0], [0] + out)]
    return out


def augmented_elementary(sigma: Sequence[int]) -> list[int]:
    """Elementary symmetrics after appending a degree 1: sigma_s + sigma_{s-1}."""
    s = list(sigma)
    return [a + b for a, b in zip(s + [0], [0] + s)]


def power_sums_from_elementary(e: Sequence[RationalLike], kmax: int) -> list[Fraction]:
    """Newton's identities: p_k from e_0=1, e_1, e_2, ... (missing e_j are zero)."""
    e = [as_rational(x) for x in e]
    ej = lambda j: e[j] if j < len(e) else Fraction(0)  # noqa: E731
    p: list[Fraction] = []
    for k in range(1, kmax + 1):
        acc = (-1) ** (k - 1) * k * ej(k)
        for i in range(1, k):
            acc += (-1) ** (i - 1) * ej(i) * p[k - i - 1]
        p.append(acc)
    return p


# -- multiplicative-sequence constants ---------------------------------------

def _tau_weight(k: int) -> Fraction:
    return (-1) ** (k + 1) * bernoulli_number(2 * k) / (2 * math.factorial(2 * k))


def _varsigma_weight(k: int) -> Fraction:
    return _tau_weight(k) * (2 ** (2 * k) - 1)


def constants_from_power_sums(even_power_sums: Sequence[int], kind: str) -> SeqConstants:
    """Constants from s_2, s_4, ..., s_2K (index k-1 holds s_2k)."""
    weight = {"tau_untwisted": _tau_weight, "varsigma_twisted": _varsigma_weight}.get(kind)
    if weight is None:
        raise PreconditionViolated(f"kind must be tau_untwisted or varsigma_twisted, got {kind!r}")
    return SeqConstants(kind, tuple(weight(k) * s for k, s in enumerate(even_power_sums, 1)))


def seq_constants(d, kind: str, kmax: int) -> SeqConstants:
    d = Degrees.of(d)
    sums = [sum(x ** (2 * k) for x in d) for k in range(1, kmax + 1)]
    return constants_from_power_sums(sums, kind)


def combine_constants(a: SeqConstants, b: SeqConstants) -> SeqConstants:
    """Termwise sum: log-series of a product of characteristic functions add."""
    if len(a) != len(b):
        raise LengthMismatch(f"constant sequences have lengths {len(a)} and {len(b)}")
    return SeqConstants("combined", tuple(x + y for x, y in zip(a.values, b.values)))


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def brioschi_H(values: Sequence[Fraction], r: int) -> Fraction:
    """H_r as (1/r!) times the Brioschi determinant of the power-sum constants."""
    if r == 0:
        return Fraction(1)
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            if j <= i:
                row.append(as_rational(values[i - j]))
            elif j == i + 1:
                row.append(Fraction(-(i + 1)))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return _det(rows) / math.factorial(r)


def series_H(values: Sequence[Fraction], r: int) -> Fraction:
    """H_r as the u^r coefficient of exp(sum_k values[k-1] u^k / k)."""
    log = TruncSeries(tuple([Fraction(0)] + [as_rational(v) / k for k, v in enumerate(values[:r], 1)]), r)
    return series_exp(log).coeffs[r]


def homogeneous_H(c: SeqConstants, r: int, method: str = "brioschi") -> Fraction:
    if r < 0:
        raise PreconditionViolated("r must be >= 0")
    if len(c) < r:
        raise InsufficientConstants(f"H_{r} needs {r} constants, only {len(c)} given")
    if method == "brioschi":
        return brioschi_H(c.values, r)
    if method == "series":
        return series_H(c.values, r)
    raise PreconditionViolated(f"unknown method {method!r}")


# -- Todd and A polynomials ---------------------------------------------------

@lru_cache(maxsize=None)
def _todd_log_coeffs(n: int) -> tuple[Fraction, ...]:
    # log of x/(1 - e^{-x}) = sum_k (-1)^k B_k x^k / k!
    s = TruncSeries(tuple((-1) ** k * bernoulli_number(k) / math.factorial(k) for k in range(n + 1)), n)
    return series_log(s).coeffs


@lru_cache(maxsize=None)
def _a_log_coeffs(n: int) -> tuple[Fraction, ...]:
    # Q(z) = 2 sqrt z / sinh(2 sqrt z) = 1 / sum_k (4z)^k / (2k+1)!
    sinhc = TruncSeries(tuple(Fraction(4 ** k, math.factorial(2 * k + 1)) for k in range(n + 1)), n)
    return series_log(series_inv(sinhc)).coeffs


def _multiplicative(log_coeffs: Sequence[Fraction], power: Sequence[Fraction], n: int) -> list[Fraction]:
    log = TruncSeries(tuple([Fraction(0)] + [log_coeffs[k] * power[k - 1] for k in range(1, n + 1)]), n)
    return list(series_exp(log).coeffs)


def todd_polynomials(sigma: Sequence[RationalLike], n: int) -> list[Fraction]:
    """T_0..T_n of prod x_i/(1 - e^{-x_i}) for the roots encoded by ``sigma``.

    ``sigma`` is the elementary-symmetric sequence (sigma_0 = 1 first).
    """
    if n == 0:
        return [Fraction(1)]
    p = power_sums_from_elementary(sigma, n)
    return _multiplicative(_todd_log_coeffs(n), p, n)


def a_genus(p: Sequence[RationalLike], nu: int) -> Fraction:
    """A_nu for elementary symmetrics p_1, p_2, ... of the squared degrees.

    ``p`` starts at p_1 (p_0 = 1 is implied).
    """
    if nu == 0:
        return Fraction(1)
    power = power_sums_from_elementary([1] + list(p), nu)
    return _multiplicative(_a_log_coeffs(nu), power, nu)[nu]


# -- generalised Bernoulli and Euler functions --------------------------------

def _check_arity(n: int, d: Degrees) -> None:
    if len(d) != n:
        raise ArityMismatch(f"expected {n} degrees, got {len(d)}: {d}")


@lru_cache(maxsize=None)
def _bernoulli_product(entries: tuple[int, ...], order: int) -> TruncSeries:
    # prod_i d_i t / (e^{d_i t} - 1), each factor sum_k B_k d^k t^k / k!
    acc = TruncSeries.one(order)
    for d in entries:
        acc = series_mul(acc, TruncSeries(tuple(bernoulli_number(k) * d ** k / math.factorial(k)
                                                for k in range(order + 1)), order))
    return acc


@lru_cache(maxsize=None)
def _euler_product(entries: tuple[int, ...], order: int) -> TruncSeries:
    # prod_j 2 / (e^{b_j t} + 1)
    acc = TruncSeries.one(order)
    for b in entries:
        half = (exp_series(b, order) + TruncSeries.one(order)).scale(Fraction(1, 2))
        acc = series_mul(acc, series_inv(half))
    return acc


def _appell_poly(base: TruncSeries, nu: int, variable: str) -> RatPoly:
    # nu! [t^nu] e^{xt} base(t) = sum_k C(nu, k) x^k (nu-k)! base_{nu-k}
    return RatPoly([math.comb(nu, k) * math.factorial(nu - k) * base.coeffs[nu - k]
                    for k in range(nu + 1)], variable)


def gen_bernoulli_poly(nu: int, d, variable: str = "x") -> RatPoly:
    """B^{(n)}_nu(x | d) as a polynomial in x, n = len(d)."""
    d = Degrees.of(d)
    return _appell_poly(_bernoulli_product(d.entries, nu), nu, variable)


def gen_bernoulli(n: int, nu: int, x: RationalLike, d, method: str = "series") -> Fraction:
    """Generalised Bernoulli function B^{(n)}_nu(x | d).

    ``method="todd"`` takes the Todd-polynomial route instead of direct series
    expansion; the two must coincide.
    """
    d = Degrees.of(d)
    _check_arity(n, d)
    x = as_rational(x)
    if method == "series":
        return gen_bernoulli_poly(nu, d)(x)
    if method == "todd":
        T = todd_polynomials(elementary_symmetric(d), nu)
        acc = sum(((-1) ** s * x ** s / math.factorial(s) * T[nu - s] for s in range(nu + 1)), Fraction(0))
        return (-1) ** nu * math.factorial(nu) * acc
    raise PreconditionViolated(f"unknown method {method!r}")


def d_constant(n: int, nu: int, d) -> Fraction:
    """D^{(n)}_nu = 2^nu B^{(n)}_nu(sigma_1/2 | d); vanishes for odd nu."""
    d = Degrees.of(d)
    _check_arity(n, d)
    return 2 ** nu * gen_bernoulli(n, nu, Fraction(d.total, 2), d)


def gen_euler_poly(nu: int, beta, variable: str = "x") -> RatPoly:
    beta = Degrees.of(beta)
    return _appell_poly(_euler_product(beta.entries, nu), nu, variable)


def gen_euler(n: int, nu: int, x: RationalLike, beta) -> Fraction:
    """E^{(n)}_nu(x | beta) from 2^n e^{xt} / prod (e^{beta_j t} + 1)."""
    beta = Degrees.of(beta)
    _check_arity(n, beta)
    return gen_euler_poly(nu, beta)(as_rational(x))


def gen_euler_const(n: int, nu: int, beta) -> Fraction:
    beta = Degrees.of(beta)
    return gen_euler(n, nu, Fraction(beta.total, 2), beta)
