"""Exact arithmetic layer: rationals, dense polynomials and truncated series.

Everything here works over :class:`fractions.Fraction`; no floats are ever
produced.  Polynomials and series are immutable value objects.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NotCoprime, PreconditionViolated

Rational = Fraction
RationalLike = Union[int, Fraction, str]

VARIABLES = ("l", "lbar", "omega", "sigma", "x")
_DISPLAY = {"l": "l", "lbar": "lbar", "omega": "omega", "sigma": "sigma", "x": "x"}


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Canonical string form: ``"n"`` for integers, ``"n/d"`` otherwise."""
    return str(Fraction(x))


# -- Bernoulli numbers --------------------------------------------------------

_bern_lock = threading.Lock()
_bern_memo: list[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """Return B_n with the B_1 = -1/2 convention.

    Uses sum_{k=0}^{n} C(n+1, k) B_k = 0.  The memo only ever grows by
    appending values computed from a consistent prefix, so concurrent callers
    always observe the same numbers.
    """
    if n < 0:
        raise PreconditionViolated(f"bernoulli_number needs n >= 0, got {n}")
    if n < len(_bern_memo):
        return _bern_memo[n]
    with _bern_lock:
        memo = _bern_memo
        for m in range(len(memo), n + 1):
            if m > 1 and m % 2 == 1:
                memo.append(Fraction(0))
                continue
            acc = sum((math.comb(m + 1, k) * memo[k] for k in range(m)), Fraction(0))
            memo.append(-acc / (m + 1))
        return memo[n]


# -- modular helpers ----------------------------------------------------------

def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``; for m = 1 every residue is 0."""
    if m < 1:
        raise PreconditionViolated(f"modulus must be positive, got {m}")
    if math.gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) = {math.gcd(a, m)} != 1")
    if m == 1:
        return 0
    return pow(a, -1, m)


def floor_rational(x: RationalLike) -> int:
    x = as_rational(x)
    return x.numerator // x.denominator


def frac_part(x: RationalLike) -> Fraction:
    """Sawtooth {x} = x - floor(x), always in [0, 1)."""
    x = as_rational(x)
    return x - floor_rational(x)


# -- polynomials --------------------------------------------------------------

def _trim(coeffs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    cs = [as_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RatPoly:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...] = ()
    variable: str = "l"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))
        if self.variable not in VARIABLES:
            raise ValueError(f"unknown polynomial variable {self.variable!r}")

    @classmethod
    def constant(cls, c: RationalLike, variable: str = "l") -> "RatPoly":
        return cls((as_rational(c),), variable)

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1, variable: str = "l") -> "RatPoly":
        return cls((Fraction(0),) * k + (as_rational(c),), variable)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def with_variable(self, variable: str) -> "RatPoly":
        return RatPoly(self.coeffs, variable)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        return RatPoly.constant(other, self.variable)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly([self.coeff(k) + other.coeff(k) for k in range(n)], self.variable)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs], self.variable)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            c = as_rational(other)
            return RatPoly([c * a for a in self.coeffs], self.variable)
        if self.is_zero() or other.is_zero():
            return RatPoly((), self.variable)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out, self.variable)

    __rmul__ = __mul__

    def __str__(self):
        return format_poly(self)


def poly_shift(p: RatPoly, c: RationalLike, variable: str | None = None) -> RatPoly:
    """Return q with q(x) = p(x + c), optionally renaming the variable."""
    c = as_rational(c)
    n = len(p.coeffs)
    out = [Fraction(0)] * n
    for k, a in enumerate(p.coeffs):
        if not a:
            continue
        # a (x + c)^k = a sum_j C(k, j) c^(k-j) x^j
        cpow = Fraction(1)
        for j in range(k, -1, -1):
            out[j] += a * math.comb(k, j) * cpow
            cpow *= c
    return RatPoly(out, variable or p.variable)


def format_poly(p: RatPoly, var: str | None = None) -> str:
    """Render highest degree first, e.g. ``"1/2·l + 3/4"``."""
    name = var or _DISPLAY[p.variable]
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = name if k == 1 else f"{name}^{k}"
            body = mono if mag == 1 else f"{mag}·{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


# -- truncated power series ---------------------------------------------------

@dataclass(frozen=True)
class TruncSeries:
    """Power series known exactly through t^order."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise PreconditionViolated(f"series order must be >= 0, got {self.order}")
        cs = [as_rational(c) for c in self.coeffs[: self.order + 1]]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[RationalLike], order: int) -> "TruncSeries":
        return cls(tuple(coeffs), order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls((Fraction(1),), order)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        return cls((Fraction(0), Fraction(1)), order)

    def __getitem__(self, k: int) -> Fraction:
        return series_coeff(self, k)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "TruncSeries":
        c = as_rational(c)
        return TruncSeries(tuple(c * a for a in self.coeffs), self.order)

    def substitute_power(self, m: int, order: int | None = None) -> "TruncSeries":
        """Return s(t^m) truncated at ``order`` (default: same order)."""
        order = self.order if order is None else order
        if m < 1:
            raise PreconditionViolated("substitution power must be >= 1")
        out = [Fraction(0)] * (order + 1)
        for k, c in enumerate(self.coeffs):
            if k * m > order:
                break
            out[k * m] = c
        # t^m substitution of a series known to order N is exact to order m*N + m - 1
        return TruncSeries(tuple(out), min(order, m * self.order + m - 1))


def series_coeff(s: TruncSeries, k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    if k > s.order:
        raise PreconditionViolated(f"coefficient t^{k} is beyond truncation order {s.order}")
    return s.coeffs[k]


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        x = ac[i]
        if not x:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncSeries(tuple(out), n)


def series_inv(s: TruncSeries) -> TruncSeries:
    c0 = s.coeffs[0]
    if c0 == 0:
        raise PreconditionViolated(f"series_inv needs a nonzero constant term, got {c0}")
    n = s.order
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / c0
    for k in range(1, n + 1):
        acc = sum((s.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out[k] = -acc / c0
    return TruncSeries(tuple(out), n)


def series_exp(s: TruncSeries) -> TruncSeries:
    if s.coeffs[0] != 0:
        raise PreconditionViolated(f"series_exp needs a zero constant term, got {s.coeffs[0]}")
    n = s.order
    a = s.coeffs
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    # E' = S' E  =>  k e_k = sum_{j=1}^{k} j s_j e_{k-j}
    for k in range(1, n + 1):
        acc = sum((j * a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
        out[k] = acc / k
    return TruncSeries(tuple(out), n)


def series_log(s: TruncSeries) -> TruncSeries:
    if s.coeffs[0] != 1:
        raise PreconditionViolated(f"series_log needs constant term 1, got {s.coeffs[0]}")
    n = s.order
    a = s.coeffs
    out = [Fraction(0)] * (n + 1)
    # S L' = S'  =>  k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
    for k in range(1, n + 1):
        acc = k * a[k] - sum((j * out[j] * a[k - j] for j in range(1, k)), Fraction(0))
        out[k] = acc / k
    return TruncSeries(tuple(out), n)


def exp_series(c: RationalLike, order: int) -> TruncSeries:
    """e^{c t} to the given order."""
    c = as_rational(c)
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] * c / k)
    return TruncSeries(tuple(out), order)
