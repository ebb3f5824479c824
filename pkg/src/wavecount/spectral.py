"""Spectra of regular sphere tessellations.

Neumann eigenlevels are omega = a_N + l with degeneracy equal to the
denumerant of the tiling degrees; Dirichlet levels shift l by d0.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ehrhart import ehrhart_poly_part, reference_poly
from .errors import CatalogError, DimensionUnsupported, MissingAxisOrders, PreconditionViolated, UnknownTiling
from .exact import RatPoly, TruncSeries, as_rational, frac_part, poly_shift, series_inv, series_mul
from .multiseq import Degrees
from .waves import denumerant, wave_w1

BOUNDARY_CONDITIONS = ("neumann", "dirichlet", "periodic")
MOLIEN_CHECK_ORDER = 60


@dataclass(frozen=True)
class TilingSpec:
    name: str
    dim: int
    degrees: Degrees
    axis_orders: tuple[int, ...] | None = None

    @classmethod
    def from_degrees(cls, name: str, degrees, axis_orders=None) -> "TilingSpec":
        degrees = Degrees.of(degrees)
        return cls(name, degrees.D, degrees, tuple(axis_orders) if axis_orders else None)

    @property
    def a_N(self) -> Fraction:
        return Fraction(self.dim - 1, 2)

    @property
    def d0(self) -> int:
        # stated for d = 2 as d1 + d2 - 1; the general form is inferred
        return self.degrees.total - (self.dim - 1)

    @property
    def a_D(self) -> Fraction:
        return self.a_N + self.d0

    def eigenlevel(self, l: int, bc: str = "neumann") -> Fraction:
        return (self.a_D if _bc(bc) == "dirichlet" else self.a_N) + l


def _bc(bc: str) -> str:
    key = bc.lower()
    if key not in BOUNDARY_CONDITIONS:
        raise PreconditionViolated(f"boundary condition must be one of {BOUNDARY_CONDITIONS}, got {bc!r}")
    return key


def lune(q: int) -> TilingSpec:
    if q < 1:
        raise PreconditionViolated(f"lune order must be >= 1, got {q}")
    return TilingSpec.from_degrees(f"lune({q})", (q, 1))


_POLYHEDRA = {
    "tetrahedral": ((3, 4), (2, 3, 3)),
    "octahedral": ((4, 6), (2, 3, 4)),
    "icosahedral": ((6, 10), (2, 3, 5)),
}


@lru_cache(maxsize=1)
def catalog() -> tuple[TilingSpec, ...]:
    """Polyhedral tilings, each admitted only if its axis orders pass the Molien check."""
    specs = []
    for name, (degrees, axes) in _POLYHEDRA.items():
        spec = TilingSpec.from_degrees(name, degrees, axes)
        if molien_from_axes(axes, MOLIEN_CHECK_ORDER) != molien_series(spec, MOLIEN_CHECK_ORDER):
            raise CatalogError(f"axis orders {axes} do not reproduce the {name} generating function")
        specs.append(spec)
    return tuple(specs)


_LUNE_RE = re.compile(r"^lune[(:]?(\d+)\)?$")


def tiling(name: str) -> TilingSpec:
    """Look up a catalog tiling by name; ``lune(q)`` builds a lune."""
    key = name.strip().lower()
    m = _LUNE_RE.match(key)
    if m:
        return lune(int(m.group(1)))
    for spec in catalog():
        if spec.name == key:
            return spec
    raise UnknownTiling(f"unknown tiling {name!r}; expected tetrahedral, octahedral, icosahedral or lune(q)")


def degeneracy(spec: TilingSpec, bc: str, l: int) -> int:
    bc = _bc(bc)
    if bc == "neumann":
        return denumerant(spec.degrees, l)
    if bc == "dirichlet":
        return denumerant(spec.degrees, l - spec.d0)
    return denumerant(spec.degrees, l) + denumerant(spec.degrees, l - spec.d0)


def degeneracy_table(spec: TilingSpec, bc: str, lmax: int) -> list[int]:
    from .waves import denumerant_table_series

    bc = _bc(bc)
    n = denumerant_table_series(spec.degrees, lmax)
    shifted = [n[l - spec.d0] if l >= spec.d0 else 0 for l in range(lmax + 1)]
    if bc == "neumann":
        return n
    if bc == "dirichlet":
        return shifted
    return [a + b for a, b in zip(n, shifted)]


def closed_form_degeneracy(name: str, l: int) -> Fraction:
    """Rotational (periodic) degeneracy from the closed floor/fractional formulas."""
    key = name.strip().lower()
    m = _LUNE_RE.match(key)
    if m:
        q = int(m.group(1))
        return Fraction(2 * (l // q) + 1)
    if key == "tetrahedral":
        return Fraction(l, 6) + 1 - frac_part(Fraction(l, 2)) - 2 * frac_part(Fraction(l, 3))
    if key == "octahedral":
        return (Fraction(l, 12) + 1 - frac_part(Fraction(l, 2)) - frac_part(Fraction(l, 3))
                - frac_part(Fraction(l, 4)))
    if key == "icosahedral":
        return (Fraction(l, 30) + 1 - frac_part(Fraction(l, 2)) - frac_part(Fraction(l, 3))
                - frac_part(Fraction(l, 5)))
    raise UnknownTiling(f"no closed form for tiling {name!r}")


def closed_form_degeneracy_floor(name: str, l: int) -> int:
    """The floor-function version of the same formulas."""
    orders = {"tetrahedral": (2, 3, 3), "octahedral": (2, 3, 4), "icosahedral": (2, 3, 5)}.get(name)
    if orders is None:
        raise UnknownTiling(f"no floor form for tiling {name!r}")
    return sum(l // q for q in orders) + 1 - l


# -- generating functions -----------------------------------------------------

def _denominator_series(degrees: Degrees, order: int) -> TruncSeries:
    acc = TruncSeries.one(order)
    for d in degrees:
        coeffs = [0] * (order + 1)
        coeffs[0] = 1
        if d <= order:
            coeffs[d] = -1
        acc = series_mul(acc, series_inv(TruncSeries(tuple(coeffs), order)))
    return acc


def _monomial(k: int, order: int) -> TruncSeries:
    coeffs = [0] * (order + 1)
    if k <= order:
        coeffs[k] = 1
    return TruncSeries(tuple(coeffs), order)


def molien_series(spec: TilingSpec, order: int, bc: str = "periodic") -> TruncSeries:
    """Degree form: sigma^shift / prod (1 - sigma^d_i), summed over the requested conditions."""
    bc = _bc(bc)
    base = _denominator_series(spec.degrees, order)
    numer = {"neumann": _monomial(0, order), "dirichlet": _monomial(spec.d0, order),
             "periodic": _monomial(0, order) + _monomial(spec.d0, order)}[bc]
    return series_mul(numer, base)


def cyclic_series(q: int, order: int) -> TruncSeries:
    """h(sigma; q, 1) = (1 + sigma^q) / ((1 - sigma^q)(1 - sigma))."""
    return molien_series(lune(q), order, "periodic")


def molien_from_axes(axis_orders, order: int) -> TruncSeries:
    """Orbit-stabiliser form (1/2)(sum_q h(sigma; q, 1) - h(sigma; 1, 1))."""
    if not axis_orders:
        raise MissingAxisOrders("the axis form needs the rotational axis orders")
    acc = cyclic_series(1, order).scale(-1)
    for q in axis_orders:
        acc = acc + cyclic_series(q, order)
    return acc.scale(Fraction(1, 2))


# -- geometric side -------------------------------------------------------------

@dataclass(frozen=True)
class TilingInvariants:
    two_g: int
    b1: int
    b2_opt: int | None


def invariants(degrees) -> TilingInvariants:
    d = Degrees.of(degrees)
    b1 = sum(x - 1 for x in d) + 1
    b2 = None
    if d.D == 3:
        d1, d2, d3 = d.entries
        b2 = d2 * d3 + d3 * d1 + d1 * d2 - d1 - d2 - d3
    return TilingInvariants(2 * d.product, b1, b2)


def weyl_reference(degrees, bc: str = "neumann") -> RatPoly:
    """Leading terms of the smoothed counting function in omega (three terms when d = 3)."""
    d = Degrees.of(degrees)
    dim = d.D
    inv = invariants(d)
    sign = -1 if _bc(bc) == "dirichlet" else 1
    pref = Fraction(1, inv.two_g * math.factorial(dim - 1))
    coeffs = [Fraction(0)] * (dim + 1)
    coeffs[dim] = pref * Fraction(2, dim)
    coeffs[dim - 1] += pref * sign * inv.b1
    if dim == 3:
        coeffs[1] += pref * Fraction(dim - 1, 6) * (inv.b1 * (inv.b1 - 1) + inv.b2_opt)
    return RatPoly(coeffs, "omega")


def midpoint_combination(degrees, source: str = "computed") -> RatPoly:
    """(1/2)[E(omega - a_N) + E(omega - a_N - 1)] for the Ehrhart polynomial part E."""
    d = Degrees.of(degrees)
    if source == "computed":
        E = ehrhart_poly_part(d).poly_part_l
    elif source == "reference":
        if d.D not in (2, 3):
            raise DimensionUnsupported(f"reference polynomials exist only for d = 2, 3, got d = {d.D}")
        E = reference_poly(d)
    else:
        raise PreconditionViolated(f"source must be 'computed' or 'reference', got {source!r}")
    a_N = Fraction(d.D - 1, 2)
    upper = poly_shift(E, -a_N, "omega")
    lower = poly_shift(E, -a_N - 1, "omega")
    return (upper + lower) * Fraction(1, 2)


def midpoint_closed_form_d3(degrees) -> RatPoly:
    """(1/2g)(omega^3/3 + b1 omega^2/2 + (b1(b1-1) + b2 + 1) omega/6), without constant term."""
    inv = invariants(degrees)
    if inv.b2_opt is None:
        raise DimensionUnsupported("the closed midpoint form is stated for d = 3 only")
    pref = Fraction(1, inv.two_g)
    b1, b2 = inv.b1, inv.b2_opt
    return RatPoly([0, pref * Fraction(b1 * (b1 - 1) + b2 + 1, 6), pref * Fraction(b1, 2),
                    pref * Fraction(1, 3)], "omega")


# -- heat-kernel conversion -----------------------------------------------------

@dataclass(frozen=True)
class SqrtPiRational:
    """Exact value coeff * sqrt(pi) if ``sqrt_pi`` else coeff."""

    coeff: Fraction
    sqrt_pi: bool = False

    def __str__(self):
        return f"{self.coeff}·sqrt(pi)" if self.sqrt_pi else str(self.coeff)


def gamma_half_integer(x) -> SqrtPiRational:
    """Gamma at a positive integer or half-integer, exactly."""
    x = as_rational(x)
    if x <= 0 or (2 * x).denominator != 1:
        raise PreconditionViolated(f"Gamma is only tabulated at positive (half-)integers, got {x}")
    if x.denominator == 1:
        return SqrtPiRational(Fraction(math.factorial(int(x) - 1)))
    n = int(x - Fraction(1, 2))
    # Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    return SqrtPiRational(Fraction(math.factorial(2 * n), 4 ** n * math.factorial(n)), True)


def counting_polynomial(degrees) -> RatPoly:
    """First wave of the degrees as a polynomial in omega = l + a_N."""
    d = Degrees.of(degrees)
    a_N = Fraction(d.D - 1, 2)
    return poly_shift(wave_w1(d), Fraction(d.total, 2) - a_N, "omega")


def heat_kernel_coeffs(degrees) -> list[tuple[Fraction, SqrtPiRational]]:
    """C_{(d-k-1)/2} = P_k Gamma((k+1)/2) / 2 for k = d-1 down to 0."""
    d = Degrees.of(degrees)
    P = counting_polynomial(d)
    out = []
    for k in range(d.D - 1, -1, -1):
        g = gamma_half_integer(Fraction(k + 1, 2))
        out.append((Fraction(d.D - k - 1, 2), SqrtPiRational(P.coeff(k) * g.coeff / 2, g.sqrt_pi)))
    return out
