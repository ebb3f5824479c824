"""Exact denumerants, Sylvester waves, Ehrhart polynomials and sphere-tiling spectra."""

__version__ = "0.1.0"

from .exact import RatPoly, TruncSeries, bernoulli_number, frac_part, mod_inverse, poly_shift  # noqa: E402
from .ehrhart import ehrhart_poly_part  # noqa: E402
from .multiseq import Degrees  # noqa: E402
from .waves import decompose, denumerant, wave_w1, wave_w2  # noqa: E402

__all__ = [
    "Degrees", "RatPoly", "TruncSeries", "bernoulli_number", "decompose", "denumerant", "ehrhart_poly_part",
    "frac_part", "mod_inverse", "poly_shift", "wave_w1", "wave_w2",
]
