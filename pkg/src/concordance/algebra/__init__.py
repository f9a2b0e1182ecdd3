"""Exact arithmetic substrate: Q, Q(i), polynomials, Laurent polynomials,
Sturm root isolation and rational points on the unit circle."""

from fractions import Fraction

from .gaussian import CirclePoint, GaussianRational, as_fraction, circle_point_value
from .laurent import LaurentPolynomial, even_laurent_to_cosine, laurent_eval
from .linalg import det_bareiss, det_field, det_pencil, integer_kernel, matrix_rank
from .polynomial import Polynomial, chebyshev_t, cosine_series_to_polynomial, interpolate
from .sturm import (
    IsolatingInterval,
    count_roots,
    real_roots,
    simplest_rational_between,
    sturm_isolate,
    sturm_sequence,
)

Rational = Fraction

__all__ = [
    "CirclePoint", "Fraction", "GaussianRational", "IsolatingInterval",
    "LaurentPolynomial", "Polynomial", "Rational", "as_fraction",
    "chebyshev_t", "circle_point_value", "cosine_series_to_polynomial",
    "count_roots", "det_bareiss", "det_field", "det_pencil",
    "even_laurent_to_cosine", "integer_kernel", "interpolate",
    "laurent_eval", "matrix_rank", "real_roots", "simplest_rational_between",
    "sturm_isolate", "sturm_sequence",
]
