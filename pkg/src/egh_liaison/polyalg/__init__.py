"""Exact polynomial arithmetic over F_p, Groebner bases and ideal operations."""

from .groebner import DEFAULT_LIMITS, GroebnerLimits, groebner_basis, normal_form, s_polynomial
from .ideal import (
    Ideal,
    colon,
    colon_element,
    groebner,
    height,
    hilbert_function,
    intersect,
    min_generators,
    saturate,
)
from .monomial import HilbertFunction, MonomialIdeal, minimalize_monomials
from .parse import parse_ideal_text, parse_polynomial
from .poly import Polynomial, format_polynomial, linear_form
from .ring import (
    DEFAULT_PRIME,
    DEGREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    RingContext,
    divides,
    elimination_order,
    monomials_of_degree,
)

__all__ = [
    "DEFAULT_LIMITS", "DEFAULT_PRIME", "DEGREVLEX", "GRLEX", "LEX", "GroebnerLimits",
    "HilbertFunction", "Ideal", "MonomialIdeal", "MonomialOrder", "Polynomial",
    "RingContext", "colon", "colon_element", "divides", "elimination_order",
    "format_polynomial", "groebner", "groebner_basis", "height", "hilbert_function",
    "intersect", "linear_form", "min_generators", "minimalize_monomials",
    "monomials_of_degree", "normal_form", "parse_ideal_text", "parse_polynomial",
    "s_polynomial", "saturate",
]
