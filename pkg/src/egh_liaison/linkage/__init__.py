"""Algebraic linkage: direct and minimal links, chains, Pfaffians, descent."""

from .descent import LinearFormDescent, mod_linear_form, quotient_map
from .links import (
    DEFAULT_MAX_STEPS,
    DEFAULT_RETRIES,
    LinkChain,
    LinkStep,
    ci_type,
    direct_link,
    is_gorenstein_artinian,
    is_nonzerodivisor,
    is_regular_sequence,
    link_identities,
    minimal_containment_degrees,
    minimal_link,
    minimally_licci_chain,
    socle_dimension,
)
from .pfaffian import (
    AlternatingMatrix,
    pfaffian,
    pfaffian_ideal,
    random_alternating_matrix,
    submaximal_pfaffians,
)
from .pipeline import EGHResult, egh_pipeline

__all__ = [
    "AlternatingMatrix", "DEFAULT_MAX_STEPS", "DEFAULT_RETRIES", "EGHResult",
    "LinearFormDescent", "LinkChain", "LinkStep", "ci_type", "direct_link", "egh_pipeline",
    "is_gorenstein_artinian", "is_nonzerodivisor", "is_regular_sequence", "link_identities",
    "minimal_containment_degrees", "minimal_link", "minimally_licci_chain", "mod_linear_form",
    "pfaffian", "pfaffian_ideal", "quotient_map", "random_alternating_matrix",
    "socle_dimension", "submaximal_pfaffians",
]
