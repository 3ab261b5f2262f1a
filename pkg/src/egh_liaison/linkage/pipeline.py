"""End-to-end construction of a monomial witness for an Artinian ideal."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..combinat import CIType, TypeChain, witness_ideal
from ..errors import LinkageError
from ..polyalg import HilbertFunction, Ideal, MonomialIdeal
from .links import (
    DEFAULT_MAX_STEPS,
    DEFAULT_RETRIES,
    LinkChain,
    minimal_containment_degrees,
    minimally_licci_chain,
)


@dataclass
class EGHResult:
    ideal: Ideal
    e: CIType
    chain: LinkChain
    witness: MonomialIdeal | None
    hf_ideal: HilbertFunction
    hf_witness: HilbertFunction | None
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def type_chain(self) -> list:
        return self.chain.types()


def egh_pipeline(I: Ideal, *, rng: random.Random, max_steps: int = DEFAULT_MAX_STEPS,
                 retries: int = DEFAULT_RETRIES) -> EGHResult:
    """Minimal containment type, minimal link chain, witness ideal and its checks.

    Construction failures raise; a chain that is not sequentially bounded
    or a Hilbert function mismatch is returned as a failed check so the
    caller can report the full chain.
    """
    ring = I.ring
    n = ring.num_vars
    if I.is_unit() or not I.is_artinian():
        raise LinkageError("the pipeline needs a proper ideal with Artinian quotient")
    e, seq = minimal_containment_degrees(I, n, rng=rng, retries=retries)
    chain = minimally_licci_chain(I, rng=rng, max_steps=max_steps, retries=retries,
                                  first=(e, seq))
    types = chain.types()
    hf_I = I.hilbert_function()
    checks = {
        "first_link_minimal": types[0] == e,
        "sequentially_bounded": chain.is_sequentially_bounded(),
    }
    witness = hf_w = None
    if checks["sequentially_bounded"]:
        witness = witness_ideal(TypeChain(tuple(types)), ring)
        hf_w = witness.hilbert_function()
    checks["hf_equal"] = hf_w == hf_I
    checks["powers_contained"] = witness is not None and all(
        witness.contains_power(i, ei) for i, ei in enumerate(e))
    return EGHResult(I, e, chain, witness, hf_I, hf_w, checks)
