"""Transporting a direct link modulo a linear form."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LinkageError, VerificationError
from ..polyalg import Ideal, Polynomial, RingContext, colon_element
from .links import LinkStep, direct_link, link_identities


@dataclass(frozen=True)
class LinearFormDescent:
    """A link ``I1 ~ I2`` (by ``J``) pushed to ``(I_i : g^j) + <g>`` and then to ``S/<g>``."""

    g: Polynomial
    j: int
    lifted_source: Ideal
    lifted_target: Ideal
    lifted_link: Ideal
    identities: dict
    eliminated: int
    quotient_ring: RingContext
    step: LinkStep


def quotient_map(g: Polynomial):
    """Substitution realising ``S/<g> ≅ k[other variables]``.

    Equivalent to a linear change of coordinates taking ``g`` to the last
    variable and then setting it to zero: the highest-indexed variable
    occurring in ``g`` is solved for, the others keep their names and order.
    Returns
    ``(index, target_ring, images)``.
    """
    if g.homogeneous_degree != 1:
        raise ValueError(f"{g} is not a linear form")
    ring = g.ring
    if ring.num_vars < 2:
        raise ValueError("cannot pass to a quotient with no variables left")
    coeffs = {m.index(1): c for m, c in g.terms.items()}
    k = max(coeffs)
    target = ring.without(k)
    inv = pow(coeffs[k], -1, ring.characteristic)
    images = []
    for i in range(ring.num_vars):
        if i == k:
            img = Polynomial.zero(target)
            for v, c in coeffs.items():
                if v != k:
                    img = img + Polynomial.variable(target, v if v < k else v - 1).scale(-c * inv)
            images.append(img)
        else:
            images.append(Polynomial.variable(target, i if i < k else i - 1))
    return k, target, images


def push_down(I: Ideal, target: RingContext, images) -> Ideal:
    return Ideal(target, [f.compose(images, target) for f in I.generators], I.limits)


def mod_linear_form(I1: Ideal, I2: Ideal, J: Ideal, g: Polynomial, j: int) -> LinearFormDescent:
    """Check and transport ``I1 ~J~ I2`` to ``(I1 : g^j) + <g>  ~(J + <g>)~  (I2 : g^j) + <g>``.

    The three link identities are verified in ``S``; the link is then
    pushed to the polynomial ring ``S/<g>`` and re-verified there.
    """
    if j < 0:
        raise ValueError("exponent j must be non-negative")
    if g.homogeneous_degree != 1:
        raise ValueError(f"{g} is not a linear form")
    before = link_identities(J, I1, I2)
    if not all(before.values()):
        failed = [k for k, v in before.items() if not v]
        raise LinkageError(f"I1 and I2 are not directly linked by J (failed: {failed})")
    if colon_element(J, g) != J:
        raise LinkageError(f"{g} is a zero-divisor modulo J")

    gj = g ** j

    def lift(I: Ideal) -> Ideal:
        base = colon_element(I, gj) if j else I
        return base + g

    I1p, I2p, Jp = lift(I1), lift(I2), J + g
    identities = link_identities(Jp, I1p, I2p)
    if not all(identities.values()):
        failed = [k for k, v in identities.items() if not v]
        raise VerificationError(f"transported link fails: {failed}")

    k, target, images = quotient_map(g)
    src, tgt, lnk = (push_down(X, target, images) for X in (I1p, I2p, Jp))
    step = direct_link(src, lnk)
    if step.target != tgt:
        raise VerificationError("link in the quotient ring does not reproduce the image of I2'")
    return LinearFormDescent(g, j, I1p, I2p, Jp, identities, k, target, step)
