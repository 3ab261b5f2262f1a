"""Direct links, minimal links and minimal link chains."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from ..combinat import CIType, TypeChain
from ..errors import (
    GenericityError,
    LinkageError,
    NotCompleteIntersectionError,
    VerificationError,
)
from ..polyalg import Ideal, Polynomial, colon, colon_element

DEFAULT_RETRIES = 5
DEFAULT_MAX_STEPS = 20


@dataclass(frozen=True)
class LinkStep:
    """``source`` and ``target`` directly linked by the complete intersection ``link``."""

    link: Ideal
    source: Ideal
    target: Ideal
    link_type: CIType
    minimal: bool = False


@dataclass
class LinkChain:
    source: Ideal
    steps: list
    terminal_type: CIType
    generator_counts: list = field(default_factory=list)

    @property
    def terminal(self) -> Ideal:
        return self.steps[-1].target if self.steps else self.source

    @property
    def ideals(self) -> list:
        return [self.source] + [s.target for s in self.steps]

    def types(self) -> list:
        return [s.link_type for s in self.steps] + [self.terminal_type]

    def first_violation(self) -> int | None:
        """1-based index ``i`` with ``a(i) >= a(i+1)`` failing, or None."""
        types = self.types()
        for i, (a, b) in enumerate(zip(types, types[1:]), start=1):
            if not a.dominates(b):
                return i
        return None

    def is_sequentially_bounded(self) -> bool:
        return self.first_violation() is None

    def type_chain(self) -> TypeChain:
        return TypeChain(tuple(self.types()))

    def __len__(self) -> int:
        return len(self.steps)


def ci_type(J: Ideal) -> CIType:
    """Type of a complete intersection: sorted degrees of its minimal generators."""
    if not J.is_complete_intersection():
        raise NotCompleteIntersectionError(f"{J} is not a complete intersection")
    return CIType(tuple(g.homogeneous_degree for g in J.min_generators()))


def is_regular_sequence(forms: Sequence[Polynomial]) -> bool:
    """Homogeneous forms of positive degree are S-regular iff they generate height len(forms)."""
    if not forms:
        return True
    if any(not f or f.is_constant() for f in forms):
        return False
    I = Ideal(forms[0].ring, forms)
    return I.height() == len(forms)


def is_nonzerodivisor(J: Ideal, f: Polynomial) -> bool:
    """``J : f == J``."""
    return colon_element(J, f) == J


def link_identities(J: Ideal, I: Ideal, I2: Ideal) -> dict:
    """The three defining identities of a direct link, each checked exactly."""
    return {
        "contained": J.issubset(I) and J.issubset(I2),
        "colon_source": colon(J, I) == I2,
        "colon_target": colon(J, I2) == I,
    }


def direct_link(I: Ideal, J: Ideal, minimal: bool = False) -> LinkStep:
    """Link ``I`` by the complete intersection ``J``: returns ``I' = J : I`` after checking ``J : I' = I``."""
    if I.ring != J.ring:
        raise LinkageError("ideals live in different rings")
    if J.is_unit() or not J.is_complete_intersection():
        raise NotCompleteIntersectionError(f"link {J} is not a complete intersection")
    if not J.issubset(I):
        raise LinkageError("the link is not contained in the ideal")
    h = J.height()
    if I.is_unit() or I.height() != h:
        raise LinkageError(f"height mismatch: link has height {h}")
    target = colon(J, I)
    if target.is_unit():
        raise LinkageError("J : I is the unit ideal (linking a complete intersection to itself)")
    if colon(J, target) != I:
        raise VerificationError("J : (J : I) != I; the ideal is not unmixed of the link's height")
    if target.height() != h:
        raise VerificationError("linked ideal has the wrong height")
    return LinkStep(J, I, target, ci_type(J), minimal)


def _random_nonzero_form(I: Ideal, d: int, rng: random.Random, retries: int) -> Polynomial:
    for _ in range(retries):
        f = I.random_form(d, rng)
        if f:
            return f
    raise GenericityError(f"no nonzero random form of degree {d} after {retries} draws")


def minimal_containment_degrees(I: Ideal, r: int | None = None, *, rng: random.Random,
                                retries: int = DEFAULT_RETRIES,
                                max_degree: int | None = None):
    """Greedy degrees ``(a_1, ..., a_r)`` of a regular sequence minimally contained in ``I``.

    ``a_1`` is the initial degree of ``I``; each later ``a_i`` is the least
    degree ``>= a_{i-1}`` at which a random form of ``I`` extends the current
    sequence, trying ``retries`` draws per degree.  Returns the type and the
    regular sequence found.  A failure in degree ``d`` is evidence, not a
    proof, that no extension exists there.
    """
    if I.is_unit() or I.is_zero():
        raise LinkageError("need a nonzero proper ideal")
    h = I.height()
    r = h if r is None else r
    if r > h:
        raise LinkageError(f"height {h} is less than the requested length {r}")
    if r < 1:
        raise LinkageError("sequence length must be positive")
    cap = max_degree if max_degree is not None else I.limits.max_degree
    a1 = min(g.homogeneous_degree for g in I.generators)
    seq = [_random_nonzero_form(I, a1, rng, retries)]
    degrees = [a1]
    for i in range(1, r):
        d = degrees[-1]
        found = None
        while found is None:
            if d > cap:
                raise GenericityError(
                    f"could not extend the regular sequence past length {i} "
                    f"by degree {cap}", partial=(tuple(degrees), tuple(seq)))
            for _ in range(retries):
                f = I.random_form(d, rng)
                if f and is_regular_sequence(seq + [f]):
                    found = f
                    break
            else:
                d += 1
        seq.append(found)
        degrees.append(d)
    return CIType(tuple(degrees)), tuple(seq)


def minimal_link(I: Ideal, *, rng: random.Random, retries: int = DEFAULT_RETRIES,
                 containment=None) -> LinkStep:
    """Link ``I`` by a complete intersection of its minimal containment type.

    A failed double-colon check is retried with fresh random forms before
    being reported as a genericity failure.
    """
    if I.is_complete_intersection():
        raise LinkageError("ideal is already a complete intersection; a self-link is improper")
    last = None
    for attempt in range(retries):
        if containment is None or attempt > 0:
            e, seq = minimal_containment_degrees(I, rng=rng, retries=retries)
        else:
            e, seq = containment
        J = Ideal(I.ring, seq, I.limits)
        try:
            step = direct_link(I, J, minimal=True)
        except (VerificationError, NotCompleteIntersectionError) as exc:
            last = exc
            continue
        if step.link_type != e:
            last = VerificationError(f"link type {step.link_type} differs from {e}")
            continue
        return step
    raise GenericityError(f"minimal link failed after {retries} attempts: {last}")


def minimally_licci_chain(I: Ideal, *, rng: random.Random,
                          max_steps: int = DEFAULT_MAX_STEPS,
                          retries: int = DEFAULT_RETRIES, first=None) -> LinkChain:
    """Link minimally until a complete intersection is reached.

    Type monotonicity is recorded on the chain (see
    :meth:`LinkChain.first_violation`) rather than assumed.
    """
    if I.is_unit():
        raise LinkageError("cannot link the unit ideal")
    current = I
    steps: list = []
    counts = [current.num_min_generators()]
    while not current.is_complete_intersection():
        if len(steps) >= max_steps:
            raise LinkageError(f"no complete intersection reached within {max_steps} links")
        step = minimal_link(current, rng=rng, retries=retries,
                            containment=first if not steps else None)
        steps.append(step)
        current = step.target
        counts.append(current.num_min_generators())
    return LinkChain(I, steps, ci_type(current), counts)


def socle_dimension(I: Ideal) -> int:
    """``dim_k (I : m) / I`` for an Artinian quotient."""
    if not I.is_artinian():
        raise LinkageError("socle dimension is only computed for Artinian quotients")
    socle = colon(I, Ideal.maximal(I.ring))
    return I.hilbert_function().total() - socle.hilbert_function().total()


def is_gorenstein_artinian(I: Ideal) -> bool:
    return socle_dimension(I) == 1
