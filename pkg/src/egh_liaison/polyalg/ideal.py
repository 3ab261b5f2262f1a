"""Homogeneous ideals and the operations built on Groebner bases."""

from __future__ import annotations

import itertools
import random
import threading
from typing import Iterable, Sequence

from ..errors import NotHomogeneousError, ResourceLimitError
from .groebner import DEFAULT_LIMITS, GroebnerLimits, groebner_basis, normal_form
from .monomial import HilbertFunction, MonomialIdeal
from .parse import parse_ideal_text, parse_polynomial
from .poly import Polynomial, format_polynomial
from .ring import (
    DEGREVLEX,
    MonomialOrder,
    RingContext,
    elimination_order,
    monomials_of_degree,
    order_from_tag,
)


class Ideal:
    """A homogeneous ideal of ``ring`` with a lazily computed degrevlex basis.

    Zero generators are dropped.  The unit ideal is representable (colon
    operations return it) and is reported by :meth:`is_unit`.
    """

    def __init__(self, ring: RingContext, generators: Iterable[Polynomial] = (),
                 limits: GroebnerLimits = DEFAULT_LIMITS):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator belongs to a different ring")
            if not g:
                continue
            if not g.is_homogeneous():
                raise NotHomogeneousError(f"generator {g} is not homogeneous")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.limits = limits
        self._lock = threading.Lock()
        self._gb: tuple | None = None
        self._initial: MonomialIdeal | None = None

    @classmethod
    def from_strings(cls, ring: RingContext, texts: Sequence[str]) -> Ideal:
        return cls(ring, [parse_polynomial(t, ring) for t in texts])

    @classmethod
    def from_text(cls, text: str) -> Ideal:
        parsed = parse_ideal_text(text)
        return cls(parsed.ring, parsed.generators)

    @classmethod
    def unit(cls, ring: RingContext) -> Ideal:
        return cls(ring, [Polynomial.constant(ring, 1)])

    @classmethod
    def maximal(cls, ring: RingContext) -> Ideal:
        return cls(ring, Polynomial.variables(ring))

    # -- cached Groebner data ---------------------------------------------------

    def groebner_basis(self) -> tuple:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = tuple(groebner_basis(self.generators, DEGREVLEX, self.limits,
                                                    ring=self.ring))
        return self._gb

    def initial_ideal(self) -> MonomialIdeal:
        if self._initial is None:
            lms = [g.leading_monomial(DEGREVLEX) for g in self.groebner_basis()]
            self._initial = MonomialIdeal(self.ring, lms)
        return self._initial

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner_basis())

    def __contains__(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def issubset(self, other: Ideal) -> bool:
        return all(g in other for g in self.generators)

    def __le__(self, other: Ideal) -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner_basis() == other.groebner_basis()

    __hash__ = None

    def __add__(self, other: Ideal) -> Ideal:
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        return Ideal(self.ring, self.generators + other.generators, self.limits)

    def __mul__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators],
                     self.limits)

    # -- derived invariants -------------------------------------------------------

    def hilbert_function(self, degree_bound: int | None = None) -> HilbertFunction:
        return hilbert_function(self, degree_bound)

    def is_artinian(self) -> bool:
        return self.initial_ideal().is_artinian()

    def height(self) -> int:
        return height(self)

    def min_generators(self) -> list:
        return min_generators(self)

    def num_min_generators(self) -> int:
        return len(self.min_generators())

    def is_complete_intersection(self) -> bool:
        if self.is_unit():
            return False
        return len(self.min_generators()) == self.height()

    def basis_of_degree(self, d: int) -> list:
        """A k-basis of the degree-d component: ``m - NF(m)`` for ``m`` in in(I)_d."""
        init = self.initial_ideal()
        out = []
        for m in monomials_of_degree(self.ring.num_vars, d):
            if m in init:
                mono = Polynomial.monomial(self.ring, m)
                out.append(mono - self.reduce(mono))
        return out

    def random_form(self, d: int, rng: random.Random) -> Polynomial:
        """Uniformly random element of the degree-d component."""
        p = self.ring.characteristic
        init = self.initial_ideal()
        terms = {m: rng.randrange(p) for m in monomials_of_degree(self.ring.num_vars, d)
                 if m in init}
        f = Polynomial(self.ring, terms)
        return f - self.reduce(f)

    # -- printing -----------------------------------------------------------------

    def to_text(self) -> str:
        lines = [self.ring.header()] + [format_polynomial(g) for g in self.generators]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return "<" + ", ".join(format_polynomial(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"Ideal({self})"


def groebner(I: Ideal, order: MonomialOrder | str = DEGREVLEX) -> list:
    """Reduced Groebner basis of ``I`` for ``order`` (degrevlex is cached)."""
    order = order_from_tag(order)
    if order == DEGREVLEX:
        return list(I.groebner_basis())
    return groebner_basis(I.generators, order, I.limits, ring=I.ring)


def _homogeneous_parts(polys: Iterable[Polynomial]) -> list:
    out = []
    for f in polys:
        out.extend(f.homogeneous_components().values())
    return out


def eliminate_tag(polys: Sequence[Polynomial], tagged: RingContext, ring: RingContext,
                  limits: GroebnerLimits = DEFAULT_LIMITS) -> list:
    """Elements of the reduced basis free of the first variable, moved to ``ring``."""
    gb = groebner_basis(polys, elimination_order(1), limits, ring=tagged)
    out = []
    for g in gb:
        if all(m[0] == 0 for m in g.terms):
            out.append(Polynomial(ring, {m[1:]: c for m, c in g.terms.items()}))
    return out


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [], I.limits)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    tagged = ring.with_tag()
    shift = list(range(1, ring.num_vars + 1))
    t = Polynomial.variable(tagged, 0)
    one_minus_t = 1 - t
    gens = [t * f.embed(tagged, shift) for f in I.generators]
    gens += [one_minus_t * g.embed(tagged, shift) for g in J.generators]
    return Ideal(ring, _homogeneous_parts(eliminate_tag(gens, tagged, ring, I.limits)), I.limits)


def colon_element(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f`` computed as ``(I ∩ <f>) / f``."""
    if not f:
        return Ideal.unit(I.ring)
    if f in I:
        return Ideal.unit(I.ring)
    both = intersect(I, Ideal(I.ring, [f], I.limits))
    return Ideal(I.ring, [h.exact_divide(f) for h in both.generators], I.limits)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """``I : J = {s : sJ ⊆ I}``; the unit ideal is returned when ``J ⊆ I``."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    result = None
    for g in J.generators:
        part = colon_element(I, g)
        if part.is_unit():
            continue
        result = part if result is None else intersect(result, part)
    return Ideal.unit(I.ring) if result is None else result


def saturate(I: Ideal, g: Polynomial, max_steps: int | None = None):
    """``(I : g^∞, N)`` with ``N`` the least exponent where ``I : g^N`` stabilises."""
    if not g:
        raise ValueError("cannot saturate by zero")
    if not g.is_homogeneous():
        raise NotHomogeneousError(f"{g} is not homogeneous")
    limit = max_steps if max_steps is not None else I.limits.max_degree
    current = I
    for n in range(limit + 1):
        nxt = colon_element(current, g)
        if nxt == current:
            return current, n
        current = nxt
    raise ResourceLimitError(f"saturation did not stabilise within {limit} steps")


def hilbert_function(I: Ideal, degree_bound: int | None = None) -> HilbertFunction:
    """Hilbert function of ``S/I`` via standard monomials of the initial ideal."""
    return I.initial_ideal().hilbert_function(degree_bound)


def min_generators(I: Ideal) -> list:
    """A minimal homogeneous generating set, chosen greedily degree by degree."""
    chosen: list = []
    current = Ideal(I.ring, [], I.limits)
    for g in sorted(I.generators, key=lambda f: f.homogeneous_degree):
        if g in current:
            continue
        chosen.append(g)
        current = Ideal(I.ring, chosen, I.limits)
    return chosen


def krull_dimension_monomial(M: MonomialIdeal) -> int:
    """max |T| over variable subsets T containing the support of no generator."""
    n = M.ring.num_vars
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in M.generators]
    for size in range(n, -1, -1):
        for T in itertools.combinations(range(n), size):
            Tset = set(T)
            if not any(s <= Tset for s in supports):
                return size
    return -1  # only the unit ideal reaches here


def height(I: Ideal) -> int:
    if I.is_unit():
        raise ValueError("the unit ideal has no height")
    return I.ring.num_vars - krull_dimension_monomial(I.initial_ideal())
