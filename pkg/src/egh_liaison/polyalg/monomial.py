"""Monomial ideals and Hilbert functions of graded quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import DegreeBoundRequired
from .poly import format_monomial
from .ring import RingContext, divides, grlex_key, unit_vector


@dataclass(frozen=True)
class HilbertFunction:
    """Values ``H(S/I, 0), ..., H(S/I, D)``.

    For Artinian quotients trailing zeros are dropped, so ``values`` is the
    full support and ``top_socle_degree`` is its last index (``-1`` for the
    unit ideal).  Non-Artinian values are a truncation through ``D`` and
    reading beyond it raises.
    """

    values: tuple
    artinian: bool = True

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError(f"Hilbert function values must be non-negative: {vals}")
        if self.artinian:
            while vals and vals[-1] == 0:
                vals = vals[:-1]
        object.__setattr__(self, "values", vals)

    @property
    def top_socle_degree(self) -> int | None:
        return len(self.values) - 1 if self.artinian else None

    @property
    def degree_bound(self) -> int:
        return len(self.values) - 1

    def __call__(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.values):
            return self.values[t]
        if self.artinian:
            return 0
        raise IndexError(f"Hilbert function only known through degree {len(self.values) - 1}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def padded(self, length: int) -> tuple:
        return tuple(self(t) for t in range(length))

    def total(self) -> int:
        if not self.artinian:
            raise ValueError("total length is infinite for a non-Artinian quotient")
        return sum(self.values)

    def is_symmetric(self) -> bool:
        return self.artinian and self.values == self.values[::-1]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def _print_key(m: tuple) -> tuple:
    return (sum(m),) + tuple(-x for x in m)


def minimalize_monomials(monos: Iterable[tuple]) -> tuple:
    """Minimal elements under divisibility, by degree then lex-descending."""
    kept: list = []
    for m in sorted(set(map(tuple, monos)), key=_print_key):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (an antichain)."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: RingContext, monomials: Iterable[tuple]):
        self.ring = ring
        gens = minimalize_monomials(monomials)
        for g in gens:
            if len(g) != ring.num_vars or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for {ring.num_vars} variables")
        self.generators = gens

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.ring, self.generators))

    def __contains__(self, mono: tuple) -> bool:
        return any(divides(g, mono) for g in self.generators)

    def is_unit(self) -> bool:
        return self.ring.one() in self.generators

    def pure_power(self, i: int) -> int | None:
        """Least ``a`` with ``x_i^a`` in the ideal, or None."""
        best = None
        for g in self.generators:
            if all(e == 0 for k, e in enumerate(g) if k != i):
                best = g[i] if best is None else min(best, g[i])
        return best

    def contains_power(self, i: int, a: int) -> bool:
        return unit_vector(self.ring.num_vars, i, a) in self

    def is_artinian(self) -> bool:
        return all(self.pure_power(i) is not None for i in range(self.ring.num_vars))

    def standard_monomials_by_degree(self, degree_bound: int | None = None) -> list:
        """Lists of standard monomials in degrees 0, 1, ... (grown by multiplication).

        Artinian ideals are enumerated until a degree is empty; otherwise
        ``degree_bound`` is mandatory.
        """
        artinian = self.is_artinian()
        if not artinian and degree_bound is None:
            raise DegreeBoundRequired("quotient is not Artinian; a degree bound is required")
        n = self.ring.num_vars
        layers: list = []
        current = [] if self.is_unit() else [self.ring.one()]
        d = 0
        while True:
            if not artinian and d > degree_bound:
                break
            if artinian and not current:
                break
            layers.append(sorted(current, key=grlex_key, reverse=True))
            nxt = set()
            for m in current:
                for i in range(n):
                    mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                    if mm not in nxt and mm not in self:
                        nxt.add(mm)
            current = list(nxt)
            d += 1
        return layers

    def hilbert_function(self, degree_bound: int | None = None) -> HilbertFunction:
        layers = self.standard_monomials_by_degree(degree_bound)
        return HilbertFunction(tuple(len(layer) for layer in layers), self.is_artinian())

    def format_generators(self) -> list:
        return [format_monomial(g, self.ring.var_names) or "1" for g in self.generators]

    def to_text(self) -> str:
        return "\n".join([self.ring.header()] + self.format_generators()) + "\n"

    def __str__(self) -> str:
        return "<" + ", ".join(self.format_generators()) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self})"

    def to_ideal(self):
        from .ideal import Ideal
        from .poly import Polynomial

        return Ideal(self.ring, [Polynomial.monomial(self.ring, g) for g in self.generators])
