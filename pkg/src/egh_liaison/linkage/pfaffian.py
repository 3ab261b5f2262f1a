"""Alternating matrices of forms and their submaximal Pfaffians."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..errors import NotHomogeneousError
from ..polyalg import Ideal, Polynomial, RingContext, monomials_of_degree


@dataclass(frozen=True)
class AlternatingMatrix:
    """Alternating ``size x size`` matrix given by its strictly upper entries."""

    ring: RingContext
    size: int
    upper: tuple  # ((i, j, entry), ...) for i < j

    @classmethod
    def from_rows(cls, ring: RingContext, rows: Sequence[Sequence[Polynomial]]) -> AlternatingMatrix:
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("matrix is not square")
        upper = []
        for i in range(m):
            if rows[i][i]:
                raise ValueError("matrix not alternating: nonzero diagonal entry")
            for j in range(i + 1, m):
                if rows[i][j] + rows[j][i]:
                    raise ValueError(f"matrix not alternating at ({i}, {j})")
                upper.append((i, j, rows[i][j]))
        return cls(ring, m, tuple(upper))

    @classmethod
    def from_upper(cls, ring: RingContext, size: int, entries: Sequence[Polynomial]) -> AlternatingMatrix:
        """Entries listed row by row: (0,1), (0,2), ..., (1,2), ..."""
        pos = [(i, j) for i in range(size) for j in range(i + 1, size)]
        if len(entries) != len(pos):
            raise ValueError(f"need {len(pos)} upper entries, got {len(entries)}")
        return cls(ring, size, tuple((i, j, e) for (i, j), e in zip(pos, entries)))

    def entry(self, i: int, j: int) -> Polynomial:
        if i == j:
            return Polynomial.zero(self.ring)
        lookup = {(a, b): e for a, b, e in self.upper}
        return lookup[i, j] if i < j else -lookup[j, i]

    def rows(self) -> list:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]


def pfaffian(A: AlternatingMatrix, indices: Sequence[int] | None = None) -> Polynomial:
    """Pfaffian of the principal submatrix on ``indices`` by expansion along its first row."""
    idx = tuple(range(A.size)) if indices is None else tuple(indices)
    lookup = {(a, b): e for a, b, e in A.upper}
    ring = A.ring

    def entry(i, j):
        return lookup[i, j] if i < j else -lookup[j, i]

    @lru_cache(maxsize=None)
    def pf(rest: tuple) -> Polynomial:
        if not rest:
            return Polynomial.constant(ring, 1)
        if len(rest) % 2:
            return Polynomial.zero(ring)
        first = rest[0]
        total = Polynomial.zero(ring)
        for k in range(1, len(rest)):
            minor = pf(rest[1:k] + rest[k + 1:])
            if not minor:
                continue
            term = entry(first, rest[k]) * minor
            total = total + term if k % 2 == 1 else total - term
        return total

    return pf(idx)


def submaximal_pfaffians(A: AlternatingMatrix) -> list:
    """Signed Pfaffians of the matrices with row and column ``i`` deleted."""
    out = []
    for i in range(A.size):
        pf = pfaffian(A, [k for k in range(A.size) if k != i])
        out.append(pf if i % 2 == 0 else -pf)
    return out


def pfaffian_ideal(A: AlternatingMatrix) -> Ideal:
    if A.size < 3 or A.size % 2 == 0:
        raise ValueError("need an odd matrix size of at least 3")
    gens = submaximal_pfaffians(A)
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneousError(f"Pfaffian {g} is not homogeneous")
    return Ideal(A.ring, gens)


def random_form(ring: RingContext, d: int, rng: random.Random) -> Polynomial:
    p = ring.characteristic
    return Polynomial(ring, {m: rng.randrange(p) for m in monomials_of_degree(ring.num_vars, d)})


def random_alternating_matrix(ring: RingContext, size: int, rng: random.Random,
                              degree: int = 1) -> AlternatingMatrix:
    count = size * (size - 1) // 2
    return AlternatingMatrix.from_upper(ring, size, [random_form(ring, degree, rng)
                                                     for _ in range(count)])
