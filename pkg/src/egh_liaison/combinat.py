"""Multicomplexes, type chains and the monomial witness construction.

Monomials are exponent tuples throughout.  Enumeration is in graded-lex
order so every output is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAchievableError
from .polyalg.monomial import HilbertFunction, MonomialIdeal
from .polyalg.ring import RingContext, grlex_key, lex_key, monomials_of_degree, unit_vector

__all__ = [
    "CIType", "Multicomplex", "MonomialIdeal", "TypeChain", "ci_hilbert", "gamma",
    "k_lift", "k_lift_hilbert_prediction", "lex_plus_powers", "liaison_hf", "predicted_chain_hf",
    "tilde_gamma_chain", "validate_multicomplex", "witness_ideal",
]


@dataclass(frozen=True, order=True)
class CIType:
    """Degree type of a complete intersection, stored weakly increasing."""

    degrees: tuple

    def __post_init__(self):
        degs = tuple(sorted(int(a) for a in self.degrees))
        if not degs:
            raise ValueError("a CI type needs at least one degree")
        if degs[0] < 1:
            raise ValueError(f"CI degrees must be positive: {degs}")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def parse(cls, text: str) -> CIType:
        return cls(tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",")))

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def dominates(self, other: CIType) -> bool:
        """Componentwise ``self >= other``."""
        return len(self) == len(other) and all(a >= b for a, b in zip(self, other))

    @property
    def socle_degree(self) -> int:
        return sum(self.degrees) - len(self.degrees)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.degrees)) + ")"


@dataclass(frozen=True)
class TypeChain:
    """Types ``a(1) >= a(2) >= ... >= a(s+1)``; the last is the terminal CI's type."""

    types: tuple

    def __post_init__(self):
        types = tuple(t if isinstance(t, CIType) else CIType(tuple(t)) for t in self.types)
        if not types:
            raise ValueError("a type chain needs at least one type")
        r = len(types[0])
        if any(len(t) != r for t in types):
            raise ValueError("all types in a chain must have the same length")
        for i, (a, b) in enumerate(zip(types, types[1:])):
            if not a.dominates(b):
                raise ValueError(f"chain is not nonincreasing at position {i + 1}: {a} < {b}")
        object.__setattr__(self, "types", types)

    @classmethod
    def parse(cls, text: str) -> TypeChain:
        """Parse ``"3,3;2,2;1,1"``."""
        parts = [p for p in text.split(";") if p.strip()]
        try:
            return cls(tuple(CIType.parse(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"bad type chain {text!r}: {exc}") from None

    @property
    def length(self) -> int:
        return len(self.types[0])

    def __len__(self) -> int:
        return len(self.types)

    def __str__(self) -> str:
        return ";".join(",".join(map(str, t)) for t in self.types)


@dataclass(frozen=True)
class Multicomplex:
    ring: RingContext
    monomials: frozenset

    def by_degree(self) -> dict:
        out: dict = {}
        for m in self.monomials:
            out.setdefault(sum(m), []).append(m)
        return {d: sorted(ms, key=grlex_key) for d, ms in sorted(out.items())}

    def hilbert_function(self) -> HilbertFunction:
        if not self.monomials:
            return HilbertFunction(())
        top = max(sum(m) for m in self.monomials)
        counts = [0] * (top + 1)
        for m in self.monomials:
            counts[sum(m)] += 1
        return HilbertFunction(tuple(counts))

    def __len__(self) -> int:
        return len(self.monomials)

    def __contains__(self, m) -> bool:
        return tuple(m) in self.monomials

    def sorted(self) -> list:
        return sorted(self.monomials, key=grlex_key)


def validate_multicomplex(monomials: Iterable[tuple]):
    """``(True, None)`` if closed under divisibility, else ``(False, (m, divisor))``."""
    mset = {tuple(m) for m in monomials}
    for m in sorted(mset, key=grlex_key):
        for i, e in enumerate(m):
            if e:
                d = m[:i] + (e - 1,) + m[i + 1:]
                if d not in mset:
                    return False, (m, d)
    return True, None


def _box(exps: Sequence[int]) -> frozenset:
    return frozenset(itertools.product(*(range(e + 1) for e in exps)))


def gamma(a: CIType | Sequence[int], ring: RingContext) -> Multicomplex:
    """All divisors of ``x^(a - 1)``.

    A plain sequence is used in the order given, so ``gamma((3, 2))`` is the
    divisor set of ``x1^2*x2``; a :class:`CIType` is already sorted.
    """
    a = tuple(a)
    if any(x < 1 for x in a):
        raise ValueError(f"exponents must be positive: {a}")
    if len(a) != ring.num_vars:
        raise ValueError(f"type {a} has length {len(a)}, ring has {ring.num_vars} variables")
    return Multicomplex(ring, _box([x - 1 for x in a]))


def tilde_gamma_chain(chain: TypeChain, ring: RingContext) -> list:
    """The sets Γ̃_1, ..., Γ̃_{s+1}, built from the terminal type backwards.

    Γ̃_{s+1} is the full divisor set of the terminal type; each earlier
    Γ̃_i keeps those divisors ``q`` of ``m_i = x^(a(i) - 1)`` whose
    complement ``m_i / q`` is not in Γ̃_{i+1}.
    """
    if not isinstance(chain, TypeChain):
        chain = TypeChain(tuple(chain))
    types = chain.types
    result = [gamma(types[-1], ring)]
    for a in reversed(types[:-1]):
        top = tuple(x - 1 for x in a)
        nxt = result[0].monomials
        kept = frozenset(q for q in _box(top)
                         if tuple(t - e for t, e in zip(top, q)) not in nxt)
        result.insert(0, Multicomplex(ring, kept))
    for i, mc in enumerate(result, start=1):
        ok, witness = validate_multicomplex(mc.monomials)
        if not ok:
            raise AssertionError(f"tilde-Gamma_{i} is not a multicomplex: {witness}")
    return result


def _complement_generators(ring: RingContext, standard: frozenset) -> list:
    """Minimal monomials outside a finite multicomplex."""
    n = ring.num_vars
    if not standard:
        return [ring.one()]
    cands = set()
    for q in standard:
        for i in range(n):
            m = q[:i] + (q[i] + 1,) + q[i + 1:]
            if m not in standard:
                cands.add(m)
    gens = []
    for m in cands:
        if all(m[:i] + (m[i] - 1,) + m[i + 1:] in standard for i in range(n) if m[i]):
            gens.append(m)
    return gens


def witness_ideal(chain: TypeChain, ring: RingContext) -> MonomialIdeal:
    """Monomial ideal whose standard monomials are exactly Γ̃_1."""
    first = tilde_gamma_chain(chain, ring)[0]
    return MonomialIdeal(ring, _complement_generators(ring, first.monomials))


def ci_hilbert(a: CIType | Sequence[int], n: int | None = None) -> HilbertFunction:
    """Hilbert function of ``S / <x_1^a_1, ..., x_n^a_n>``."""
    a = a if isinstance(a, CIType) else CIType(tuple(a))
    if n is not None and len(a) != n:
        raise ValueError(f"type {a} does not have length {n}")
    coeffs = [1]
    for ai in a:
        out = [0] * (len(coeffs) + ai - 1)
        for i, c in enumerate(coeffs):
            for j in range(ai):
                out[i + j] += c
        coeffs = out
    return HilbertFunction(tuple(coeffs))


def liaison_hf(hf_J: HilbertFunction, hf_I: HilbertFunction) -> HilbertFunction:
    """Hilbert function of ``S/(J:I)`` from those of ``S/J`` (Gorenstein) and ``S/I``.

    ``t -> H(S/J, t) - H(S/I, s - t)`` for ``0 <= t <= s`` where ``s`` is the
    socle degree of ``S/J``.
    """
    if not hf_J.artinian or not hf_J.is_symmetric():
        raise ValueError(f"link Hilbert function {hf_J} must be Artinian and symmetric")
    s = hf_J.top_socle_degree
    if not hf_I.artinian:
        hf_I = HilbertFunction(hf_I.values)
    if any(hf_I(t) > hf_J(t) for t in range(max(len(hf_I), len(hf_J)))):
        raise ValueError(f"{hf_I} is not bounded by {hf_J}")
    out = []
    for t in range(s + 1):
        v = hf_J(t) - hf_I(s - t)
        if v < 0:
            raise ValueError(f"negative value at degree {t}: {hf_J} and {hf_I} "
                             "do not come from an inclusion")
        out.append(v)
    return HilbertFunction(tuple(out))


def predicted_chain_hf(chain: TypeChain) -> HilbertFunction:
    """Iterate :func:`liaison_hf` from the terminal CI up to the first link."""
    types = chain.types
    hf = ci_hilbert(types[-1])
    for a in reversed(types[:-1]):
        hf = liaison_hf(ci_hilbert(a), hf)
    return hf


def lex_plus_powers(e: CIType | Sequence[int], target: HilbertFunction,
                    ring: RingContext) -> MonomialIdeal:
    """Lex-plus-powers ideal containing ``x_i^e_i`` with Hilbert function ``target``.

    Degree by degree, the ideal takes every multiple of a power and then the
    lex-largest remaining monomials until the quotient has the target
    dimension.  The result is checked to be closed under multiplication.
    """
    e = e if isinstance(e, CIType) else CIType(tuple(e))
    n = ring.num_vars
    if len(e) > n:
        raise ValueError(f"{len(e)} powers do not fit in {n} variables")
    if target(0) != 1:
        raise NotAchievableError("target must start with H(0) = 1")
    powers = [unit_vector(n, i, ei) for i, ei in enumerate(e)]
    top = len(target.values) if target.artinian else len(target.values) - 1

    prev: set = set()
    gens: list = []
    for d in range(top + 1):
        monos = list(monomials_of_degree(n, d))
        layer = {m for m in monos if any(all(x >= y for x, y in zip(m, pw)) for pw in powers)}
        want = len(monos) - target(d)
        if want < 0:
            raise NotAchievableError(
                f"H({d}) = {target(d)} exceeds dim S_{d} = {len(monos)}")
        if len(layer) > want:
            raise NotAchievableError(
                f"degree {d}: the powers alone leave only {len(monos) - len(layer)} "
                f"standard monomials, target is {target(d)}")
        rest = sorted((m for m in monos if m not in layer), key=lex_key, reverse=True)
        layer.update(rest[:want - len(layer)])
        for m in prev:
            for i in range(n):
                up = m[:i] + (m[i] + 1,) + m[i + 1:]
                if up not in layer:
                    raise NotAchievableError(
                        f"degree {d}: lex fill is not closed under multiplication")
        for m in layer:
            if not any(m[i] and (m[:i] + (m[i] - 1,) + m[i + 1:]) in prev for i in range(n)):
                gens.append(m)
        prev = layer
    return MonomialIdeal(ring, gens)


def k_lift(layers: Sequence[MonomialIdeal], ring_n: RingContext) -> MonomialIdeal:
    """Ideal of ``ring_n`` generated by ``m * x_n^j`` for generators ``m`` of layer ``j``."""
    if not layers:
        raise ValueError("need at least one layer")
    base = layers[0].ring
    if base.num_vars + 1 != ring_n.num_vars:
        raise ValueError("layers must live in a ring with one variable fewer")
    gens = []
    for j, M in enumerate(layers):
        if M.ring != base:
            raise ValueError(f"layer {j} lives in a different ring")
        gens.extend(m + (j,) for m in M.generators)
    return MonomialIdeal(ring_n, gens)


def k_lift_hilbert_prediction(layers: Sequence[MonomialIdeal], degree_bound: int) -> tuple:
    """``sum_j H(S'/M_min(j,N), t - j)`` for ``t <= degree_bound``.

    Equals the Hilbert function of the lift when the layers increase.
    """
    N = len(layers) - 1
    hfs = [M.hilbert_function(degree_bound) for M in layers]
    out = []
    for t in range(degree_bound + 1):
        out.append(sum(hfs[min(j, N)](t - j) for j in range(t + 1)))
    return tuple(out)
