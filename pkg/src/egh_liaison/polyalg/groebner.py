"""Buchberger's algorithm over F_p.

Works directly on ``{exponent: coefficient}`` dicts for speed; the public
entry points accept and return :class:`Polynomial` objects.  Pairs are
pruned with the Gebauer-Moeller criteria and selected by sugar degree, then
by the order of their lcm, then by index, so the run is deterministic for a
fixed input list.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from ..errors import ResourceLimitError
from .poly import Polynomial
from .ring import DEGREVLEX, MonomialOrder, RingContext, mono_lcm


@dataclass(frozen=True)
class GroebnerLimits:
    max_degree: int = 40
    max_basis: int = 5000


DEFAULT_LIMITS = GroebnerLimits()


class _KeyCache(dict):
    def __init__(self, key):
        super().__init__()
        self.key = key

    def __missing__(self, mono):
        value = self[mono] = self.key(mono)
        return value


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _normal_form(f: dict, reducers: list, getkey, p: int) -> dict:
    """Fully reduce ``f`` by monic ``reducers`` given as ``(lm, terms)`` pairs."""
    f = dict(f)
    rem = {}
    while f:
        m = max(f, key=getkey)
        c = f.pop(m)
        for lg, g in reducers:
            if _divides(lg, m):
                q = tuple(a - b for a, b in zip(m, lg))
                for gm, gc in g.items():
                    if gm == lg:
                        continue
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = (f.get(mm, 0) - c * gc) % p
                    if v:
                        f[mm] = v
                    else:
                        f.pop(mm, None)
                break
        else:
            rem[m] = c
    return rem


def _monic(f: dict, lm, p: int) -> dict:
    inv = pow(f[lm], -1, p)
    if inv == 1:
        return f
    return {m: c * inv % p for m, c in f.items()}


def _spoly(g1: dict, l1, g2: dict, l2, lcm, p: int) -> dict:
    q1 = tuple(a - b for a, b in zip(lcm, l1))
    q2 = tuple(a - b for a, b in zip(lcm, l2))
    out: dict = {}
    for m, c in g1.items():
        if m != l1:
            mm = tuple(a + b for a, b in zip(m, q1))
            out[mm] = (out.get(mm, 0) + c) % p
    for m, c in g2.items():
        if m != l2:
            mm = tuple(a + b for a, b in zip(m, q2))
            out[mm] = (out.get(mm, 0) - c) % p
    return {m: c for m, c in out.items() if c}


def _canonical_lm(terms: dict, getkey):
    return max(terms, key=getkey)


class _Buchberger:
    def __init__(self, p: int, order: MonomialOrder, limits: GroebnerLimits):
        self.p = p
        self.kc = _KeyCache(order.key_function())
        self.getkey = self.kc.__getitem__
        self.limits = limits
        self.G: list = []
        self.LM: list = []
        self.sugar: list = []
        self.active: list = []
        self.live: set = set()
        self.heap: list = []

    def reducers(self) -> list:
        return [(self.LM[i], self.G[i]) for i in self.active]

    def add(self, h: dict, sugar: int) -> None:
        lh = _canonical_lm(h, self.getkey)
        h = _monic(h, lh, self.p)
        lh = _canonical_lm(h, self.getkey)
        k = len(self.G)
        if k >= self.limits.max_basis:
            raise ResourceLimitError(
                f"Groebner basis exceeded {self.limits.max_basis} elements")
        self.G.append(h)
        self.LM.append(lh)
        self.sugar.append(sugar)
        LM = self.LM

        # Gebauer-Moeller: new pairs
        cands = [(i, mono_lcm(LM[i], lh)) for i in self.active]
        kept = []  # (i, lcm, coprime)
        for idx, (i, L) in enumerate(cands):
            coprime = all(a == 0 or b == 0 for a, b in zip(LM[i], lh))
            if coprime:
                kept.append((i, L, True))
                continue
            redundant = any(_divides(L2, L) for _, L2 in cands[idx + 1:]) or \
                any(_divides(L2, L) for _, L2, _ in kept)
            if not redundant:
                kept.append((i, L, False))

        # Gebauer-Moeller: prune old pairs
        for pair in list(self.live):
            i, j = pair
            Lij = mono_lcm(LM[i], LM[j])
            if _divides(lh, Lij) and mono_lcm(LM[i], lh) != Lij and mono_lcm(LM[j], lh) != Lij:
                self.live.discard(pair)

        for i, L, coprime in kept:
            if coprime:
                continue
            dL = sum(L)
            s = max(self.sugar[i] + dL - sum(LM[i]), sugar + dL - sum(lh))
            self.live.add((i, k))
            heapq.heappush(self.heap, (s, self.kc[L], i, k))

        self.active = [i for i in self.active if not _divides(lh, LM[i])] + [k]

    def run(self, inputs: list) -> list:
        p = self.p
        for f in sorted(inputs, key=lambda t: (max(sum(m) for m in t),
                                               self.getkey(max(t, key=self.getkey)))):
            h = _normal_form(f, self.reducers(), self.getkey, p)
            if h:
                self.add(h, max(sum(m) for m in f))
        while self.heap:
            s, _, i, j = heapq.heappop(self.heap)
            if (i, j) not in self.live:
                continue
            self.live.discard((i, j))
            L = mono_lcm(self.LM[i], self.LM[j])
            if sum(L) > self.limits.max_degree:
                raise ResourceLimitError(
                    f"S-pair degree {sum(L)} exceeds guard {self.limits.max_degree}")
            sp = _spoly(self.G[i], self.LM[i], self.G[j], self.LM[j], L, p)
            h = _normal_form(sp, self.reducers(), self.getkey, p)
            if h:
                self.add(h, s)
        return self.interreduce()

    def interreduce(self) -> list:
        p = self.p
        basis = []
        for i in self.active:
            others = [(self.LM[j], self.G[j]) for j in self.active if j != i]
            lm = self.LM[i]
            tail = {m: c for m, c in self.G[i].items() if m != lm}
            red = _normal_form(tail, others, self.getkey, p)
            red[lm] = 1
            basis.append((lm, red))
        basis.sort(key=lambda t: self.getkey(t[0]))
        return [terms for _, terms in basis]


def groebner_basis(polys: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX,
                   limits: GroebnerLimits = DEFAULT_LIMITS,
                   ring: RingContext | None = None) -> list:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    The result is monic, sorted by ascending leading monomial, and empty for
    the zero ideal.  ``ring`` is only needed when ``polys`` is empty.
    """
    inputs = [f.terms for f in polys if f]
    if ring is None:
        if not polys:
            return []
        ring = polys[0].ring
    if any(f.ring != ring for f in polys):
        raise ValueError("polynomials belong to different rings")
    if not inputs:
        return []
    engine = _Buchberger(ring.characteristic, order, limits)
    return [Polynomial._raw(ring, t) for t in engine.run(inputs)]


def normal_form(f: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of ``f`` on full reduction by ``basis`` (need not be monic)."""
    p = f.ring.characteristic
    kc = _KeyCache(order.key_function())
    reducers = []
    for g in basis:
        if not g:
            continue
        lm = _canonical_lm(g.terms, kc.__getitem__)
        terms = _monic(g.terms, lm, p)
        reducers.append((_canonical_lm(terms, kc.__getitem__), terms))
    return Polynomial._raw(f.ring, _normal_form(f.terms, reducers, kc.__getitem__, p))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    p = f.ring.characteristic
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    fm, gm = f.monic(order), g.monic(order)
    return Polynomial._raw(f.ring, _spoly(fm.terms, lf, gm.terms, lg, mono_lcm(lf, lg), p))
