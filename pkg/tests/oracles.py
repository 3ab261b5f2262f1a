"""Independent reference computations used only by the tests.

Everything here works degree by degree with dense linear algebra over F_p
and never touches the Gröbner engine, so agreement with the package is a
real cross-check.  ``sympy_reduced_basis`` wraps sympy's own Buchberger
implementation as a second opinion on reduced bases.
"""

from __future__ import annotations

import itertools


def monomials(n, d):
    """Exponent tuples of degree d (any fixed order works here)."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


class Echelon:
    """Row-echelon basis of a subspace of F_p^N, with reduction of new vectors."""

    def __init__(self, p):
        self.p = p
        self.rows = {}  # pivot column -> row (pivot entry 1)

    def reduce(self, v):
        v = list(v)
        p = self.p
        for col, row in self.rows.items():
            c = v[col]
            if c:
                for k, r in enumerate(row):
                    if r:
                        v[k] = (v[k] - c * r) % p
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        piv = next((k for k, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = pow(v[piv], -1, self.p)
        v = [c * inv % self.p for c in v]
        for col, row in self.rows.items():
            c = row[piv]
            if c:
                self.rows[col] = [(a - c * b) % self.p for a, b in zip(row, v)]
        self.rows[piv] = v
        return True

    @property
    def rank(self):
        return len(self.rows)


def _mul(f, m):
    return {tuple(a + b for a, b in zip(e, m)): c for e, c in f.items()}


def _vector(f, index, p):
    v = [0] * len(index)
    for e, c in f.items():
        v[index[e]] = (v[index[e]] + c) % p
    return v


def degree_piece(gens, n, d, p):
    """Echelon basis of I_d for I generated by ``gens`` (dicts exponent -> coeff)."""
    basis = monomials(n, d)
    index = {m: i for i, m in enumerate(basis)}
    ech = Echelon(p)
    for g in gens:
        dg = sum(next(iter(g)))
        if dg > d:
            continue
        for m in monomials(n, d - dg):
            ech.add(_vector(_mul(g, m), index, p))
    return ech, index


def hilbert_values(gens, n, top, p):
    """H(S/I, t) for t = 0..top."""
    out = []
    for d in range(top + 1):
        ech, index = degree_piece(gens, n, d, p)
        out.append(len(index) - ech.rank)
    return out


def colon_hilbert_values(gens, divisors, n, top, p):
    """H(S/(I : <divisors>), t) for t = 0..top.

    ``(I : K)_d`` is the kernel of ``h -> (h*k mod I)_k``; the quotient has
    dimension equal to the rank of that map.
    """
    out = []
    for d in range(top + 1):
        pieces = []
        for k in divisors:
            dk = sum(next(iter(k)))
            pieces.append((k, degree_piece(gens, n, d + dk, p)))
        ech = Echelon(p)
        for m in monomials(n, d):
            row = []
            for k, (piece, index) in pieces:
                row += piece.reduce(_vector(_mul(k, m), index, p))
            ech.add(row)
        out.append(ech.rank)
    return out


def intersection_dims(gens_a, gens_b, n, top, p):
    """dim_k (I ∩ J)_d = dim I_d + dim J_d - dim (I + J)_d, for d = 0..top."""
    out = []
    for d in range(top + 1):
        a, _ = degree_piece(gens_a, n, d, p)
        b, _ = degree_piece(gens_b, n, d, p)
        s, _ = degree_piece(list(gens_a) + list(gens_b), n, d, p)
        out.append(a.rank + b.rank - s.rank)
    return out


def in_ideal(f, gens, n, p):
    """Membership of a homogeneous f by linear algebra in its degree."""
    if not f:
        return True
    d = sum(next(iter(f)))
    ech, index = degree_piece(gens, n, d, p)
    return not any(ech.reduce(_vector(f, index, p)))


def brute_standard_counts(monos, n, top):
    """Count monomials of each degree <= top divisible by none of ``monos``."""
    out = []
    for d in range(top + 1):
        out.append(sum(1 for m in monomials(n, d)
                       if not any(all(a >= b for a, b in zip(m, g)) for g in monos)))
    return out


def sympy_reduced_basis(polys, n, p):
    """Reduced degrevlex basis via sympy, as sets of {exponent: coeff mod p}."""
    import sympy

    xs = sympy.symbols(f"x1:{n + 1}")
    exprs = []
    for f in polys:
        exprs.append(sum(c * sympy.prod([x ** k for x, k in zip(xs, e)]) for e, c in f.items()))
    G = sympy.groebner(exprs, *xs, modulus=p, order="grevlex")
    out = []
    for g in G.exprs:
        P = sympy.Poly(g, *xs, modulus=p)
        terms = {e: int(c) % p for e, c in P.terms()}
        lead_c = terms[max(terms, key=lambda e: (sum(e), tuple(-x for x in reversed(e))))]
        inv = pow(lead_c, -1, p)
        out.append({e: c * inv % p for e, c in terms.items() if c})
    return out
