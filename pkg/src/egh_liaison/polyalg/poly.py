"""Sparse polynomials over a prime field."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .ring import (
    DEGREVLEX,
    Exponent,
    MonomialOrder,
    RingContext,
    divides,
    mono_div,
    mono_mul,
    unit_vector,
)


class Polynomial:
    """An element of ``ring`` stored as ``{exponent tuple: coefficient}``.

    Coefficients live in ``0..p-1`` and zero coefficients are never stored.
    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms: Mapping[Exponent, int] | None = None):
        self.ring = ring
        p = ring.characteristic
        clean = {}
        if terms:
            n = ring.num_vars
            for mono, coeff in terms.items():
                c = coeff % p
                if c:
                    mono = tuple(mono)
                    if len(mono) != n:
                        raise ValueError(f"exponent {mono} has wrong length for {n} variables")
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring: RingContext, terms: dict) -> Polynomial:
        # terms already reduced mod p with no zeros
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, ring: RingContext) -> Polynomial:
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring: RingContext, c: int) -> Polynomial:
        return cls(ring, {ring.one(): c})

    @classmethod
    def variable(cls, ring: RingContext, i: int) -> Polynomial:
        return cls._raw(ring, {unit_vector(ring.num_vars, i): 1})

    @classmethod
    def monomial(cls, ring: RingContext, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        return cls(ring, {tuple(exps): coeff})

    @classmethod
    def variables(cls, ring: RingContext) -> list:
        return [cls.variable(ring, i) for i in range(ring.num_vars)]

    # -- basic queries --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.ring.one()}

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    @property
    def homogeneous_degree(self) -> int | None:
        degrees = {sum(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def homogeneous_components(self) -> dict:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._raw(self.ring, t) for d, t in sorted(parts.items())}

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key_function())

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> int:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        if not self.terms:
            return self
        inv = pow(self.leading_coefficient(order), -1, self.ring.characteristic)
        return self.scale(inv)

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list:
        key = order.key_function()
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials belong to different rings")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        p = self.ring.characteristic
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        p = self.ring.characteristic
        return Polynomial._raw(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def scale(self, c: int) -> Polynomial:
        p = self.ring.characteristic
        c %= p
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {m: v * c % p for m, v in self.terms.items()})

    def mul_monomial(self, mono: Exponent, c: int = 1) -> Polynomial:
        p = self.ring.characteristic
        c %= p
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(
            self.ring, {mono_mul(m, mono): v * c % p for m, v in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        p = self.ring.characteristic
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, divisor: Polynomial, order: MonomialOrder = DEGREVLEX):
        """Single-divisor multivariate division: returns (quotient, remainder)."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.ring.characteristic
        key = order.key_function()
        lm = divisor.leading_monomial(order)
        inv = pow(divisor.terms[lm], -1, p)
        rest = dict(self.terms)
        quot: dict = {}
        rem: dict = {}
        while rest:
            m = max(rest, key=key)
            c = rest.pop(m)
            if not divides(lm, m):
                rem[m] = c
                continue
            q = mono_div(m, lm)
            qc = c * inv % p
            quot[q] = qc
            for dm, dc in divisor.terms.items():
                if dm == lm:
                    continue
                mm = mono_mul(dm, q)
                v = (rest.get(mm, 0) - qc * dc) % p
                if v:
                    rest[mm] = v
                else:
                    rest.pop(mm, None)
        return Polynomial._raw(self.ring, quot), Polynomial._raw(self.ring, rem)

    def exact_divide(self, divisor: Polynomial) -> Polynomial:
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def compose(self, images: Sequence[Polynomial], target: RingContext) -> Polynomial:
        """Substitute ``images[i]`` for the i-th variable; result lives in ``target``."""
        if len(images) != self.ring.num_vars:
            raise ValueError("need one image per variable")
        powers: dict = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[i, k] = images[i] ** k
            return powers[i, k]

        result = Polynomial.zero(target)
        for m, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, k in enumerate(m):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def embed(self, target: RingContext, positions: Sequence[int]) -> Polynomial:
        """Re-index variables: variable i of ``self.ring`` becomes variable ``positions[i]``."""
        n = target.num_vars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                e[positions[i]] = k
            out[tuple(e)] = c
        return Polynomial._raw(target, out)

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def format_monomial(mono: Exponent, names: Sequence[str]) -> str:
    factors = []
    for name, k in zip(names, mono):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    return "*".join(factors)


def format_polynomial(f: Polynomial) -> str:
    """Canonical form: descending degrevlex, coefficients in 0..p-1."""
    if not f.terms:
        return "0"
    parts = []
    for mono, c in f.sorted_terms(DEGREVLEX):
        m = format_monomial(mono, f.ring.var_names)
        if not m:
            parts.append(str(c))
        elif c == 1:
            parts.append(m)
        else:
            parts.append(f"{c}*{m}")
    return " + ".join(parts)


def linear_form(ring: RingContext, coeffs: Iterable[int]) -> Polynomial:
    coeffs = list(coeffs)
    return Polynomial(ring, {unit_vector(ring.num_vars, i): c for i, c in enumerate(coeffs)})
