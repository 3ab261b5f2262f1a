"""Ring contexts, exponent-vector helpers and monomial orders."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Sequence

DEFAULT_PRIME = 32003

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Exponent = tuple  # tuple[int, ...]; one entry per ring variable


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingContext:
    """The graded ring F_p[x_1, ..., x_n] with named variables."""

    num_vars: int
    var_names: tuple[str, ...] = ()
    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a ring needs at least one variable")
        names = tuple(self.var_names) or tuple(f"x{i + 1}" for i in range(self.num_vars))
        object.__setattr__(self, "var_names", names)
        if len(names) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} variable names, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if not is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not prime")

    @property
    def n(self) -> int:
        return self.num_vars

    @property
    def p(self) -> int:
        return self.characteristic

    def index(self, name: str) -> int:
        return self.var_names.index(name)

    def with_tag(self, name: str = "t") -> RingContext:
        """Ring with one extra variable placed first (for elimination)."""
        while name in self.var_names:
            name = "_" + name
        return RingContext(self.num_vars + 1, (name,) + self.var_names, self.characteristic)

    def without(self, index: int) -> RingContext:
        names = self.var_names[:index] + self.var_names[index + 1:]
        return RingContext(self.num_vars - 1, names, self.characteristic)

    def one(self) -> Exponent:
        return (0,) * self.num_vars

    def header(self) -> str:
        return f"ring {self.num_vars} {self.characteristic} " + " ".join(self.var_names)


# -- exponent vectors ---------------------------------------------------------

def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def unit_vector(n: int, i: int, power: int = 1) -> Exponent:
    return tuple(power if k == i else 0 for k in range(n))


def monomials_of_degree(n: int, d: int):
    """All exponent vectors of total degree d in n variables, lex-descending."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


# -- monomial orders ----------------------------------------------------------

def degrevlex_key(e: Exponent) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e))


def lex_key(e: Exponent) -> tuple:
    return tuple(e)


def grlex_key(e: Exponent) -> tuple:
    return (sum(e),) + tuple(e)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; larger key means larger monomial.

    ``block > 0`` gives the elimination order that compares the first
    ``block`` variables by degrevlex first and breaks ties by degrevlex on
    the remaining variables.
    """

    name: str
    block: int = 0

    def key_function(self) -> Callable[[Exponent], tuple]:
        if self.name == "degrevlex":
            return degrevlex_key
        if self.name == "lex":
            return lex_key
        if self.name == "grlex":
            return grlex_key
        if self.name == "block":
            k = self.block

            def key(e):
                return degrevlex_key(e[:k]) + degrevlex_key(e[k:])

            return key
        raise ValueError(f"unknown monomial order {self.name!r}")

    def key(self, e: Exponent) -> tuple:
        return self.key_function()(e)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


def order_from_tag(tag: str | MonomialOrder) -> MonomialOrder:
    if isinstance(tag, MonomialOrder):
        return tag
    return {"degrevlex": DEGREVLEX, "grevlex": DEGREVLEX, "lex": LEX, "grlex": GRLEX}[tag]


def sort_monomials(monos: Sequence[Exponent], order: MonomialOrder = DEGREVLEX,
                   descending: bool = True) -> list:
    return sorted(monos, key=order.key_function(), reverse=descending)
