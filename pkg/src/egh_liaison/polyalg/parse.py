"""Polynomial and ideal-file parsing.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Division is only allowed by a constant invertible mod p.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from ..errors import ParseError
from .poly import Polynomial
from .ring import RingContext

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class Token(NamedTuple):
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(Token("op", ch, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingContext):
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, op: str) -> None:
        t = self.tok
        if t.kind != "op" or t.text != op:
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {op!r}, found {found}", t.pos)
        self.advance()

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise ParseError("empty polynomial", self.tok.pos)
        result = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected token {self.tok.text!r}", self.tok.pos)
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op_tok = self.advance()
            rhs = self.factor()
            if op_tok.text == "*":
                result = result * rhs
            else:
                result = result * self._inverse(rhs, op_tok.pos)
        return result

    def _inverse(self, f: Polynomial, pos: int) -> Polynomial:
        if not f.is_constant():
            raise ParseError("division by a non-constant", pos)
        c = f.terms.get(self.ring.one(), 0)
        if c == 0:
            raise ParseError(
                f"coefficient not invertible mod {self.ring.characteristic}", pos)
        return Polynomial.constant(self.ring, pow(c, -1, self.ring.characteristic))

    def factor(self) -> Polynomial:
        if self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            inner = self.factor()
            return inner if op == "+" else -inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "int":
                raise ParseError("exponent must be a non-negative integer", t.pos)
            self.advance()
            return base ** int(t.text)
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Polynomial.constant(self.ring, int(t.text))
        if t.kind == "name":
            self.advance()
            try:
                idx = self.ring.index(t.text)
            except ValueError:
                raise ParseError(f"unknown variable {t.text!r}", t.pos) from None
            return Polynomial.variable(self.ring, idx)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {found}", t.pos)


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse ``text`` into an exact polynomial of ``ring``.

    >>> from egh_liaison.polyalg.ring import RingContext
    >>> str(parse_polynomial("x1^2 - 3*x2*x3", RingContext(3)))
    'x1^2 + 32000*x2*x3'
    """
    return _Parser(text, ring).parse()


class IdealText(NamedTuple):
    ring: RingContext
    generators: list


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_ideal_text(text: str) -> IdealText:
    """Parse the ideal file format: a ``ring`` header then one generator per line."""
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if ring is None:
            fields = line.split()
            if fields[0] != "ring" or len(fields) < 3:
                raise ParseError("expected header 'ring <n> <p> <names...>'", line=lineno)
            try:
                n, p = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("ring header needs integer n and p", line=lineno) from None
            names = tuple(fields[3:])
            if names and len(names) != n:
                raise ParseError(f"header declares {n} variables but names {len(names)}",
                                 line=lineno)
            try:
                ring = RingContext(n, names, p)
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
            continue
        try:
            gens.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ParseError(exc.message, exc.position, lineno) from None
    if ring is None:
        raise ParseError("missing ring header")
    return IdealText(ring, gens)
