"""Parser for cobordism-class expressions.

Grammar:
    expr   := term (('+' | '-') term)*
    term   := [rat '*'] factor ('*' factor)* | rat
    factor := ('CP' | 'P') int ['^' int]
    rat    := int ['/' int]

'CPk' and 'Pk' denote the same generator (the class of the k-dimensional
projective space), so the parser round-trips the engine's canonical output.
Syntax errors carry a 1-based column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError
from .rationals import Q
from .ring import GradedPoly, GradedRing

__all__ = ["ParseError", "parse_class", "parse_poly", "ClassExpr"]


class ParseError(DomainError):
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"syntax error at column {column}: {message}")


_TOKEN = re.compile(r"\s*(?:(\d+)|(CP|P)(?=\d)|(\^)|(\*)|(/)|(\+)|(-)|(.))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    value: str
    column: int


def _tokenize(text: str) -> list[_Tok]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        column = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(_Tok("int", m.group(1), column))
        elif m.group(2):
            tokens.append(_Tok("gen", m.group(2), column))
        elif m.group(3):
            tokens.append(_Tok("^", "^", column))
        elif m.group(4):
            tokens.append(_Tok("*", "*", column))
        elif m.group(5):
            tokens.append(_Tok("/", "/", column))
        elif m.group(6):
            tokens.append(_Tok("+", "+", column))
        elif m.group(7):
            tokens.append(_Tok("-", "-", column))
        else:
            raise ParseError(f"unexpected character {m.group(8)!r}", column)
        pos = m.end()
    return tokens


@dataclass(frozen=True)
class ClassExpr:
    """Sum of (coefficient, ((generator index, exponent), ...)) terms."""

    terms: tuple

    def to_poly(self, ring: GradedRing) -> GradedPoly:
        out = ring.zero()
        for coeff, factors in self.terms:
            exps = [0] * ring.nvars
            for index, power in factors:
                if index > ring.nvars:
                    raise DomainError(
                        f"generator P{index} is beyond the configured cap {ring.cap}"
                    )
                exps[index - 1] += power
            out = out + ring.monomial(tuple(exps), coeff)
        return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.end_column = len(text) + 1

    def peek(self) -> _Tok | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str | None = None) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end_column)
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.value!r}", tok.column)
        self.pos += 1
        return tok

    def parse(self) -> ClassExpr:
        terms = []
        sign = 1
        tok = self.peek()
        if tok is not None and tok.kind in "+-":
            self.take()
            sign = -1 if tok.kind == "-" else 1
        terms.append(self.term(sign))
        while (tok := self.peek()) is not None:
            if tok.kind not in "+-":
                raise ParseError(f"expected '+' or '-', found {tok.value!r}", tok.column)
            self.take()
            terms.append(self.term(-1 if tok.kind == "-" else 1))
        return ClassExpr(terms=tuple(terms))

    def term(self, sign: int):
        coeff = Q(sign)
        factors = []
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end_column)
        if tok.kind == "int":
            coeff = coeff * self.rational()
            tok = self.peek()
            if tok is None or tok.kind != "*":
                return (coeff, ())
            self.take("*")
        factors.append(self.factor())
        while (tok := self.peek()) is not None and tok.kind == "*":
            self.take("*")
            factors.append(self.factor())
        return (coeff, tuple(factors))

    def rational(self) -> Q:
        num = int(self.take("int").value)
        if (tok := self.peek()) is not None and tok.kind == "/":
            self.take("/")
            den_tok = self.take("int")
            den = int(den_tok.value)
            if den == 0:
                raise ParseError("zero denominator", den_tok.column)
            return Q(num, den)
        return Q(num)

    def factor(self):
        tok = self.take()
        if tok.kind != "gen":
            raise ParseError(f"expected a generator, found {tok.value!r}", tok.column)
        idx_tok = self.take("int")
        index = int(idx_tok.value)
        if index < 1:
            raise ParseError("generator indices start at 1", idx_tok.column)
        power = 1
        if (t := self.peek()) is not None and t.kind == "^":
            self.take("^")
            power = int(self.take("int").value)
            if power < 1:
                raise ParseError("exponents must be positive", idx_tok.column)
        return (index, power)


def parse_class(text: str) -> ClassExpr:
    return _Parser(text).parse()


def parse_poly(ring: GradedRing, text: str) -> GradedPoly:
    """Parse straight into a ring element."""
    return parse_class(text).to_poly(ring)
