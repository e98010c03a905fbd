"""Recursive-descent parser for polynomial expressions with rational literals.

Grammar (whitespace is insignificant, juxtaposition multiplies)::

    expression  := [sign] term (('+' | '-') term)*
    term        := factor ('*'? factor)*
    factor      := coefficient
                 | variable ('^' uint)?
                 | '(' expression ')' ('^' uint)?
    coefficient := int ('/' uint)?

The optional leading sign lets inputs such as ``-y + x^3`` be written the
way they are usually printed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from .poly2 import Poly2

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op" or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(Token("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError("unexpected character", start, ch)
            tokens.append(Token("op", ch, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text.rstrip())))
    return tokens


class _Parser:
    def __init__(self, text: str, var_names: tuple[str, str]):
        if var_names[0] == var_names[1]:
            raise ValueError("variable names must differ")
        self.tokens = tokenize(text)
        self.i = 0
        self.variables = {
            var_names[0]: Poly2.first(),
            var_names[1]: Poly2.second(),
        }

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, ch: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == ch

    def expect_op(self, ch: str) -> Token:
        if not self.at_op(ch):
            raise ParseError(f"expected {ch!r}", self.tok.pos, self.tok.text)
        return self.advance()

    def parse(self) -> Poly2:
        result = self.expression()
        if self.tok.kind != "end":
            raise ParseError("unexpected token", self.tok.pos, self.tok.text)
        return result

    def expression(self) -> Poly2:
        negate = False
        if self.at_op("+") or self.at_op("-"):
            negate = self.advance().text == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while self.at_op("+") or self.at_op("-"):
            op = self.advance().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def starts_factor(self) -> bool:
        return self.tok.kind in ("int", "ident") or self.at_op("(")

    def term(self) -> Poly2:
        acc = self.factor()
        while True:
            if self.at_op("*"):
                self.advance()
                acc = acc * self.factor()
            elif self.starts_factor():
                acc = acc * self.factor()
            else:
                return acc

    def exponent(self) -> int:
        if self.at_op("^"):
            self.advance()
            if self.tok.kind != "int":
                raise ParseError("expected unsigned integer exponent", self.tok.pos, self.tok.text)
            return int(self.advance().text)
        return 1

    def factor(self) -> Poly2:
        t = self.tok
        if t.kind == "int":
            self.advance()
            value = Fraction(int(t.text))
            if self.at_op("/"):
                self.advance()
                den = self.tok
                if den.kind != "int":
                    raise ParseError("expected unsigned integer denominator", den.pos, den.text)
                self.advance()
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos, den.text)
                value /= int(den.text)
            return Poly2.constant(value)
        if t.kind == "ident":
            self.advance()
            if t.text not in self.variables:
                names = ", ".join(self.variables)
                raise ParseError(f"unknown identifier {t.text!r} (expected one of {names})", t.pos, t.text)
            return self.variables[t.text] ** self.exponent()
        if self.at_op("("):
            self.advance()
            inner = self.expression()
            self.expect_op(")")
            return inner ** self.exponent()
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError("unexpected token", t.pos, t.text)


def parse_polynomial(text: str, var_names: tuple[str, str] = ("x", "y")) -> Poly2:
    """Parse ``text`` into an exact polynomial in the two named variables."""
    return _Parser(text, tuple(var_names)).parse()
