"""Recursive-descent parser for the expression DSL.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' ['-'] integer)? | '-' factor
    atom   := integer | 'i' | ident | '(' expr ')'

A rational constant such as ``3/4`` is read as the division ``3 / 4``, which
folds to the same constant. Exponents must be nonzero integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .errors import ParseError, UnknownIdentifier
from .nodes import IMAG, Expr, add, const, mul, neg, power, var
from .variables import DSL_IDENTIFIERS, VARIABLES

OPERATORS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    position: int


def tokenize(source: str) -> List[Token]:
    """Split ``source`` into positioned tokens, ending with an ``end`` token."""
    tokens: List[Token] = []
    index = 0
    length = len(source)
    while index < length:
        c = source[index]
        if c.isspace():
            index += 1
            continue
        if c.isdigit():
            start = index
            while index < length and source[index].isdigit():
                index += 1
            tokens.append(Token("int", source[start:index], start))
            continue
        if c.isalpha() or c == "_":
            start = index
            while index < length and (source[index].isalnum() or source[index] == "_"):
                index += 1
            tokens.append(Token("name", source[start:index], start))
            continue
        if c in OPERATORS:
            tokens.append(Token("op", c, index))
            index += 1
            continue
        raise ParseError(f"unexpected character {c!r}", index, source)
    tokens.append(Token("end", "", length))
    return tokens


class _Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, op: str) -> Optional[Token]:
        token = self.peek()
        if token.kind == "op" and token.text == op:
            return self.advance()
        return None

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, token.position, self.source)

    def parse(self) -> Expr:
        result = self.expr()
        token = self.peek()
        if token.kind != "end":
            raise self.error(f"unexpected {token.text!r}")
        return result

    def expr(self) -> Expr:
        terms = [self.term()]
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                terms.append(neg(self.term()))
            else:
                return add(*terms)

    def term(self) -> Expr:
        result = self.factor()
        while True:
            if self.accept("*"):
                result = mul(result, self.factor())
            elif self.accept("/"):
                token = self.peek()
                divisor = self.factor()
                if divisor.is_zero():
                    raise self.error("division by zero", token)
                result = mul(result, power(divisor, -1))
            else:
                return result

    def factor(self) -> Expr:
        if self.accept("-"):
            return neg(self.factor())
        base = self.atom()
        caret = self.accept("^")
        if caret is None:
            return base
        sign = -1 if self.accept("-") else 1
        token = self.advance()
        if token.kind != "int":
            raise self.error("exponent must be an integer", token)
        exponent = sign * int(token.text)
        if exponent == 0:
            raise self.error("zero exponent", token)
        if base.is_zero() and exponent < 0:
            raise self.error("division by zero", caret)
        return power(base, exponent)

    def atom(self) -> Expr:
        token = self.advance()
        if token.kind == "int":
            return const(int(token.text))
        if token.kind == "name":
            if token.text == "i":
                return IMAG
            if token.text not in DSL_IDENTIFIERS:
                raise UnknownIdentifier(
                    f"unknown identifier {token.text!r}", token.position, self.source
                )
            return var(VARIABLES[token.text])
        if token.kind == "op" and token.text == "(":
            inner = self.expr()
            if self.accept(")") is None:
                raise self.error("expected ')'")
            return inner
        if token.kind == "end":
            raise self.error("unexpected end of input", token)
        raise self.error(f"unexpected {token.text!r}", token)


def parse_expr(text: str) -> Expr:
    """Parse DSL ``text`` into a normalized expression."""
    return _Parser(text).parse()


__all__ = ["Token", "parse_expr", "tokenize"]
