"""Recursive-descent parser producing a small expression tree.

Grammar::

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' NAT)?
    atom   := NUMBER | BLADE | 'ans' | '(' expr ')'

Products need an explicit ``*``; two atoms side by side are an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from . import lexer as lx
from .blades import Blade
from .errors import ParseError
from .lexer import Token


@dataclass(frozen=True)
class ScalarLit:
    value: float


@dataclass(frozen=True)
class BladeLit:
    blade: Blade


@dataclass(frozen=True)
class Ans:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")


Expr = Union[ScalarLit, BladeLit, Ans, Neg, Add, Sub, Mul, Pow]

_ATOM_START = {"number", "blade", "'ans'", "'('"}
_NAT_DIGITS = set("0123456789")


class _Parser:
    def __init__(self, tokens: Sequence[Token]) -> None:
        self.tokens = list(tokens)
        if not self.tokens or self.tokens[-1].kind != lx.END:
            raise ValueError("token stream must end with an end token")
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != lx.END:
            self.pos += 1
        return tok

    def fail(self, expected) -> ParseError:
        tok = self.tok
        found = "end of input" if tok.kind == lx.END else repr(tok.lexeme)
        return ParseError(f"unexpected {found}", tok.position, expected)

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != lx.END:
            expected = {"'+'", "'-'", "'*'", "end of input"}
            if self.tok.kind in (lx.NUMBER, lx.BLADE, lx.IDENT, lx.LPAREN):
                raise ParseError(
                    "products need an explicit '*'", self.tok.position, expected
                )
            raise self.fail(expected)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind in (lx.PLUS, lx.MINUS):
            op = self.advance()
            rhs = self.term()
            node = Add(node, rhs) if op.kind == lx.PLUS else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.tok.kind == lx.STAR:
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.tok.kind == lx.MINUS:
            self.advance()
            return Neg(self.factor())
        node = self.atom()
        if self.tok.kind == lx.CARET:
            self.advance()
            tok = self.tok
            if tok.kind != lx.NUMBER or not set(tok.lexeme) <= _NAT_DIGITS:
                raise ParseError(
                    "exponent must be a non-negative integer literal",
                    tok.position,
                    {"non-negative integer"},
                )
            self.advance()
            node = Pow(node, int(tok.lexeme))
        return node

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == lx.NUMBER:
            self.advance()
            return ScalarLit(tok.value)
        if tok.kind == lx.BLADE:
            self.advance()
            return BladeLit(tok.value)
        if tok.kind == lx.IDENT:
            if tok.lexeme != "ans":
                raise ParseError(f"unknown name {tok.lexeme!r}", tok.position, _ATOM_START)
            self.advance()
            return Ans()
        if tok.kind == lx.LPAREN:
            self.advance()
            node = self.expr()
            if self.tok.kind != lx.RPAREN:
                raise self.fail({"')'", "'+'", "'-'", "'*'"})
            self.advance()
            return node
        raise self.fail(_ATOM_START | {"'-'"})


def parse(tokens: Sequence[Token] | str) -> Expr:
    """Parse a token stream (or source text, which is lexed first)."""
    if isinstance(tokens, str):
        tokens = lx.lex(tokens)
    return _Parser(tokens).parse()
