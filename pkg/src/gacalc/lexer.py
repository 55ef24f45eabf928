"""Tokenizer for the calculator language."""

from __future__ import annotations

import re
from typing import NamedTuple, Optional

from .blades import Blade
from .errors import LexError

NUMBER = "number"
BLADE = "blade"
PLUS = "plus"
MINUS = "minus"
STAR = "star"
CARET = "caret"
LPAREN = "lparen"
RPAREN = "rparen"
IDENT = "identifier"
END = "end"

_PUNCT = {"+": PLUS, "-": MINUS, "*": STAR, "^": CARET, "(": LPAREN, ")": RPAREN}

_NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_INT_RE = re.compile(r"-?\d+")
_SPACE = " \t\r\n\f\v"


class Token(NamedTuple):
    kind: str
    lexeme: str
    position: int
    value: object = None

    def __repr__(self) -> str:
        return f"Token({self.kind}, {self.lexeme!r}, {self.position})"


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def lex(text: str) -> list[Token]:
    """Split *text* into tokens, always ending with an ``end`` token.

    Positions are byte offsets into the UTF-8 encoding of *text*.  A blade
    literal ``e[...]`` is a single token whose value is the sorted blade;
    repeated indices are rejected here.
    """
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in _SPACE:
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, _byte_offset(text, i)))
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            m = _NUMBER_RE.match(text, i)
            assert m is not None
            tokens.append(Token(NUMBER, m.group(), _byte_offset(text, i), float(m.group())))
            i = m.end()
            continue
        if ch == "e" and _next_non_space(text, i + 1) == "[":
            tok, i = _lex_blade(text, i)
            tokens.append(tok)
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(Token(IDENT, m.group(), _byte_offset(text, i), m.group()))
            i = m.end()
            continue
        raise LexError(f"unexpected character {ch!r}", _byte_offset(text, i))
    tokens.append(Token(END, "", _byte_offset(text, n)))
    return tokens


def _next_non_space(text: str, i: int) -> Optional[str]:
    while i < len(text) and text[i] in _SPACE:
        i += 1
    return text[i] if i < len(text) else None


def _lex_blade(text: str, start: int) -> tuple[Token, int]:
    i = text.index("[", start) + 1
    indices: list[int] = []
    seen: set[int] = set()
    expect_index = True
    while True:
        while i < len(text) and text[i] in _SPACE:
            i += 1
        if i >= len(text):
            raise LexError("unterminated blade literal", _byte_offset(text, start))
        ch = text[i]
        if ch == "]" and (not indices or not expect_index):
            i += 1
            break
        if expect_index:
            m = _INT_RE.match(text, i)
            if not m:
                raise LexError(f"expected integer in blade literal, found {ch!r}",
                               _byte_offset(text, i))
            value = int(m.group())
            if value in seen:
                raise LexError(f"duplicate index {value} in blade literal",
                               _byte_offset(text, i))
            seen.add(value)
            indices.append(value)
            i = m.end()
            expect_index = False
        elif ch == ",":
            i += 1
            expect_index = True
        else:
            raise LexError(f"expected ',' or ']' in blade literal, found {ch!r}",
                           _byte_offset(text, i))
    lexeme = "".join(c for c in text[start:i] if c not in _SPACE)
    return Token(BLADE, lexeme, _byte_offset(text, start), Blade(sorted(indices))), i
