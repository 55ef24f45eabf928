"""Exception hierarchy shared by the kernel and the calculator."""

from __future__ import annotations

from typing import Iterable


class GAError(Exception):
    """Base class for every error raised by gacalc."""


class BladeError(GAError, ValueError):
    """A blade was given non-canonical or malformed indices."""


class SizeGuardError(GAError, ValueError):
    """A signature is too large for the requested enumeration."""


class SignatureError(GAError, ValueError):
    """A multivector lies outside the GA(p, q) window it was checked against."""


class EvaluationError(GAError):
    """Raised while evaluating a parsed expression."""


class SourceError(GAError):
    """An error tied to a byte offset in calculator input."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self) -> str:
        return f"{self.message} at offset {self.offset}"


class LexError(SourceError):
    pass


class ParseError(SourceError):
    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()) -> None:
        super().__init__(message, offset)
        self.expected = frozenset(expected)

    def __str__(self) -> str:
        text = super().__str__()
        if self.expected:
            text += f" (expected one of: {', '.join(sorted(self.expected))})"
        return text
