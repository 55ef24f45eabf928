"""Basis blades E_I and their sign function.

A blade is identified by a finite set of integer indices, stored as a
strictly increasing tuple.  Non-negative indices square to +1, negative
indices square to -1, so every GA(p, q) is a window of the same index line.

The product of two blades is ``sigma(I, J) * E[I ^ J]``: the symmetric
difference gives the resulting blade and ``sigma`` gives its sign from two
counts, ``alpha`` (cross inversions) and ``beta`` (shared negative indices).
"""

from __future__ import annotations

from typing import Iterable, Literal, NamedTuple

from .errors import BladeError

Sign = Literal[1, -1]


class Blade(tuple):
    """Canonical basis blade: a strictly increasing tuple of integers.

    ``Blade()`` is the unit blade ``e[]``.  Construction validates order and
    rejects duplicates; use :meth:`from_indices` to sort arbitrary input.
    """

    __slots__ = ()

    def __new__(cls, indices: Iterable[int] = ()) -> "Blade":
        items = tuple(indices)
        for idx in items:
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise BladeError(f"blade index must be an integer, got {idx!r}")
        for a, b in zip(items, items[1:]):
            if a >= b:
                if a == b:
                    raise BladeError(f"duplicate index {a} in blade")
                raise BladeError(f"blade indices must be strictly increasing, got {items}")
        return tuple.__new__(cls, items)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Blade":
        """Sort *indices* into a blade; duplicates are still an error."""
        return cls(sorted(indices))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def grade(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Blade({list(self)!r})"

    def __str__(self) -> str:
        return "e[" + ",".join(str(i) for i in self) + "]"


def _blade(items) -> Blade:
    # trusted constructor for internally produced canonical tuples
    return tuple.__new__(Blade, items)


UNIT = _blade(())


class SignedBlade(NamedTuple):
    sign: Sign
    blade: Blade

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + str(self.blade)


def alpha(I: Blade, J: Blade) -> int:
    """Number of pairs (i, j), i in I, j in J, with j < i.

    Single merge pass: every element of J is counted against the elements of
    I that are strictly greater than it.
    """
    count = 0
    n = len(I)
    k = 0  # I[:k] are the elements of I that are <= current j
    for j in J:
        while k < n and I[k] <= j:
            k += 1
        count += n - k
    return count


def beta(I: Blade, J: Blade) -> int:
    """Number of negative indices common to I and J."""
    count = 0
    a = b = 0
    while a < len(I) and b < len(J):
        i, j = I[a], J[b]
        if i >= 0 or j >= 0:
            break
        if i == j:
            count += 1
            a += 1
            b += 1
        elif i < j:
            a += 1
        else:
            b += 1
    return count


def sigma(I: Blade, J: Blade) -> Sign:
    return -1 if (alpha(I, J) + beta(I, J)) & 1 else 1


def sym_diff(I: Blade, J: Blade) -> Blade:
    out = []
    a = b = 0
    while a < len(I) and b < len(J):
        i, j = I[a], J[b]
        if i == j:
            a += 1
            b += 1
        elif i < j:
            out.append(i)
            a += 1
        else:
            out.append(j)
            b += 1
    out.extend(I[a:])
    out.extend(J[b:])
    return _blade(out)


def intersect(I: Blade, J: Blade) -> Blade:
    out = []
    a = b = 0
    while a < len(I) and b < len(J):
        i, j = I[a], J[b]
        if i == j:
            out.append(i)
            a += 1
            b += 1
        elif i < j:
            a += 1
        else:
            b += 1
    return _blade(out)


def blade_product(I: Blade, J: Blade) -> SignedBlade:
    """E_I * E_J as a signed blade."""
    return SignedBlade(sigma(I, J), sym_diff(I, J))


def parse_blade(text: str) -> Blade:
    """Read the ``e[i1,i2,...]`` text form.  Indices must be strictly increasing."""
    s = text.strip()
    if not (s.startswith("e[") and s.endswith("]")):
        raise BladeError(f"not a blade literal: {text!r}")
    body = s[2:-1].strip()
    if not body:
        return UNIT
    try:
        items = [int(part) for part in body.split(",")]
    except ValueError:
        raise BladeError(f"not a blade literal: {text!r}") from None
    return Blade(items)
