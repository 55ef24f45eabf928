"""Brute-force normal forms for words in the generators.

A word such as ``[3, 1, 3]`` stands for e_3 e_1 e_3.  It is reduced with
the generator relations alone: swapping two adjacent distinct letters flips
the sign, and an adjacent equal pair ``i, i`` is deleted with factor +1
(``i >= 0``) or -1 (``i < 0``).  Nothing here uses the sign function of
:mod:`gacalc.blades`, which is what makes it usable as an oracle for it.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .blades import Blade, SignedBlade, _blade
from .multivector import Multivector, basis_vector, one, product

MAX_WORD_LENGTH = 64


class Reduction(NamedTuple):
    sign: int
    blade: Blade
    swaps: int
    negative_squares: int

    @property
    def sign_changes(self) -> int:
        return self.swaps + self.negative_squares

    def signed_blade(self) -> SignedBlade:
        return SignedBlade(self.sign, self.blade)


def bubble_reduce(word: Sequence[int]) -> Reduction:
    """Rightmost-inversion bubble sort, cancelling equal neighbours eagerly."""
    w = list(word)
    swaps = negatives = 0
    while True:
        k = 0
        while k < len(w) - 1:
            if w[k] == w[k + 1]:
                if w[k] < 0:
                    negatives += 1
                del w[k : k + 2]
                k = max(k - 1, 0)
            else:
                k += 1
        for k in range(len(w) - 2, -1, -1):
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                swaps += 1
                break
        else:
            break
    sign = -1 if (swaps + negatives) & 1 else 1
    return Reduction(sign, _blade(w), swaps, negatives)


def insertion_reduce(word: Sequence[int]) -> Reduction:
    """Append letters one at a time, sliding each left into place."""
    out: list[int] = []
    swaps = negatives = 0
    for letter in word:
        k = len(out)
        while k > 0 and out[k - 1] > letter:
            k -= 1
        swaps += len(out) - k
        if k > 0 and out[k - 1] == letter:
            if letter < 0:
                negatives += 1
            del out[k - 1]
        else:
            out.insert(k, letter)
    sign = -1 if (swaps + negatives) & 1 else 1
    return Reduction(sign, _blade(out), swaps, negatives)


def reduce_word(word: Sequence[int]) -> SignedBlade:
    """Normal form of a generator word as ``(sign, blade)``."""
    if len(word) > MAX_WORD_LENGTH:
        raise ValueError(f"word has {len(word)} letters; limit is {MAX_WORD_LENGTH}")
    for letter in word:
        if not isinstance(letter, int) or isinstance(letter, bool):
            raise TypeError(f"word letters must be integers, got {letter!r}")
    return bubble_reduce(word).signed_blade()


def word_to_multivector(word: Sequence[int]) -> Multivector:
    """Left-to-right geometric product of the generators in *word*."""
    result = one()
    for letter in word:
        result = product(result, basis_vector(letter))
    return result
