"""Sparse multivectors: finite real combinations of basis blades.

Terms are kept in a dict ``Blade -> float`` with zero coefficients pruned,
so two multivectors are equal exactly when their term dicts are equal.
"""

from __future__ import annotations

import math
from numbers import Real
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from .blades import Blade, _blade, blade_product

Scalar = Union[int, float]

# products with at least this many term pairs go through the vectorised path
DENSE_PRODUCT_THRESHOLD = 256
# the bitmask path needs every index to fit in one uint64 word
_MAX_MASK_SPAN = 63


def _is_scalar(value) -> bool:
    return isinstance(value, Real) and not isinstance(value, bool)


class Multivector:
    """An element of GA(inf, inf).

    Instances are immutable.  Arithmetic operators are the vector-space
    operations plus the geometric product (``*``); plain numbers are
    promoted to scalar multivectors.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Blade, Scalar] | None = None) -> None:
        clean: dict[Blade, float] = {}
        if terms:
            for blade, coeff in terms.items():
                if not isinstance(blade, Blade):
                    blade = Blade(blade)
                c = float(coeff)
                if c != 0.0:
                    clean[blade] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Blade, float]) -> "Multivector":
        # terms already canonical and zero-free
        mv = object.__new__(cls)
        mv._terms = terms
        mv._hash = None
        return mv

    @property
    def terms(self) -> Mapping[Blade, float]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[tuple[Blade, float]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, blade: Iterable[int]) -> float:
        if not isinstance(blade, Blade):
            blade = Blade(blade)
        return self._terms.get(blade, 0.0)

    def grades(self) -> list[int]:
        return sorted({b.grade for b in self._terms})

    def sorted_terms(self) -> list[tuple[Blade, float]]:
        """Terms in canonical order: by grade, then lexicographically."""
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            other = scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # scalars compare equal to plain numbers, so hash like them too
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and () in self._terms:
                self._hash = hash(self._terms[()])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if _is_scalar(other):
            other = scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return sub(self, other)

    def __rsub__(self, other):
        if _is_scalar(other):
            return sub(scalar(other), self)
        return NotImplemented

    def __neg__(self) -> "Multivector":
        return neg(self)

    def __pos__(self) -> "Multivector":
        return self

    def __mul__(self, other):
        if _is_scalar(other):
            return scale(other, self)
        if not isinstance(other, Multivector):
            return NotImplemented
        return product(self, other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, n: int) -> "Multivector":
        return power(self, n)

    def __repr__(self) -> str:
        return f"Multivector({format_multivector(self)!r})"

    def __str__(self) -> str:
        return format_multivector(self)


def zero() -> Multivector:
    return Multivector._trusted({})


def one() -> Multivector:
    return Multivector._trusted({_blade(()): 1.0})


def scalar(value: Scalar) -> Multivector:
    return Multivector({_blade(()): value})


def basis_vector(i: int) -> Multivector:
    """The generator e_i."""
    return Multivector._trusted({Blade((i,)): 1.0})


def blade(indices: Iterable[int], coefficient: Scalar = 1.0) -> Multivector:
    """``coefficient * E_I`` for a strictly increasing index sequence."""
    return Multivector({Blade(indices): coefficient})


def from_terms(pairs: Iterable[tuple[Iterable[int], Scalar]]) -> Multivector:
    """Build a multivector from (blade, coefficient) pairs, summing repeats."""
    acc: dict[Blade, float] = {}
    for b, c in pairs:
        if not isinstance(b, Blade):
            b = Blade(b)
        acc[b] = acc.get(b, 0.0) + float(c)
    return Multivector._trusted(_pruned(acc))


def _pruned(acc: dict[Blade, float]) -> dict[Blade, float]:
    return {b: c for b, c in acc.items() if c != 0.0}


def add(x: Multivector, y: Multivector) -> Multivector:
    acc = dict(x._terms)
    for b, c in y._terms.items():
        acc[b] = acc.get(b, 0.0) + c
    return Multivector._trusted(_pruned(acc))


def neg(x: Multivector) -> Multivector:
    # 0.0 never appears, so -c cannot produce a negative zero
    return Multivector._trusted({b: -c for b, c in x._terms.items()})


def sub(x: Multivector, y: Multivector) -> Multivector:
    acc = dict(x._terms)
    for b, c in y._terms.items():
        acc[b] = acc.get(b, 0.0) - c
    return Multivector._trusted(_pruned(acc))


def scale(factor: Scalar, x: Multivector) -> Multivector:
    f = float(factor)
    return Multivector._trusted(_pruned({b: f * c for b, c in x._terms.items()}))


def product(x: Multivector, y: Multivector) -> Multivector:
    """Geometric product, bilinear extension of the blade product."""
    if len(x._terms) * len(y._terms) >= DENSE_PRODUCT_THRESHOLD:
        result = _product_bitmask(x, y)
        if result is not None:
            return result
    return _product_reference(x, y)


def _product_reference(x: Multivector, y: Multivector) -> Multivector:
    acc: dict[Blade, float] = {}
    for I, a in x._terms.items():
        for J, b in y._terms.items():
            s, K = blade_product(I, J)
            acc[K] = acc.get(K, 0.0) + (a * b if s > 0 else -(a * b))
    return Multivector._trusted(_pruned(acc))


def _product_bitmask(x: Multivector, y: Multivector) -> Multivector | None:
    """Vectorised product for dense operands.

    Indices are shifted to bit positions ``i - lo`` which preserves their
    order, so the cross-inversion count of a pair of masks is
    ``sum_k [bit k of A] * popcount(B & low_bits(k))``.  Returns None when the
    index span does not fit in a machine word.
    """
    if not x._terms or not y._terms:
        return zero()
    used = {i for b in x._terms for i in b} | {i for b in y._terms for i in b}
    if not used:
        lo, span = 0, 0
    else:
        lo = min(used)
        span = max(used) - lo + 1
        if span > _MAX_MASK_SPAN:
            return None

    def encode(mv: Multivector):
        masks = np.fromiter(
            (sum(1 << (i - lo) for i in b) for b in mv._terms),
            dtype=np.uint64,
            count=len(mv._terms),
        )
        coeffs = np.fromiter(mv._terms.values(), dtype=np.float64, count=len(mv._terms))
        return masks, coeffs

    a_masks, a_coeffs = encode(x)
    b_masks, b_coeffs = encode(y)
    A = a_masks[:, None]
    B = b_masks[None, :]

    parity = np.zeros((len(a_masks), len(b_masks)), dtype=np.uint8)
    one_bit = np.uint64(1)
    for k in range(1, span):
        has_k = ((A >> np.uint64(k)) & one_bit).astype(np.uint8)
        below = np.bitwise_count(B & np.uint64((1 << k) - 1)) & 1
        parity ^= has_k & below
    if lo < 0:
        neg_mask = np.uint64((1 << min(-lo, span)) - 1)
        parity ^= np.bitwise_count(A & B & neg_mask) & 1

    signs = 1.0 - 2.0 * parity
    values = (a_coeffs[:, None] * b_coeffs[None, :] * signs).ravel()
    results = (A ^ B).ravel()
    uniq, inverse = np.unique(results, return_inverse=True)
    sums = np.bincount(inverse, weights=values, minlength=len(uniq))

    terms: dict[Blade, float] = {}
    for mask, c in zip(uniq.tolist(), sums.tolist()):
        if c != 0.0:
            terms[_decode_mask(mask, lo)] = c
    return Multivector._trusted(terms)


def _decode_mask(mask: int, lo: int) -> Blade:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k + lo)
        mask >>= 1
        k += 1
    return _blade(out)


def power(x: Multivector, n: int) -> Multivector:
    """``x`` multiplied by itself ``n`` times; ``x**0`` is one."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"exponent must be a non-negative integer, got {n!r}")
    result = one()
    base = x
    while n:
        if n & 1:
            result = product(result, base)
        n >>= 1
        if n:
            base = product(base, base)
    return result


def grade_project(x: Multivector, k: int) -> Multivector:
    return Multivector._trusted({b: c for b, c in x._terms.items() if len(b) == k})


def equals(x: Multivector, y: Multivector) -> bool:
    return x._terms == y._terms


def format_number(value: float) -> str:
    """Shortest text that reads back to the same float; integers without '.0'."""
    if value == 0.0:
        return "0"
    if math.isfinite(value) and value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_multivector(x: Multivector) -> str:
    """Canonical text, e.g. ``1 + 2*e[0] - e[-1,0]``; zero is ``0``."""
    parts: list[str] = []
    for b, c in x.sorted_terms():
        negative = c < 0
        mag = -c if negative else c
        if not b:
            body = format_number(mag)
        elif mag == 1.0:
            body = str(b)
        else:
            body = f"{format_number(mag)}*{b}"
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts) if parts else "0"
