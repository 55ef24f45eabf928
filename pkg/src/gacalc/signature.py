"""GA(p, q) as a window onto GA(inf, inf).

GA(p, q) is the subalgebra generated by e_i for -q <= i < p, so it is not a
separate algebra here: a :class:`Signature` only answers membership and
enumerates the blades that live in its window.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .blades import Blade, SignedBlade, _blade, blade_product
from .errors import SignatureError, SizeGuardError
from .multivector import Multivector, product

MAX_DIMENSION_EXPONENT = 62
MAX_BASIS_GENERATORS = 20
MAX_TABLE_GENERATORS = 8


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self) -> None:
        for name in ("p", "q"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Read ``"p,q"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"signature must look like 'p,q', got {text!r}")
        try:
            p, q = (int(s.strip()) for s in parts)
        except ValueError:
            raise ValueError(f"signature must look like 'p,q', got {text!r}") from None
        return cls(p, q)

    def __str__(self) -> str:
        return f"GA({self.p},{self.q})"

    @property
    def indices(self) -> range:
        """The generator indices -q, ..., p-1."""
        return range(-self.q, self.p)

    @property
    def generators(self) -> int:
        return self.p + self.q

    def contains_blade(self, blade: Blade) -> bool:
        # blades are sorted, so the ends decide
        return not blade or (blade[0] >= -self.q and blade[-1] < self.p)

    def contains(self, x: Multivector) -> bool:
        return all(self.contains_blade(b) for b in x.terms)

    def require(self, x: Multivector) -> None:
        """Raise :class:`SignatureError` naming the first blade outside the window."""
        for b in x.terms:
            if not self.contains_blade(b):
                raise SignatureError(
                    f"{b} is not in {self}: indices must lie in {-self.q}..{self.p - 1}"
                )

    def dimension(self) -> int:
        if self.generators > MAX_DIMENSION_EXPONENT:
            raise OverflowError(
                f"dimension 2^{self.generators} exceeds 2^{MAX_DIMENSION_EXPONENT}"
            )
        return 1 << self.generators

    def basis(self) -> list[Blade]:
        """All blades of the window, ordered by grade then lexicographically."""
        if self.generators > MAX_BASIS_GENERATORS:
            raise SizeGuardError(
                f"basis of {self} has 2^{self.generators} blades; "
                f"limit is p+q <= {MAX_BASIS_GENERATORS}"
            )
        window = list(self.indices)
        # combinations() of a sorted list yields sorted tuples in lex order
        return [_blade(c) for k in range(len(window) + 1) for c in combinations(window, k)]

    def cayley_table(self) -> list[list[SignedBlade]]:
        if self.generators > MAX_TABLE_GENERATORS:
            raise SizeGuardError(
                f"Cayley table of {self} is too large; limit is p+q <= {MAX_TABLE_GENERATORS}"
            )
        basis = self.basis()
        return [[blade_product(r, c) for c in basis] for r in basis]

    def closure_check(self, x: Multivector, y: Multivector) -> bool:
        """Whether ``x * y`` stays inside the window.  Both factors must already be in it."""
        for name, value in (("x", x), ("y", y)):
            if not self.contains(value):
                raise SignatureError(f"closure_check precondition: {name} is not in {self}")
        return self.contains(product(x, y))
