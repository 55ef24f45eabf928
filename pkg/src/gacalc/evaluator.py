"""Evaluate expression trees to multivectors."""

from __future__ import annotations

from typing import Iterator, Optional

from .errors import EvaluationError
from .multivector import Multivector, blade, format_multivector, power, scalar
from .parser import Add, Ans, BladeLit, Expr, Mul, Neg, Pow, ScalarLit, Sub, parse
from .signature import Signature
from .words import MAX_WORD_LENGTH, reduce_word


def evaluate(node: Expr, ans: Optional[Multivector] = None) -> Multivector:
    if isinstance(node, ScalarLit):
        return scalar(node.value)
    if isinstance(node, BladeLit):
        return blade(node.blade)
    if isinstance(node, Ans):
        if ans is None:
            raise EvaluationError("'ans' has no value yet")
        return ans
    if isinstance(node, Neg):
        return -evaluate(node.operand, ans)
    if isinstance(node, Add):
        return evaluate(node.left, ans) + evaluate(node.right, ans)
    if isinstance(node, Sub):
        return evaluate(node.left, ans) - evaluate(node.right, ans)
    if isinstance(node, Mul):
        return evaluate(node.left, ans) * evaluate(node.right, ans)
    if isinstance(node, Pow):
        return power(evaluate(node.base, ans), node.exponent)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str, ans: Optional[Multivector] = None) -> Multivector:
    return evaluate(parse(text), ans)


def blade_literals(node: Expr) -> Iterator[BladeLit]:
    if isinstance(node, BladeLit):
        yield node
    elif isinstance(node, Neg):
        yield from blade_literals(node.operand)
    elif isinstance(node, (Add, Sub, Mul)):
        yield from blade_literals(node.left)
        yield from blade_literals(node.right)
    elif isinstance(node, Pow):
        yield from blade_literals(node.base)


def check_signature(node: Expr, value: Multivector, sig: Signature) -> None:
    """Fail unless every blade literal and the final value lie in *sig*."""
    for lit in blade_literals(node):
        if not sig.contains_blade(lit.blade):
            raise EvaluationError(
                f"blade literal {lit.blade} is not in {sig}: "
                f"indices must lie in {-sig.q}..{sig.p - 1}"
            )
    if not sig.contains(value):
        raise EvaluationError(f"result {format_multivector(value)} is not in {sig}")


def generator_word(node: Expr) -> Optional[list[int]]:
    """The generator word of a pure product of blade literals, else None.

    Each literal E_I contributes its indices in increasing order, and
    ``x^n`` repeats the word of ``x`` n times.
    """
    if isinstance(node, BladeLit):
        return list(node.blade)
    if isinstance(node, Mul):
        left = generator_word(node.left)
        right = generator_word(node.right)
        if left is None or right is None:
            return None
        return left + right
    if isinstance(node, Pow):
        base = generator_word(node.base)
        if base is None or len(base) * node.exponent > MAX_WORD_LENGTH:
            return None
        return base * node.exponent
    return None


def check_oracle(node: Expr, value: Multivector) -> bool:
    """Cross-check *value* against the word reducer.

    Returns False when the expression is not a pure blade product (or is too
    long a word), True when it was checked; raises on disagreement.
    """
    word = generator_word(node)
    if word is None or len(word) > MAX_WORD_LENGTH:
        return False
    sign, b = reduce_word(word)
    expected = blade(b, sign)
    if value != expected:
        raise EvaluationError(
            f"oracle mismatch: product gives {format_multivector(value)}, "
            f"word reduction gives {format_multivector(expected)}"
        )
    return True
