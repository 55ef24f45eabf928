"""Exact geometric algebra on integer-indexed basis blades.

Every GA(p, q) lives inside one ambient algebra GA(inf, inf): generator
e_i squares to +1 for i >= 0 and to -1 for i < 0.
"""

from .blades import (
    Blade,
    SignedBlade,
    alpha,
    beta,
    blade_product,
    intersect,
    parse_blade,
    sigma,
    sym_diff,
)
from .errors import (
    BladeError,
    EvaluationError,
    GAError,
    LexError,
    ParseError,
    SignatureError,
    SizeGuardError,
)
from .evaluator import evaluate, evaluate_text
from .lexer import Token, lex
from .multivector import (
    Multivector,
    add,
    basis_vector,
    blade,
    equals,
    format_multivector,
    from_terms,
    grade_project,
    neg,
    one,
    power,
    product,
    scalar,
    scale,
    sub,
    zero,
)
from .parser import parse
from .signature import Signature
from .words import reduce_word, word_to_multivector

__all__ = [
    "Blade", "SignedBlade", "alpha", "beta", "blade_product", "intersect",
    "parse_blade", "sigma", "sym_diff",
    "BladeError", "EvaluationError", "GAError", "LexError", "ParseError",
    "SignatureError", "SizeGuardError",
    "evaluate", "evaluate_text", "Token", "lex", "parse",
    "Multivector", "add", "basis_vector", "blade", "equals", "format_multivector",
    "from_terms", "grade_project", "neg", "one", "power", "product", "scalar",
    "scale", "sub", "zero",
    "Signature", "reduce_word", "word_to_multivector",
]
