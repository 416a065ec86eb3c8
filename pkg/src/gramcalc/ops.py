"""Text-in operations shared by the CLI and the HTTP service.

Both front ends accept the same surface syntax and must agree exactly,
so the parse-then-compute glue lives here once.
"""

from __future__ import annotations

from fractions import Fraction

from .derivative import derive_n, derive_word_pow, monomial_sequence, parse_word
from .grammar import parse_expr, parse_grammar
from .poly import Monomial, Polynomial

__all__ = ["compute_derivative", "compute_sequence"]


def compute_derivative(grammar: str, expr: str, n: int = 1, word: str | None = None) -> Polynomial:
    """Parse and apply D^n, or the word operator iterated n times."""
    mg = parse_grammar(grammar)
    u = parse_expr(expr)
    if word is not None:
        return derive_word_pow(mg, parse_word(word), n, u)
    if len(mg) != 1:
        raise ValueError("a matrix grammar with multiple sub-grammars needs an operator word")
    return derive_n(mg.subgrammars[0], u, n)


def compute_sequence(
    grammar: str, expr: str, n_max: int, word: str | None = None
) -> list[tuple[int, Fraction, Monomial]]:
    """Parse and collect the (n, coefficient, monomial) derivative sequence."""
    mg = parse_grammar(grammar)
    u = parse_expr(expr)
    return monomial_sequence(mg, u, n_max, parse_word(word) if word is not None else None)
