"""The formal derivative operator induced by grammar substitution rules.

A grammar assigns each of some letters a polynomial body; the operator D
replaces letters by their bodies the way differentiation replaces x by 1:
it is linear, satisfies the product rule, and sends letters without a
production to zero.  Everything reduces to one monomial-wise rule: for a
term c * x1^e1 ... xk^ek the derivative is

    c * sum_j  e_j * x_j^(e_j - 1) * D(x_j) * prod_{i != j} x_i^e_i

with D(x_j) the production body, or 0 for constants.  The rule covers
negative exponents too, which keeps the whole Laurent ring closed under D.

A matrix grammar carries one operator D_i per sub-grammar; operator words
compose them rightmost-first, so the word (1, 2) means D_1 after D_2.
"""

from __future__ import annotations

from fractions import Fraction

from .grammar import Grammar, MatrixGrammar
from .poly import Monomial, Polynomial

__all__ = [
    "NonMonomialSequenceError",
    "OperatorWord",
    "derive",
    "derive_indexed",
    "derive_n",
    "derive_word",
    "derive_word_pow",
    "monomial_sequence",
    "parse_word",
    "word_text",
]

OperatorWord = tuple[int, ...]

_F0 = Fraction(0)


def parse_word(text: str) -> OperatorWord:
    """Parse operator-word notation: "12" means (1, 2), as does "1,2".

    The compact digit form covers up to nine sub-grammars; larger
    indices need the comma form.  Indices are 1-based, so 0 is invalid.
    """
    text = text.strip()
    if not text:
        raise ValueError("operator word must be nonempty")
    if "," in text:
        parts = [part.strip() for part in text.split(",")]
        if not all(part.isascii() and part.isdigit() for part in parts):
            raise ValueError(f"invalid operator word {text!r}")
        word = tuple(int(part) for part in parts)
    else:
        if not (text.isascii() and text.isdigit()):
            raise ValueError(f"invalid operator word {text!r}")
        word = tuple(int(ch) for ch in text)
    if any(i < 1 for i in word):
        raise ValueError(f"invalid operator word {text!r}: indices are 1-based")
    return word


def word_text(word: OperatorWord) -> str:
    """Render a word in the most compact notation parse_word accepts."""
    if word and all(1 <= i <= 9 for i in word):
        return "".join(str(i) for i in word)
    return ",".join(str(i) for i in word)


class NonMonomialSequenceError(ValueError):
    """A derivative in a requested sequence had more than one term (or none)."""

    def __init__(self, n: int):
        super().__init__(f"not a monomial sequence at n={n}")
        self.n = n


def derive(g: Grammar, u: Polynomial) -> Polynomial:
    """Apply the derivative operator of `g` to `u` once."""
    productions = g.productions
    acc: dict[Monomial, Fraction] = {}
    for mono, coeff in u.terms.items():
        for var, exp in mono.exps:
            body = productions.get(var)
            if body is None:
                continue  # constant letter: contributes nothing
            scale = coeff * exp
            rest = mono.with_exponent(var, exp - 1)
            for body_mono, body_coeff in body.terms.items():
                key = rest.mul(body_mono)
                total = acc.get(key, _F0) + scale * body_coeff
                if total:
                    acc[key] = total
                else:
                    del acc[key]
    return Polynomial(acc)


def derive_n(g: Grammar, u: Polynomial, n: int) -> Polynomial:
    """Apply the operator n times; n=0 returns `u` unchanged."""
    if n < 0:
        raise ValueError(f"derivative order must be >= 0, got {n}")
    for _ in range(n):
        u = derive(g, u)
    return u


def derive_indexed(mg: MatrixGrammar, i: int, u: Polynomial) -> Polynomial:
    """The operator D_i of the i-th sub-grammar (1-based)."""
    return derive(mg.subgrammar(i), u)


def _check_word(mg: MatrixGrammar, word: OperatorWord) -> tuple[int, ...]:
    word = tuple(word)
    if not word:
        raise ValueError("operator word must be nonempty")
    for i in word:
        mg.subgrammar(i)  # raises IndexError when out of range
    return word


def derive_word(mg: MatrixGrammar, word: OperatorWord, u: Polynomial) -> Polynomial:
    """Composite operator for an index word, rightmost index applied first."""
    word = _check_word(mg, word)
    for i in reversed(word):
        u = derive_indexed(mg, i, u)
    return u


def derive_word_pow(mg: MatrixGrammar, word: OperatorWord, n: int, u: Polynomial) -> Polynomial:
    """Apply the composite word operator n times; n=0 returns `u`."""
    word = _check_word(mg, word)
    if n < 0:
        raise ValueError(f"derivative order must be >= 0, got {n}")
    for _ in range(n):
        for i in reversed(word):
            u = derive_indexed(mg, i, u)
    return u


def monomial_sequence(
    mg: MatrixGrammar | Grammar,
    u: Polynomial,
    n_max: int,
    word: OperatorWord | None = None,
) -> list[tuple[int, Fraction, Monomial]]:
    """Iterate the operator and record (n, coefficient, monomial) triples.

    Every derivative in 0..n_max must be a single-term polynomial,
    otherwise NonMonomialSequenceError identifies the first bad order.
    Without a word the grammar must consist of a single sub-grammar and
    plain D is iterated; with a word, the composite operator is.
    """
    if isinstance(mg, Grammar):
        mg = MatrixGrammar((mg,))
    if n_max < 0:
        raise ValueError(f"sequence length must be >= 0, got {n_max}")
    if word is not None:
        word = _check_word(mg, word)
    elif len(mg) != 1:
        raise ValueError("a matrix grammar with multiple sub-grammars needs an operator word")

    items = []
    current = u
    for n in range(n_max + 1):
        if len(current.terms) != 1:
            raise NonMonomialSequenceError(n)
        ((mono, coeff),) = current.terms.items()
        items.append((n, coeff, mono))
        if n < n_max:
            if word is None:
                current = derive(mg.subgrammars[0], current)
            else:
                current = derive_word(mg, word, current)
    return items
