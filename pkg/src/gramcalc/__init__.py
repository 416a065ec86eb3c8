"""gramcalc: exact formal-derivative calculus over substitution grammars.

A grammar maps letters to polynomial bodies and induces a derivative
operator D that is linear, Leibniz, and zero on letters without rules.
Matrix grammars bundle several sub-grammars whose indexed operators
compose (noncommutatively) through operator words.  Everything is exact:
rational coefficients, arbitrary-precision integers, canonical sparse
polynomials whose structural equality is the only comparison used.
"""

from .derivative import (
    NonMonomialSequenceError,
    OperatorWord,
    derive,
    derive_indexed,
    derive_n,
    derive_word,
    derive_word_pow,
    monomial_sequence,
    parse_word,
    word_text,
)
from .grammar import (
    Grammar,
    MatrixGrammar,
    ParseError,
    constants_of,
    grammar_text,
    matrix_grammar_text,
    parse_expr,
    parse_grammar,
)
from .integers import binomial, multifactorial, rising_product
from .poly import (
    ExponentOverflowError,
    Monomial,
    NonMonomialPowerError,
    Polynomial,
    PolynomialError,
)
from .verify import Case, Report, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "Case",
    "ExponentOverflowError",
    "Grammar",
    "MatrixGrammar",
    "Monomial",
    "NonMonomialPowerError",
    "NonMonomialSequenceError",
    "OperatorWord",
    "ParseError",
    "Polynomial",
    "PolynomialError",
    "Report",
    "binomial",
    "constants_of",
    "derive",
    "derive_indexed",
    "derive_n",
    "derive_word",
    "derive_word_pow",
    "grammar_text",
    "matrix_grammar_text",
    "monomial_sequence",
    "multifactorial",
    "parse_expr",
    "parse_grammar",
    "parse_word",
    "rising_product",
    "run_suite",
    "suite_names",
    "word_text",
    "__version__",
]
