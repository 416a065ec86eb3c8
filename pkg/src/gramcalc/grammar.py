"""Surface syntax for expressions, grammars, and matrix grammars.

The accepted language (whitespace is insignificant everywhere):

    matrix   := group (',' group)* | prods
    group    := '[' prods ']'
    prods    := prod (';' prod)*
    prod     := VAR '->' expr
    expr     := ['-'] term (('+'|'-') term)*
    term     := factor (('*')? factor)*
    factor   := NUM | VAR ('^' INT)? | '(' expr ')' ('^' INT)?
    NUM      := INT | INT '/' INT
    VAR      := [a-z]
    INT      := ['-'] [0-9]+

Variables are single letters and juxtaposition means multiplication, so
"ab" is the product a*b, never a two-letter identifier.  `^` binds
tighter than juxtaposition: "2ab^2" is 2*a*(b^2).  A letter that never
appears on the left of '->' needs no declaration; it simply has no
production and derives to zero.

All errors raised here are ParseError carrying the zero-based character
offset where parsing failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .poly import Polynomial, _check_variable

__all__ = [
    "Grammar",
    "MatrixGrammar",
    "ParseError",
    "constants_of",
    "grammar_text",
    "matrix_grammar_text",
    "parse_expr",
    "parse_grammar",
]

# well below Python's recursion limit: each nesting level costs several
# interpreter stack frames in the recursive-descent parser
_MAX_NESTING = 150


class ParseError(ValueError):
    """Syntax or structural error in the DSL, with its character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Grammar:
    """Substitution rules: variable -> polynomial right-hand side.

    Letters without a production are constants for the derivative
    operator.  At most one production per variable.
    """

    productions: dict[str, Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        for var in self.productions:
            _check_variable(var)

    def production(self, var: str) -> Polynomial | None:
        return self.productions.get(var)


@dataclass(frozen=True)
class MatrixGrammar:
    """Ordered, nonempty family of sub-grammars g_1, ..., g_n."""

    subgrammars: tuple[Grammar, ...]

    def __post_init__(self):
        if not self.subgrammars:
            raise ValueError("matrix grammar needs at least one sub-grammar")

    def __len__(self) -> int:
        return len(self.subgrammars)

    def subgrammar(self, i: int) -> Grammar:
        """The i-th sub-grammar, 1-based as in the operator subscripts."""
        if not 1 <= i <= len(self.subgrammars):
            raise IndexError(
                f"sub-grammar index {i} out of range 1..{len(self.subgrammars)}"
            )
        return self.subgrammars[i - 1]


def constants_of(g: Grammar, variables: Iterable[str]) -> set[str]:
    """The subset of `variables` that have no production in `g`."""
    return {v for v in variables if v not in g.productions}


def grammar_text(g: Grammar) -> str:
    """Render a grammar in the simple form accepted by parse_grammar."""
    return " ; ".join(
        f"{var} -> {body.text()}" for var, body in sorted(g.productions.items())
    )


def matrix_grammar_text(mg: MatrixGrammar) -> str:
    """Render a matrix grammar in bracketed form, one group per sub-grammar."""
    return ", ".join(f"[{grammar_text(g)}]" for g in mg.subgrammars)


# -- lexer -------------------------------------------------------------------


class _Token(NamedTuple):
    kind: str  # "var", "int", "arrow", "end", or the symbol itself
    text: str
    pos: int


_SYMBOLS = set("+-*/^()[];,")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if "a" <= ch <= "z":
            tokens.append(_Token("var", ch, i))
            i += 1
        elif ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", text[start:i], start))
        elif ch == "-" and i + 1 < n and text[i + 1] == ">":
            tokens.append(_Token("arrow", "->", i))
            i += 2
        elif ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        token = self.tokens[self.i]
        self.i += 1
        return token

    def expect(self, kind: str, what: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            found = repr(token.text) if token.kind != "end" else "end of input"
            raise ParseError(f"expected {what}, found {found}", token.pos)
        return self.advance()

    def at_end(self) -> bool:
        return self.peek().kind == "end"

    def expect_end(self):
        token = self.peek()
        if token.kind != "end":
            raise ParseError(f"unexpected {token.text!r}", token.pos)

    # expr := ['-'] term (('+'|'-') term)*
    def expr(self) -> Polynomial:
        if self.peek().kind == "-":
            self.advance()
            value = -self.term()
        else:
            value = self.term()
        while self.peek().kind in ("+", "-"):
            if self.advance().kind == "+":
                value = value + self.term()
            else:
                value = value - self.term()
        return value

    # term := factor (('*')? factor)*
    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.advance()
                value = value * self.factor()
            elif kind in ("int", "var", "("):
                value = value * self.factor()
            else:
                return value

    # factor := NUM | VAR ('^' INT)? | '(' expr ')' ('^' INT)?
    def factor(self) -> Polynomial:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            numerator = int(token.text)
            if self.peek().kind == "/":
                self.advance()
                denom_pos = self.peek().pos
                denominator = self.signed_int()
                if denominator == 0:
                    raise ParseError("zero denominator in rational literal", denom_pos)
                return Polynomial.constant(Fraction(numerator, denominator))
            return Polynomial.constant(numerator)
        if token.kind == "var":
            self.advance()
            value = Polynomial.variable(token.text)
            return self.maybe_power(value)
        if token.kind == "(":
            if self.depth >= _MAX_NESTING:
                raise ParseError("expression nested too deeply", token.pos)
            self.depth += 1
            self.advance()
            value = self.expr()
            self.expect(")", "')'")
            self.depth -= 1
            return self.maybe_power(value)
        found = repr(token.text) if token.kind != "end" else "end of input"
        raise ParseError(f"expected a number, variable, or '(', found {found}", token.pos)

    def maybe_power(self, value: Polynomial) -> Polynomial:
        if self.peek().kind == "^":
            self.advance()
            return value ** self.signed_int()
        return value

    def signed_int(self) -> int:
        negative = False
        if self.peek().kind == "-":
            self.advance()
            negative = True
        token = self.expect("int", "an integer")
        value = int(token.text)
        return -value if negative else value

    # prods := prod (';' prod)*
    def prods(self) -> Grammar:
        productions: dict[str, Polynomial] = {}
        while True:
            var_token = self.expect("var", "a variable")
            if var_token.text in productions:
                raise ParseError(
                    f"duplicate production for '{var_token.text}'", var_token.pos
                )
            self.expect("arrow", "'->'")
            productions[var_token.text] = self.expr()
            if self.peek().kind == ";":
                self.advance()
            else:
                return Grammar(productions)

    # group := '[' prods ']'
    def group(self) -> Grammar:
        open_token = self.expect("[", "'['")
        if self.peek().kind == "]":
            raise ParseError("empty bracket group", open_token.pos)
        grammar = self.prods()
        self.expect("]", "']'")
        return grammar


def parse_expr(text: str) -> Polynomial:
    """Parse an expression into its canonical Polynomial."""
    parser = _Parser(text)
    value = parser.expr()
    parser.expect_end()
    return value


def parse_grammar(text: str) -> MatrixGrammar:
    """Parse a grammar in simple or bracketed form.

    The simple form "a -> a + b ; b -> b" yields a matrix grammar with a
    single sub-grammar; the bracketed form "[...], [...]" yields one
    sub-grammar per group, in written order.
    """
    parser = _Parser(text)
    if parser.peek().kind == "[":
        groups = [parser.group()]
        while parser.peek().kind == ",":
            parser.advance()
            groups.append(parser.group())
    else:
        groups = [parser.prods()]
    parser.expect_end()
    return MatrixGrammar(tuple(groups))
