"""Exact sparse Laurent polynomials over the rationals.

A polynomial is a map from monomials to nonzero rational coefficients.
A monomial is a product of single-letter variables raised to nonzero
(possibly negative) integer exponents.  The representation is canonical:
two polynomials are equal as formal expressions exactly when their term
maps are equal, which makes structural equality the identity oracle for
everything built on top.

Coefficients are `fractions.Fraction` (arbitrary precision, always
reduced, positive denominator, unique zero), so all arithmetic is exact.
Exponents are checked 64-bit signed integers: any operation that would
leave that range raises ExponentOverflowError instead of wrapping.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "ALPHABET",
    "ExponentOverflowError",
    "Monomial",
    "NonMonomialPowerError",
    "Polynomial",
    "PolynomialError",
    "Scalar",
]

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1

Scalar = Union[int, Fraction]


class PolynomialError(Exception):
    """Base class for polynomial arithmetic errors."""


class ExponentOverflowError(PolynomialError):
    """An exponent left the signed 64-bit range."""


class NonMonomialPowerError(PolynomialError):
    """Negative power requested for a polynomial with more than one term."""


def _checked_exponent(value: int) -> int:
    if value < _INT64_MIN or value > _INT64_MAX:
        raise ExponentOverflowError("exponent overflow")
    return value


def _check_variable(name: str) -> str:
    if not (isinstance(name, str) and len(name) == 1 and "a" <= name <= "z"):
        raise ValueError(f"invalid variable name {name!r}: expected a single letter a-z")
    return name


class Monomial:
    """Product of variables with nonzero integer exponents, e.g. a^2 b^-1.

    Stored as a tuple of (variable, exponent) pairs sorted by variable.
    The empty tuple is the unit monomial 1.  Hashable and immutable, so
    monomials serve as dictionary keys inside Polynomial.
    """

    __slots__ = ("exps",)

    def __init__(self, exps: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = dict(exps)
        pairs = []
        for var in sorted(items):
            exp = items[var]
            _check_variable(var)
            if exp == 0:
                continue
            pairs.append((var, _checked_exponent(exp)))
        self.exps: tuple[tuple[str, int], ...]
        object.__setattr__(self, "exps", tuple(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def is_unit(self) -> bool:
        return not self.exps

    @property
    def degree(self) -> int:
        """Total degree: the sum of all exponents (can be negative)."""
        return sum(e for _, e in self.exps)

    def exponent(self, var: str) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    def mul(self, other: Monomial) -> Monomial:
        merged = dict(self.exps)
        for var, exp in other.exps:
            merged[var] = _checked_exponent(merged.get(var, 0) + exp)
        return Monomial(merged)

    def pow(self, k: int) -> Monomial:
        return Monomial({var: _checked_exponent(exp * k) for var, exp in self.exps})

    def with_exponent(self, var: str, exp: int) -> Monomial:
        """Copy with the exponent of `var` replaced (0 drops the variable)."""
        merged = dict(self.exps)
        if exp == 0:
            merged.pop(var, None)
        else:
            merged[var] = _checked_exponent(exp)
        return Monomial(merged)

    def sort_key(self) -> tuple:
        # Graded order: total degree descending, then exponent vector over
        # a..z descending lexicographically (so a-heavy terms print first).
        exps = dict(self.exps)
        return (-self.degree, tuple(-exps.get(ch, 0) for ch in ALPHABET))

    def text(self) -> str:
        """Render like "a b^2"; the unit monomial renders "1"."""
        return self._vars_text() or "1"

    def _vars_text(self) -> str:
        return " ".join(v if e == 1 else f"{v}^{e}" for v, e in self.exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        return f"Monomial({dict(self.exps)!r})"


_UNIT = Monomial()


class Polynomial:
    """Sparse Laurent polynomial: a canonical map Monomial -> Fraction.

    Zero coefficients are never stored; the zero polynomial is the empty
    map.  Instances are immutable; every operation returns a new value,
    so polynomials can be shared freely.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        canon: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                canon[mono] = coeff
        self.terms: dict[Monomial, Fraction]
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def one(cls) -> Polynomial:
        return cls({_UNIT: Fraction(1)})

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls({_UNIT: Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        return cls({Monomial({_check_variable(name): 1}): Fraction(1)})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: Scalar = 1) -> Polynomial:
        return cls({mono: Fraction(coeff)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = out.get(mono, _F0) + coeff
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return _wrap({mono: -coeff for mono, coeff in self.terms.items()})

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1.mul(m2)
                total = out.get(mono, _F0) + c1 * c2
                if total:
                    out[mono] = total
                else:
                    out.pop(mono, None)
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return Polynomial.one()
        if not self.terms:
            if k < 0:
                raise ZeroDivisionError("division by zero: negative power of the zero polynomial")
            return Polynomial.zero()
        if len(self.terms) == 1:
            ((mono, coeff),) = self.terms.items()
            return Polynomial({mono.pow(k): coeff**k})
        if k < 0:
            raise NonMonomialPowerError("negative power of non-monomial")
        if k > _INT64_MAX:
            # A multi-term polynomial has a non-unit extreme monomial whose
            # exponents scale with k, so the result cannot fit either way.
            raise ExponentOverflowError("exponent overflow")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- queries -----------------------------------------------------------

    def coeff(self, mono: Monomial) -> Fraction:
        """Coefficient of `mono`, or 0 if the monomial is absent."""
        return self.terms.get(mono, _F0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    __hash__ = None  # mutable dict inside; identity-style hashing would lie

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Iterate terms in canonical order."""
        return iter(self.ordered_terms())

    def ordered_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    # -- rendering ---------------------------------------------------------

    def text(self) -> str:
        """Canonical deterministic rendering, e.g. "2 a b + b^2".

        Terms are ordered by total degree descending, ties broken by the
        exponent vector; a coefficient of 1 is suppressed except on the
        unit monomial; the zero polynomial renders "0".
        """
        if not self.terms:
            return "0"
        rendered = []
        for mono, coeff in self.ordered_terms():
            negative = coeff < 0
            magnitude = -coeff if negative else coeff
            pieces = []
            if magnitude != 1 or mono.is_unit:
                pieces.append(str(magnitude))
            if not mono.is_unit:
                pieces.append(mono._vars_text())
            body = " ".join(pieces)
            if not rendered:
                rendered.append(f"-{body}" if negative else body)
            else:
                rendered.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(rendered)

    def to_json(self) -> list[dict]:
        """JSON form: [{"coeff": "p/q", "monomial": {var: exp, ...}}, ...].

        Terms appear in canonical order, monomial keys alphabetically; the
        coefficient is the reduced fraction as text ("p" when q is 1).
        """
        return [
            {"coeff": str(coeff), "monomial": {v: e for v, e in mono.exps}}
            for mono, coeff in self.ordered_terms()
        ]

    def __repr__(self) -> str:
        return f"<Polynomial {self.text()}>"


_F0 = Fraction(0)


def _wrap(terms: dict[Monomial, Fraction]) -> Polynomial:
    poly = Polynomial.__new__(Polynomial)
    object.__setattr__(poly, "terms", terms)
    return poly


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented
