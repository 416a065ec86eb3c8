"""Property-based tests: ring axioms and canonical-form invariants."""

from fractions import Fraction

from hypothesis import given, strategies as st

from gramcalc.grammar import parse_expr
from gramcalc.poly import Monomial, Polynomial

coefficients = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=9
)

monomials = st.dictionaries(
    st.sampled_from("abc"), st.integers(min_value=-4, max_value=4), max_size=3
).map(Monomial)

polynomials = st.lists(st.tuples(monomials, coefficients), max_size=5).map(Polynomial)

nonzero_monomial_polys = st.tuples(
    monomials,
    st.fractions(min_value=Fraction(1, 9), max_value=Fraction(9), max_denominator=9),
).map(lambda pair: Polynomial.from_monomial(*pair))


def assert_canonical(p: Polynomial) -> None:
    for mono, coeff in p.terms.items():
        assert coeff != 0
        assert isinstance(coeff, Fraction)
        assert all(exp != 0 for _, exp in mono.exps)
        assert list(mono.exps) == sorted(mono.exps)


@given(polynomials, polynomials)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polynomials, polynomials, polynomials)
def test_addition_associates(p, q, r):
    assert (p + q) + r == p + (q + r)


@given(polynomials, polynomials)
def test_multiplication_commutes(p, q):
    assert p * q == q * p


@given(polynomials, polynomials, polynomials)
def test_multiplication_associates(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(polynomials, polynomials, polynomials)
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polynomials)
def test_additive_identity_and_inverse(p):
    assert p + Polynomial.zero() == p
    assert (p + (-p)).is_zero
    assert p - p == Polynomial.zero()


@given(polynomials)
def test_multiplicative_identity_and_annihilator(p):
    assert p * Polynomial.one() == p
    assert (p * Polynomial.zero()).is_zero


@given(polynomials, polynomials)
def test_results_stay_canonical(p, q):
    assert_canonical(p + q)
    assert_canonical(p - q)
    assert_canonical(p * q)
    assert_canonical(-p)


@given(polynomials, st.integers(min_value=0, max_value=4))
def test_power_matches_repeated_product(p, k):
    expected = Polynomial.one()
    for _ in range(k):
        expected = expected * p
    assert p**k == expected


@given(nonzero_monomial_polys, st.integers(min_value=-3, max_value=3))
def test_monomial_power_inverts_cleanly(p, k):
    assert p**k * p**-k == Polynomial.one()


@given(polynomials)
def test_construction_order_does_not_matter(p):
    rebuilt = Polynomial(list(reversed(list(p.terms.items()))))
    assert rebuilt == p
    assert rebuilt.text() == p.text()


@given(polynomials)
def test_text_round_trips_through_parser(p):
    assert parse_expr(p.text()) == p


@given(polynomials)
def test_json_is_ordered_and_exact(p):
    payload = p.to_json()
    assert len(payload) == len(p.terms)
    keys = [tuple(sorted(entry["monomial"].items())) for entry in payload]
    assert len(set(keys)) == len(keys)
    for entry in payload:
        mono = Monomial(entry["monomial"])
        assert Fraction(entry["coeff"]) == p.coeff(mono)
