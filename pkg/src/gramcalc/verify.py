"""Identity verification suites with structured pass/fail reports.

Each suite compares engine-computed values against independent closed
forms and returns a Report whose cases store both sides as canonical
text, so any failure is directly diff-able.  Every comparison is exact
structural equality; there are no tolerances anywhere.

Randomized suites take an explicit seed and are fully deterministic:
the same seed always yields the identical case list.  Cases are pure
and independent, and reports list them in a fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .derivative import derive, derive_indexed, derive_word, derive_word_pow, word_text
from .grammar import Grammar, MatrixGrammar, grammar_text, matrix_grammar_text, parse_expr, parse_grammar
from .integers import binomial, multifactorial, rising_product
from .poly import Monomial, Polynomial

__all__ = ["Case", "Report", "run_suite", "suite_names"]


@dataclass(frozen=True)
class Case:
    """One verified comparison: passes exactly when lhs equals rhs."""

    params: dict
    lhs: str
    rhs: str
    ok: bool


@dataclass(frozen=True)
class Report:
    suite: str
    cases: tuple[Case, ...]

    @property
    def passed(self) -> int:
        return sum(1 for case in self.cases if case.ok)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[Case]:
        return [case for case in self.cases if not case.ok]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "failed": self.failed,
            "cases": [
                {"params": case.params, "lhs": case.lhs, "rhs": case.rhs, "pass": case.ok}
                for case in self.cases
            ],
        }


def _case(params: dict, lhs: str, rhs: str) -> Case:
    return Case(params, lhs, rhs, lhs == rhs)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _chain(g: Grammar, u: Polynomial, n_max: int) -> list[Polynomial]:
    """[u, D(u), D^2(u), ..., D^n_max(u)]."""
    out = [u]
    for _ in range(n_max):
        out.append(derive(g, out[-1]))
    return out


def _a_power(m: int) -> Polynomial:
    return Polynomial.from_monomial(Monomial({"a": m}))


# -- fixed grammars exercised by several suites ------------------------------

# D(a^2) = D(b^2) = 2a^2b here, yet D(a) != D(b); and with the second
# grammar D(ab) = D(a^2) = 2a^2b, again with D(a) != D(b).  Together they
# show no two of the three equalities force the third.
_NEAR_MISS_1 = "a -> a b ; b -> a^2"
_NEAR_MISS_2 = "a -> a b ; b -> 2 a b - b^2"

# D^2(a) = D^2(b) even though D(a) != D(b); derivatives agree forever after.
_EQUALIZING = "a -> a b ; b -> a c ; c -> b^2 + a c - b c"

# The two indexed operators disagree on a + b, so words do not commute.
_WITNESS = "[a -> a + b ; b -> b], [a -> a ; b -> a - b]"


# -- suites ------------------------------------------------------------------


def verify_leibniz(g: Grammar, u: Polynomial, v: Polynomial, n_max: int) -> Report:
    """D^n(uv) against the binomial convolution of D^k(u) and D^(n-k)(v)."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    du = _chain(g, u, n_max)
    dv = _chain(g, v, n_max)
    duv = _chain(g, u * v, n_max)
    cases = []
    for n in range(n_max + 1):
        rhs = Polynomial.zero()
        for k in range(n + 1):
            rhs = rhs + binomial(n, k) * du[k] * dv[n - k]
        cases.append(_case({"n": n}, duv[n].text(), rhs.text()))
    return Report("leibniz", tuple(cases))


def verify_binomial_sums(n_max: int) -> Report:
    """Row sums of Pascal's triangle, replayed through the engine.

    Under {a -> a} the coefficient of a^2 in D^n(a^2) is 2^n, which is
    also the plain binomial row sum.  The alternating row sum is zero
    for n >= 1 because a * a^-1 collapses to 1 and D(1) = 0.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    g = Grammar({"a": Polynomial.variable("a")})
    mono_a2 = Monomial({"a": 2})
    sq_chain = _chain(g, _a_power(2), n_max)
    unit_chain = _chain(g, _a_power(1) * _a_power(-1), n_max)
    cases = []
    for n in range(n_max + 1):
        total = sum(binomial(n, k) for k in range(n + 1))
        coeff = sq_chain[n].coeff(mono_a2)
        expected = 2**n
        lhs = f"coeff(a^2)={coeff}; sum={total}"
        rhs = f"coeff(a^2)={expected}; sum={expected}"
        cases.append(_case({"n": n, "check": "sum"}, lhs, rhs))
    for n in range(1, n_max + 1):
        alternating = sum((-1) ** k * binomial(n, k) for k in range(n + 1))
        lhs = f"alternating-sum={alternating}; derivative={unit_chain[n].text()}"
        rhs = "alternating-sum=0; derivative=0"
        cases.append(_case({"n": n, "check": "alternating"}, lhs, rhs))
    return Report("binomial-sums", tuple(cases))


def verify_multifactorial_identity(m_max: int, n_max: int, r_max: int) -> Report:
    """rising_product(2m,n,r) = sum_k C(n,k) rp(m,k,r) rp(m,n-k,r).

    Each case also cross-checks the engine: under {a -> a^(r+1)} the
    coefficient of a^(2m+nr) in D^n(a^(2m)) must equal the same value.
    """
    if m_max < 1 or r_max < 1 or n_max < 0:
        raise ValueError("box requires m_max >= 1, r_max >= 1, n_max >= 0")
    cases = []
    for m in range(1, m_max + 1):
        for r in range(1, r_max + 1):
            g = Grammar({"a": _a_power(r + 1)})
            chain = _chain(g, _a_power(2 * m), n_max)
            for n in range(n_max + 1):
                convolution = sum(
                    binomial(n, k) * rising_product(m, k, r) * rising_product(m, n - k, r)
                    for k in range(n + 1)
                )
                closed = rising_product(2 * m, n, r)
                coeff = chain[n].coeff(Monomial({"a": 2 * m + n * r}))
                lhs = f"convolution={convolution}; engine-coeff={coeff}"
                rhs = f"convolution={closed}; engine-coeff={closed}"
                cases.append(_case({"m": m, "n": n, "r": r}, lhs, rhs))
    return Report("multifactorial-identity", tuple(cases))


def verify_closed_forms(m_max: int, n_max: int, r_max: int) -> Report:
    """The two power closed forms.

    Under {a -> a}: D^n(a^m) = m^n a^m, for all integer m including
    negative ones.  Under {a -> a^(r+1)}: D^n(a^m) =
    rising_product(m,n,r) * a^(m+nr) for m >= 1.
    """
    if m_max < 1 or r_max < 1 or n_max < 0:
        raise ValueError("box requires m_max >= 1, r_max >= 1, n_max >= 0")
    cases = []
    g_self = Grammar({"a": Polynomial.variable("a")})
    for m in range(-m_max, m_max + 1):
        chain = _chain(g_self, _a_power(m), n_max)
        for n in range(n_max + 1):
            closed = Polynomial.from_monomial(Monomial({"a": m}), m**n)
            params = {"grammar": "a -> a", "m": m, "n": n}
            cases.append(_case(params, chain[n].text(), closed.text()))
    for r in range(1, r_max + 1):
        g = Grammar({"a": _a_power(r + 1)})
        for m in range(1, m_max + 1):
            chain = _chain(g, _a_power(m), n_max)
            for n in range(n_max + 1):
                closed = Polynomial.from_monomial(
                    Monomial({"a": m + n * r}), rising_product(m, n, r)
                )
                params = {"grammar": f"a -> a^{r + 1}", "m": m, "n": n, "r": r}
                cases.append(_case(params, chain[n].text(), closed.text()))
    return Report("closed-forms", tuple(cases))


_SCALING_GRID = range(7)  # (m, n) exponent pairs for the per-operator scaling rule


def _two_operator_grammar(r: int) -> MatrixGrammar:
    """[a -> a ; b -> b], [a -> a^r b ; b -> a^(r-1) b^2]."""
    g1 = Grammar({"a": Polynomial.variable("a"), "b": Polynomial.variable("b")})
    g2 = Grammar(
        {
            "a": Polynomial.from_monomial(Monomial({"a": r, "b": 1})),
            "b": Polynomial.from_monomial(Monomial({"a": r - 1, "b": 2})),
        }
    )
    return MatrixGrammar((g1, g2))


def verify_matrix_closed_forms(n_max: int, r_max: int) -> Report:
    """The two-operator family: per-operator action and word closed forms.

    For each r the grammar is [a -> a ; b -> b], [a -> a^r b ; b ->
    a^(r-1) b^2].  D_1 scales a^m b^n by m+n; D_2 additionally shifts
    the exponents by (r-1, 1).  Iterating the words 12 and 21 on a and b
    yields single terms whose coefficients are multifactorial products:

        D_12^n(a) = (nr+1)!_r ((n-1)r+1)!_r * a^(nr-n+1) b^n
        D_21^n(a) = ((n-1)r+1)!_r^2        * a^(nr-n+1) b^n
        D_12^n(b) = (nr+1)!_r ((n-1)r+1)!_r * a^(nr-n) b^(n+1)
        D_21^n(b) = ((n-1)r+1)!_r^2        * a^(nr-n) b^(n+1)
    """
    if n_max < 0 or r_max < 1:
        raise ValueError("box requires n_max >= 0, r_max >= 1")
    cases = []
    a = Polynomial.variable("a")
    b = Polynomial.variable("b")
    for r in range(1, r_max + 1):
        mg = _two_operator_grammar(r)
        for m in _SCALING_GRID:
            for n in _SCALING_GRID:
                u = Polynomial.from_monomial(Monomial({"a": m, "b": n}))
                scaled = Polynomial.from_monomial(Monomial({"a": m, "b": n}), m + n)
                shifted = Polynomial.from_monomial(
                    Monomial({"a": m + r - 1, "b": n + 1}), m + n
                )
                cases.append(
                    _case(
                        {"r": r, "m": m, "n": n, "operator": "D1"},
                        derive_indexed(mg, 1, u).text(),
                        scaled.text(),
                    )
                )
                cases.append(
                    _case(
                        {"r": r, "m": m, "n": n, "operator": "D2"},
                        derive_indexed(mg, 2, u).text(),
                        shifted.text(),
                    )
                )
        for n in range(n_max + 1):
            grow = multifactorial(n * r + 1, r)
            hold = multifactorial((n - 1) * r + 1, r)
            forms = [
                ("12", a, Monomial({"a": n * r - n + 1, "b": n}), grow * hold),
                ("21", a, Monomial({"a": n * r - n + 1, "b": n}), hold * hold),
                ("12", b, Monomial({"a": n * r - n, "b": n + 1}), grow * hold),
                ("21", b, Monomial({"a": n * r - n, "b": n + 1}), hold * hold),
            ]
            for word_str, start, mono, coeff in forms:
                word = tuple(int(ch) for ch in word_str)
                engine = derive_word_pow(mg, word, n, start)
                closed = Polynomial.from_monomial(mono, coeff)
                params = {"r": r, "n": n, "word": word_str, "u": start.text()}
                cases.append(_case(params, engine.text(), closed.text()))
    return Report("matrix-closed-forms", tuple(cases))


def _random_ab_grammar(rng: random.Random) -> Grammar:
    """Random grammar over {a, b}: <=3 terms per body, total degree <=3,
    coefficients in [-3, 3]; a letter is occasionally left constant."""
    productions = {}
    for var in "ab":
        if rng.random() < 0.15:
            continue
        terms: dict[Monomial, int] = {}
        for _ in range(rng.randint(1, 3)):
            deg_a = rng.randint(0, 3)
            deg_b = rng.randint(0, 3 - deg_a)
            mono = Monomial({"a": deg_a, "b": deg_b})
            terms[mono] = terms.get(mono, 0) + rng.randint(-3, 3)
        productions[var] = Polynomial(terms)
    return Grammar(productions)


def _grammar_label(g: Grammar) -> str:
    return grammar_text(g) or "(no productions)"


def verify_nonexistence(trials: int, seed: int) -> Report:
    """No grammar satisfies D(a^2) = D(b^2) = D(ab) with nonzero D(a), D(b).

    Restated as a testable implication: whenever the three derivatives
    coincide, D(a) and D(b) are both zero.  Random grammars probe for a
    counterexample; the three fixed cases pin the known near misses
    (each satisfies two equalities but never all three) and the
    degenerate all-constant grammar (premise and conclusion both hold).
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    a = Polynomial.variable("a")
    b = Polynomial.variable("b")
    cases = []

    g1 = parse_grammar(_NEAR_MISS_1).subgrammars[0]
    da2, db2, dab = derive(g1, a * a), derive(g1, b * b), derive(g1, a * b)
    da, db = derive(g1, a), derive(g1, b)
    premise = da2 == db2 and db2 == dab
    lhs = (
        f"D(a^2)={da2.text()}; D(b^2)={db2.text()}; "
        f"premise={_bool(premise)}; derivatives-differ={_bool(da != db)}"
    )
    rhs = "D(a^2)=2 a^2 b; D(b^2)=2 a^2 b; premise=false; derivatives-differ=true"
    cases.append(_case({"grammar": _NEAR_MISS_1, "kind": "near-miss"}, lhs, rhs))

    g2 = parse_grammar(_NEAR_MISS_2).subgrammars[0]
    da2, db2, dab = derive(g2, a * a), derive(g2, b * b), derive(g2, a * b)
    da, db = derive(g2, a), derive(g2, b)
    premise = da2 == db2 and db2 == dab
    lhs = (
        f"D(ab)={dab.text()}; D(a^2)={da2.text()}; "
        f"premise={_bool(premise)}; derivatives-differ={_bool(da != db)}"
    )
    rhs = "D(ab)=2 a^2 b; D(a^2)=2 a^2 b; premise=false; derivatives-differ=true"
    cases.append(_case({"grammar": _NEAR_MISS_2, "kind": "near-miss"}, lhs, rhs))

    g0 = Grammar({})
    da2, db2, dab = derive(g0, a * a), derive(g0, b * b), derive(g0, a * b)
    premise = da2 == db2 and db2 == dab
    lhs = f"premise={_bool(premise)}; D(a)={derive(g0, a).text()}; D(b)={derive(g0, b).text()}"
    rhs = "premise=true; D(a)=0; D(b)=0"
    cases.append(_case({"grammar": "(no productions)", "kind": "degenerate"}, lhs, rhs))

    rng = random.Random(seed)
    for trial in range(trials):
        g = _random_ab_grammar(rng)
        da2, db2, dab = derive(g, a * a), derive(g, b * b), derive(g, a * b)
        params = {"trial": trial, "grammar": _grammar_label(g)}
        if da2 == db2 and db2 == dab:
            lhs = f"premise=true; D(a)={derive(g, a).text()}; D(b)={derive(g, b).text()}"
            rhs = "premise=true; D(a)=0; D(b)=0"
        else:
            lhs = rhs = "premise=false"
        cases.append(_case(params, lhs, rhs))
    return Report("nonexistence", tuple(cases))


# -- randomized calculus-rule properties --------------------------------------


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_nonzero_fraction(rng: random.Random) -> Fraction:
    sign = -1 if rng.random() < 0.5 else 1
    return Fraction(sign * rng.randint(1, 9), rng.randint(1, 9))


def _random_monomial(rng: random.Random, variables: str, lo: int, hi: int) -> Monomial:
    return Monomial({v: rng.randint(lo, hi) for v in variables})


def _random_poly(
    rng: random.Random, variables: str = "abc", max_terms: int = 4, lo: int = -3, hi: int = 3
) -> Polynomial:
    terms: dict[Monomial, Fraction] = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = _random_monomial(rng, variables, lo, hi)
        coeff = terms.get(mono, Fraction(0)) + rng.randint(-9, 9)
        terms[mono] = coeff
    return Polynomial(terms)


def _random_grammar(rng: random.Random, variables: str = "abc") -> Grammar:
    """Productions with <=3 terms, exponents in [0, 2], coefficients in
    [-3, 3]; each letter is left constant with probability 1/4."""
    productions = {}
    for var in variables:
        if rng.random() < 0.25:
            continue
        terms: dict[Monomial, int] = {}
        for _ in range(rng.randint(1, 3)):
            mono = _random_monomial(rng, variables, 0, 2)
            terms[mono] = terms.get(mono, 0) + rng.randint(-3, 3)
        productions[var] = Polynomial(terms)
    return Grammar(productions)


def _first_equalization(
    chain_a: list[Polynomial], chain_b: list[Polynomial], k_max: int
) -> int | None:
    for k in range(1, k_max + 1):
        if chain_a[k] == chain_b[k]:
            return k
    return None


def verify_calculus_rules(trials: int, seed: int) -> Report:
    """Randomized checks of the operator laws, `trials` cases per rule.

    Rules: linearity, power (integer exponents, negative included),
    quotient, four-factor product, binomial convolution of iterates,
    zeroth-power annihilation, equalization persistence (once D^k agrees
    on two letters it agrees at k+1), and word composition (splitting an
    operator word anywhere composes).  Fixed cases pin the equalizing
    grammar and the noncommutativity witness.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)
    cases = []

    for trial in range(trials):
        g = _random_grammar(rng)
        u = _random_poly(rng)
        v = _random_poly(rng)
        alpha = _random_fraction(rng)
        beta = _random_fraction(rng)
        lhs = derive(g, alpha * u + beta * v)
        rhs = alpha * derive(g, u) + beta * derive(g, v)
        params = {
            "rule": "linearity",
            "trial": trial,
            "grammar": _grammar_label(g),
            "u": u.text(),
            "v": v.text(),
            "alpha": str(alpha),
            "beta": str(beta),
        }
        cases.append(_case(params, lhs.text(), rhs.text()))

    for trial in range(trials):
        g = _random_grammar(rng)
        if trial % 2 == 0:
            v = Polynomial.from_monomial(
                _random_monomial(rng, "abc", -4, 4), _random_nonzero_fraction(rng)
            )
            n = rng.randint(-4, 4)
        else:
            v = _random_poly(rng)
            n = rng.randint(0, 4)
        lhs = derive(g, v**n)
        rhs = Polynomial.zero() if n == 0 else n * v ** (n - 1) * derive(g, v)
        params = {
            "rule": "power",
            "trial": trial,
            "grammar": _grammar_label(g),
            "v": v.text(),
            "n": n,
        }
        cases.append(_case(params, lhs.text(), rhs.text()))

    for trial in range(trials):
        g = _random_grammar(rng)
        u = _random_poly(rng)
        v = Polynomial.from_monomial(
            _random_monomial(rng, "abc", -3, 3), _random_nonzero_fraction(rng)
        )
        lhs = derive(g, u * v**-1)
        rhs = (derive(g, u) * v - u * derive(g, v)) * v**-2
        params = {
            "rule": "quotient",
            "trial": trial,
            "grammar": _grammar_label(g),
            "u": u.text(),
            "v": v.text(),
        }
        cases.append(_case(params, lhs.text(), rhs.text()))

    for trial in range(trials):
        g = _random_grammar(rng)
        factors = [_random_poly(rng, max_terms=2, lo=-2, hi=2) for _ in range(4)]
        product = factors[0] * factors[1] * factors[2] * factors[3]
        lhs = derive(g, product)
        rhs = Polynomial.zero()
        for i in range(4):
            piece = derive(g, factors[i])
            for j, factor in enumerate(factors):
                if j != i:
                    piece = piece * factor
            rhs = rhs + piece
        params = {
            "rule": "product4",
            "trial": trial,
            "grammar": _grammar_label(g),
            "factors": "; ".join(f.text() for f in factors),
        }
        cases.append(_case(params, lhs.text(), rhs.text()))

    for trial in range(trials):
        g = _random_grammar(rng, "ab")
        u = _random_poly(rng, "ab", max_terms=3, lo=-2, hi=2)
        v = _random_poly(rng, "ab", max_terms=3, lo=-2, hi=2)
        n = trial % 5
        du = _chain(g, u, n)
        dv = _chain(g, v, n)
        lhs = _chain(g, u * v, n)[n]
        rhs = Polynomial.zero()
        for k in range(n + 1):
            rhs = rhs + binomial(n, k) * du[k] * dv[n - k]
        params = {
            "rule": "leibniz",
            "trial": trial,
            "grammar": _grammar_label(g),
            "u": u.text(),
            "v": v.text(),
            "n": n,
        }
        cases.append(_case(params, lhs.text(), rhs.text()))

    for trial in range(trials):
        g = _random_grammar(rng)
        v = _random_poly(rng)
        lhs = derive(g, v**0)
        params = {
            "rule": "power-zero",
            "trial": trial,
            "grammar": _grammar_label(g),
            "v": v.text(),
        }
        cases.append(_case(params, lhs.text(), "0"))

    for trial in range(trials):
        if trial % 2 == 0:
            # a and b substitute into constants only, so both chains hit
            # zero by step 2 and equalize through different intermediates
            productions = {}
            for var in "ab":
                terms: dict[Monomial, int] = {}
                for _ in range(rng.randint(1, 3)):
                    mono = _random_monomial(rng, "cd", 0, 3)
                    terms[mono] = terms.get(mono, 0) + rng.randint(-3, 3)
                productions[var] = Polynomial(terms)
            g = Grammar(productions)
        else:
            g = _random_grammar(rng, "ab")
        chain_a = _chain(g, Polynomial.variable("a"), 4)
        chain_b = _chain(g, Polynomial.variable("b"), 4)
        k = _first_equalization(chain_a, chain_b, 3)
        params = {
            "rule": "stabilization",
            "trial": trial,
            "grammar": _grammar_label(g),
            "k": "none" if k is None else k,
        }
        if k is None:
            lhs = rhs = "no equalization for k<=3"
        else:
            lhs = chain_a[k + 1].text()
            rhs = chain_b[k + 1].text()
        cases.append(_case(params, lhs, rhs))

    g_fixed = parse_grammar(_EQUALIZING).subgrammars[0]
    chain_a = _chain(g_fixed, Polynomial.variable("a"), 6)
    chain_b = _chain(g_fixed, Polynomial.variable("b"), 6)
    for k in (2, 3, 4, 5):
        lhs = f"at-k={chain_a[k].text()}; next={chain_a[k + 1].text()}"
        rhs = f"at-k={chain_b[k].text()}; next={chain_b[k + 1].text()}"
        params = {"rule": "stabilization", "grammar": _EQUALIZING, "k": k}
        cases.append(_case(params, lhs, rhs))

    for trial in range(trials):
        count = rng.randint(2, 3)
        mg = MatrixGrammar(tuple(_random_grammar(rng, "ab") for _ in range(count)))
        length = rng.randint(2, 4)
        word = tuple(rng.randint(1, count) for _ in range(length))
        split = rng.randint(1, length - 1)
        u = _random_poly(rng, "ab", max_terms=3, lo=-2, hi=2)
        lhs = derive_word(mg, word, u)
        rhs = derive_word(mg, word[:split], derive_word(mg, word[split:], u))
        params = {
            "rule": "word-composition",
            "trial": trial,
            "grammar": matrix_grammar_text(mg),
            "word": word_text(word),
            "split": split,
            "u": u.text(),
        }
        cases.append(_case(params, lhs.text(), rhs.text()))

    mg = parse_grammar(_WITNESS)
    u = parse_expr("a + b")
    d12 = derive_word(mg, (1, 2), u)
    d21 = derive_word(mg, (2, 1), u)
    lhs = f"D_12={d12.text()}; D_21={d21.text()}; differ={_bool(d12 != d21)}"
    rhs = "D_12=2 a + b; D_21=3 a - 2 b; differ=true"
    params = {"rule": "word-composition", "grammar": _WITNESS, "kind": "noncommutativity"}
    cases.append(_case(params, lhs, rhs))

    return Report("calculus-rules", tuple(cases))


# -- dispatch ------------------------------------------------------------------

_DEFAULTS: dict[str, dict] = {
    "leibniz": {"grammar": "a -> a + b ; b -> b", "u": "a", "v": "b", "n_max": 6},
    "binomial-sums": {"n_max": 40},
    "multifactorial-identity": {"m_max": 6, "n_max": 8, "r_max": 5},
    "closed-forms": {"m_max": 6, "n_max": 8, "r_max": 5},
    "matrix-closed-forms": {"n_max": 8, "r_max": 5},
    "nonexistence": {"trials": 500, "seed": 2026},
    "calculus-rules": {"trials": 200, "seed": 2026},
}


def suite_names() -> tuple[str, ...]:
    return tuple(_DEFAULTS)


def run_suite(name: str, params: dict | None = None) -> Report:
    """Run a named suite with defaults overridden by `params`.

    Values are coerced to the type of the corresponding default, so
    string-valued CLI parameters work directly.  Unknown suite or
    parameter names raise ValueError.
    """
    if name not in _DEFAULTS:
        raise ValueError(f"unknown suite {name!r}; expected one of: {', '.join(_DEFAULTS)}")
    merged = dict(_DEFAULTS[name])
    for key, value in (params or {}).items():
        if key not in merged:
            raise ValueError(
                f"unknown parameter {key!r} for suite '{name}'; "
                f"expected one of: {', '.join(merged)}"
            )
        merged[key] = int(value) if isinstance(merged[key], int) else str(value)

    if name == "leibniz":
        mg = parse_grammar(merged["grammar"])
        if len(mg) != 1:
            raise ValueError("leibniz suite needs a grammar with a single sub-grammar")
        return verify_leibniz(
            mg.subgrammars[0],
            parse_expr(merged["u"]),
            parse_expr(merged["v"]),
            merged["n_max"],
        )
    if name == "binomial-sums":
        return verify_binomial_sums(merged["n_max"])
    if name == "multifactorial-identity":
        return verify_multifactorial_identity(merged["m_max"], merged["n_max"], merged["r_max"])
    if name == "closed-forms":
        return verify_closed_forms(merged["m_max"], merged["n_max"], merged["r_max"])
    if name == "matrix-closed-forms":
        return verify_matrix_closed_forms(merged["n_max"], merged["r_max"])
    if name == "nonexistence":
        return verify_nonexistence(merged["trials"], merged["seed"])
    return verify_calculus_rules(merged["trials"], merged["seed"])
