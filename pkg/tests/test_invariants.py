import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from orbitopes.compositions import Composition, compositions_of
from orbitopes.hopf_monoid import class_of, mu
from orbitopes.invariants import (
    BinomialPolynomial,
    basic_character,
    chi,
    chi_bruteforce,
    chi_bruteforce_element,
    chi_element,
    from_monomial,
    to_monomial,
)
from oracles import binom_frac, eval_monomial

C = Composition
F = Fraction


def test_basic_character_examples():
    assert basic_character(C((5,))) == 1
    assert basic_character(C((1, 2))) == 0
    assert basic_character(C(())) == 1


def test_chi_examples():
    assert chi(C((1, 2, 1))) == BinomialPolynomial({3: F(12), 4: F(24)})
    assert chi(C((1, 1))) == BinomialPolynomial({2: F(2)})
    assert to_monomial(chi(C((1, 1)))) == [F(0), F(-1), F(1)]  # t^2 - t
    assert chi(C(())) == BinomialPolynomial({0: F(1)})


def test_chi_of_one_part_is_power_of_t():
    for n in range(7):
        mono = to_monomial(chi(C((n,)) if n else C(())))
        expected = [F(0)] * n + [F(1)]
        assert mono == expected


def test_chi_of_all_ones_is_falling_factorial():
    for n in range(7):
        alpha = C((1,) * n)
        assert chi(alpha) == BinomialPolynomial({n: F(factorial(n))} if n else {0: F(1)})


def test_chi_bruteforce_examples():
    assert chi_bruteforce(C((1, 1))) == BinomialPolynomial({2: F(2)})
    got = chi_bruteforce(C((2,)))
    assert got == BinomialPolynomial({1: F(1), 2: F(2)})
    assert got.evaluate(3) == 9  # t^2 at t=3
    assert chi_bruteforce(C((1, 2, 1))) == chi(C((1, 2, 1)))


def test_chi_bruteforce_bound():
    with pytest.raises(ValueError, match="brute-force bound"):
        chi_bruteforce(C((8,)))
    with pytest.raises(ValueError, match="brute-force bound"):
        chi_bruteforce(C((1, 1)), bound=1)


def test_chi_matches_bruteforce_exhaustively():
    for n in range(6):
        for alpha in compositions_of(n):
            assert chi(alpha) == chi_bruteforce(alpha)


def test_chi_multiplicative_over_products():
    # brute force on the merged ground set vs product of blockwise closed forms
    cases = [
        (C((2,)), C((1, 1))),
        (C((1,)), C((2, 1))),
        (C((1, 1)), C((1, 1, 1))),
        (C((3,)), C((1, 1))),
    ]
    for alpha, beta in cases:
        x = class_of(alpha, [f"a{i}" for i in range(alpha.weight)])
        y = class_of(beta, [f"b{i}" for i in range(beta.weight)])
        merged = mu(x, y)
        assert chi_bruteforce_element(merged) == chi(alpha) * chi(beta)
        assert chi_element(merged) == chi(alpha) * chi(beta)


def test_evaluation_consistency_both_bases():
    for n in range(6):
        for alpha in compositions_of(n):
            p = chi(alpha)
            mono = to_monomial(p)
            for t in range(7):
                assert p.evaluate(t) == eval_monomial(mono, t)


def test_to_monomial_examples():
    assert to_monomial(BinomialPolynomial({2: F(2)})) == [F(0), F(-1), F(1)]
    assert to_monomial(BinomialPolynomial({1: F(1)})) == [F(0), F(1)]
    p = BinomialPolynomial({3: F(12), 4: F(24)})
    mono = to_monomial(p)
    # cross-check by pointwise evaluation rather than trusting the expansion
    for t in range(6):
        assert eval_monomial(mono, t) == 12 * binom_frac(t, 3) + 24 * binom_frac(t, 4)


def test_from_monomial_roundtrip():
    for coeffs in ([F(1)], [F(0), F(1)], [F(3), F(-2), F(1, 2)], [F(0), F(0), F(0), F(5)]):
        p = from_monomial(coeffs)
        for t in range(8):
            assert p.evaluate(t) == eval_monomial(coeffs, t)


@given(st.dictionaries(st.integers(0, 5), st.fractions(min_value=-4, max_value=4, max_denominator=3), max_size=4),
       st.dictionaries(st.integers(0, 5), st.fractions(min_value=-4, max_value=4, max_denominator=3), max_size=4))
def test_polynomial_ring_operations_agree_with_evaluation(c1, c2):
    p, q = BinomialPolynomial(c1), BinomialPolynomial(c2)
    for t in range(8):
        assert (p + q).evaluate(t) == p.evaluate(t) + q.evaluate(t)
        assert (p * q).evaluate(t) == p.evaluate(t) * q.evaluate(t)


def test_binomial_polynomial_validation_and_json():
    with pytest.raises(ValueError):
        BinomialPolynomial({-1: F(1)})
    p = BinomialPolynomial({0: F(1, 2), 3: F(4)})
    data = p.to_json(monomial=True)
    assert data["binomial"] == {"0": "1/2", "3": "4"}
    assert len(data["monomial"]) == 4
