"""Bernoulli numbers, Faulhaber polynomials, exact antidifference."""

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from deltasolve.bernoulli import (BernoulliTable, antidifference_polynomial,
                                  bernoulli, faulhaber)
from deltasolve.polynomials import Polynomial
from deltasolve.rationals import binomial

X = Polynomial((0, 1))

# Recurrence solved by hand up to B_12 (B_1 = -1/2 convention).
KNOWN_BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    3: Fraction(0),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
}


def test_known_values():
    for n, expected in KNOWN_BERNOULLI.items():
        assert bernoulli(n) == expected, n


def test_defining_recurrence_holds():
    for n in range(1, 31):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += binomial(n + 1, k) * bernoulli(k)
        assert acc == 0, n


def test_odd_indices_vanish():
    for n in range(3, 31, 2):
        assert bernoulli(n) == 0, n


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_table_extension_is_thread_safe():
    table = BernoulliTable()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(table.value, [40] * 16))
    assert len(set(results)) == 1
    assert results[0] == bernoulli(40)
    assert table.computed_up_to >= 40


def _power_sum(n, m):
    """Brute-force oracle: sum_{k=1}^{m} k^n over exact integers."""
    return Fraction(sum(k ** n for k in range(1, m + 1)))


def test_faulhaber_examples():
    assert faulhaber(0) == X
    assert faulhaber(1) == Polynomial((0, Fraction(1, 2), Fraction(1, 2)))
    assert faulhaber(2) == Polynomial(
        (0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)))


def test_faulhaber_matches_brute_force_sums():
    for n in range(9):
        p = faulhaber(n)
        for m in range(51):
            assert p(Fraction(m)) == _power_sum(n, m), (n, m)


def test_faulhaber_rejects_negative():
    with pytest.raises(ValueError):
        faulhaber(-1)


def test_antidifference_examples():
    assert antidifference_polynomial(X) == Polynomial(
        (0, Fraction(-1, 2), Fraction(1, 2)))
    assert antidifference_polynomial(Polynomial.constant(1)) == X
    x_squared = Polynomial.monomial(2)
    assert antidifference_polynomial(x_squared) == Polynomial(
        (0, Fraction(1, 6), Fraction(-1, 2), Fraction(1, 3)))
    assert antidifference_polynomial(Polynomial.zero()) == Polynomial.zero()


def test_antidifference_inverts_forward_difference():
    rng = random.Random(20240802)
    for _ in range(50):
        degree = rng.randint(0, 8)
        g = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                        for _ in range(degree + 1)])
        f = antidifference_polynomial(g)
        assert f.forward_difference() == g
        assert f.coefficient(0) == 0


def test_antidifference_of_monomials_is_shifted_faulhaber():
    # For n >= 1 the shifted power sum S_n(x-1) already has f(0) = 0;
    # n = 0 needs the constant dropped (S_0(x-1) = x - 1) and is covered by
    # the example above.
    for n in range(1, 9):
        assert antidifference_polynomial(Polynomial.monomial(n)) \
            == faulhaber(n).translate(-1)
        assert faulhaber(n) - Polynomial.monomial(n) \
            == faulhaber(n).translate(-1)
