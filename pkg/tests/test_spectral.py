"""Corrected mode-sum solver: mode polynomials, truncation, residuals."""

import math
import random
from fractions import Fraction

import pytest

from deltasolve.bernoulli import antidifference_polynomial
from deltasolve.polynomials import ComplexPolynomial, Polynomial
from deltasolve.spectral import (MAX_FORCING_DEGREE, DegreeOverflowError,
                                 SpectralConfig, difference_residual,
                                 euler_gap, exp_poly_integral,
                                 iterated_integral, spectral_solve)

X = Polynomial((0, 1))
TWO_PI = 2.0 * math.pi


def test_exp_poly_integral_examples():
    # a = 1, n = 1: q = -x - 1; a = 1, n = 2: q = -x^2 - 2x - 2
    assert exp_poly_integral(1.0, 1) == ComplexPolynomial((-1, -1))
    assert exp_poly_integral(1.0, 2) == ComplexPolynomial((-2, -2, -1))


def test_exp_poly_integral_closed_form():
    rng = random.Random(20240803)
    for _ in range(25):
        n = rng.randint(0, 8)
        a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if a == 0:
            a = 1.0
        q = exp_poly_integral(a, n)
        assert q.degree == n
        for j, c in enumerate(q.coefficients):
            expected = -(math.factorial(n) / math.factorial(j)) \
                * a ** (j - n - 1)
            assert abs(c - expected) <= 1e-12 * abs(expected), (a, n, j)


def test_exp_poly_integral_defining_property():
    # q' - a*q = x^n, checked coefficientwise
    for a in (1.0, -2.5, complex(0.0, TWO_PI), complex(1.0, -3.0)):
        for n in range(6):
            q = exp_poly_integral(a, n)
            lhs = q.derivative() + q * (-a)
            for power in range(n + 1):
                target = 1.0 if power == n else 0.0
                assert abs(lhs.coefficient(power) - target) <= 1e-9, (a, n)


def test_exp_poly_integral_rejects_degenerate_inputs():
    with pytest.raises(ValueError):
        exp_poly_integral(0.0, 3)
    with pytest.raises(ValueError):
        exp_poly_integral(1.0, -1)


def test_iterated_integral():
    assert iterated_integral(X, 1) == X.antiderivative()
    assert iterated_integral(X, 2) == Polynomial(
        (0, 0, 0, Fraction(1, 6)))
    # every integration stage contributes a zero constant, so the lowest
    # count coefficients vanish
    g = Polynomial((3, Fraction(-1, 2), 5))
    result = iterated_integral(g, 3)
    for power in range(3):
        assert result.coefficient(power) == 0
    back = result
    for _ in range(3):
        back = back.derivative()
    assert back == g
    with pytest.raises(ValueError):
        iterated_integral(g, 0)


def test_config_validation():
    with pytest.raises(ValueError):
        SpectralConfig(0)
    assert SpectralConfig(5).include_correction is True


def test_degree_cap():
    too_big = Polynomial.monomial(MAX_FORCING_DEGREE + 1)
    with pytest.raises(DegreeOverflowError):
        spectral_solve(too_big, SpectralConfig(4))
    spectral_solve(Polynomial.monomial(MAX_FORCING_DEGREE), SpectralConfig(1))


def test_imaginary_parts_cancel_exactly():
    # +-k mode polynomials are bitwise conjugate, so each pair sum is real
    for forcing in (X, Polynomial((2, 0, 1)), Polynomial((0, 1, 1, 1))):
        sol = spectral_solve(forcing, SpectralConfig(50))
        assert sol.polynomial_part.max_abs_imag() == 0.0


def test_constant_term_for_linear_forcing():
    # For forcing x each +-k pair contributes the constant 1/(2 pi^2 k^2);
    # the full series sums to zeta(2)/(2 pi^2) = 1/12 and the truncation
    # tail is bracketed by the integral test.
    K = 2000
    sol = spectral_solve(X, SpectralConfig(K))
    const = sol.polynomial_part.coefficient(0).real
    gap = 1.0 / 12.0 - const
    assert 1.0 / (2.0 * math.pi ** 2 * (K + 1)) <= gap
    assert gap <= 1.0 / (2.0 * math.pi ** 2 * K)


def test_agreement_with_exact_antidifference():
    # For forcing x^2 the pair constants cancel and the truncated mode sum
    # differs from the exact antidifference by x times the series tail,
    # which the integral test caps at 1/(pi^2 K).
    forcing = Polynomial.monomial(2)
    exact = antidifference_polynomial(forcing)
    K = 2000
    sol = spectral_solve(forcing, SpectralConfig(K))
    tail_cap = 1.0 / (math.pi ** 2 * K)
    for x in (0.0, 0.3, 1.0, 2.5):
        expected = float(exact(Fraction(x)))
        assert abs(sol.evaluate(x) - expected) <= abs(x) * tail_cap + 1e-12, x


def test_euler_gap_is_half_the_forcing():
    assert abs(euler_gap(X, 3.0, 10) - 1.5) <= 1e-12
    quadratic = Polynomial((1, 0, 1))
    assert abs(euler_gap(quadratic, 2.0, 25) - 2.5) <= 1e-12
    # the gap does not depend on the truncation order
    assert abs(euler_gap(X, 0.7, 10) - euler_gap(X, 0.7, 80)) <= 1e-12


def test_difference_residual_decays_with_truncation():
    forcing = Polynomial.monomial(2)
    grid = [i / 20.0 for i in range(21)]
    residuals = {}
    for k in (10, 100, 1000):
        sol = spectral_solve(forcing, SpectralConfig(k))
        residuals[k] = max(difference_residual(sol, forcing, grid))
    assert residuals[100] <= residuals[10] / 3.0
    assert residuals[1000] <= residuals[100] / 3.0


def test_uncorrected_solution_misses_by_half_g():
    # the historical mode sum without -g/2 solves Df = g only up to g/2
    forcing = X
    sol = spectral_solve(forcing, SpectralConfig(500, include_correction=False))
    x = 0.25
    wrong = sol.evaluate(x + 1.0) - sol.evaluate(x)
    assert abs(wrong.real - (forcing(x) + 0.5)) <= 1e-3
