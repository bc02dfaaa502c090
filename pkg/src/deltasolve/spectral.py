"""Spectral solution of f(x+1) - f(x) = g(x) by a corrected mode sum.

Writing the difference operator as e^D - 1 (D = d/dx), its characteristic
zeros are z = 2*k*pi*i for integer k.  Each nonzero mode contributes the
term e^{a x} integral(e^{-a x} g(x) dx) with a = 2*k*pi*i, which for a
monomial forcing x^n has the closed form

    e^{a x} integral(e^{-a x} x^n dx)
        = -(1/a^(n+1)) sum_{j=0}^{n} (n!/j!) a^j x^j,

a polynomial once the integration constant is dropped (``exp_poly_integral``
below; its defining property is q'(x) - a q(x) = x^n).  The k = 0 mode is
the plain antiderivative, and the corrected solution also subtracts g/2:

    f = -g/2 + integral(g) + sum_{k != 0} e^{2 k pi i x}
                                  integral(e^{-2 k pi i x} g dx).

Without the -g/2 term (the historical, uncorrected form) the mode sum
misses the solution by exactly g/2.

Truncation keeps modes 1 <= |k| <= K.  The +k and -k contributions are
conjugate, so each pair is summed before accumulation; one-sided partial
sums would diverge for every forcing with a linear term, which is why the
symmetric pairing is structural and not an optimisation.  Pairs are
accumulated in ascending |k|, making results bit-for-bit reproducible.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .polynomials import ComplexPolynomial, Polynomial

__all__ = [
    "MAX_FORCING_DEGREE",
    "DegreeOverflowError",
    "SpectralConfig",
    "SpectralSolution",
    "exp_poly_integral",
    "iterated_integral",
    "spectral_solve",
    "euler_gap",
    "difference_residual",
]

TWO_PI = 2.0 * math.pi

# n!/j! factors up to 30 stay comfortably inside double range; beyond that
# the closed-form coefficients are no longer trustworthy in one pass.
MAX_FORCING_DEGREE = 30


class DegreeOverflowError(ValueError):
    """Forcing degree exceeds what the double-precision mode sum supports."""


@dataclass(frozen=True)
class SpectralConfig:
    """Truncation order K (modes 1 <= |k| <= K) and the -g/2 correction flag."""

    truncation_order: int
    include_correction: bool = True

    def __post_init__(self) -> None:
        if self.truncation_order < 1:
            raise ValueError("truncation order must be >= 1")


@dataclass(frozen=True)
class SpectralSolution:
    """A truncated spectral solution; the mode sum collapses to a polynomial.

    After symmetric accumulation the coefficients are real up to rounding
    (imaginary parts cancel pairwise), but they are kept complex so that the
    cancellation is observable rather than forced.
    """

    polynomial_part: ComplexPolynomial
    config: SpectralConfig

    def evaluate(self, x: float) -> complex:
        return self.polynomial_part(x)


def exp_poly_integral(a: complex, n: int) -> ComplexPolynomial:
    """The polynomial q(x) = e^{a x} integral(e^{-a x} x^n dx), a != 0.

    Coefficients follow c_n = -1/a, c_{j-1} = c_j * j / a, which realises
    c_j = -(n!/j!) a^(j-n-1).  The defining property q' - a q = x^n is what
    the tests check it against.
    """
    if n < 0:
        raise ValueError("monomial degree must be >= 0")
    a = complex(a)
    if a == 0:
        raise ValueError("exp_poly_integral requires a != 0; the zero mode "
                         "is a plain antiderivative")
    coeffs = [0j] * (n + 1)
    c = -1.0 / a
    coeffs[n] = c
    for j in range(n, 0, -1):
        c = c * j / a
        coeffs[j - 1] = c
    return ComplexPolynomial(coeffs)


def iterated_integral(forcing: Polynomial, count: int) -> Polynomial:
    """count-fold antiderivative, zero integration constant at every stage.

    Equals the single Cauchy-kernel quadrature
    integral_0^x (x-t)^(count-1)/(count-1)! forcing(t) dt, exactly.
    """
    if count < 1:
        raise ValueError("iterated_integral requires count >= 1")
    result = forcing
    for _ in range(count):
        result = result.antiderivative()
    return result


def _mode_polynomial(forcing_coeffs: Sequence[complex],
                     a: complex) -> ComplexPolynomial:
    """Mode contribution for one characteristic value a, by linearity."""
    acc = [0j] * len(forcing_coeffs)
    for power, coeff in enumerate(forcing_coeffs):
        if coeff == 0:
            continue
        term = exp_poly_integral(a, power)
        for i, c in enumerate(term.coefficients):
            acc[i] += coeff * c
    return ComplexPolynomial(acc)


def spectral_solve(forcing: Polynomial, config: SpectralConfig) -> SpectralSolution:
    """Truncated (optionally corrected) mode-sum solution of Df = forcing.

    polynomial_part = [-forcing/2 if corrected] + antiderivative(forcing)
                      + sum over pairs +-k, k = 1..K ascending.

    All integration constants are zero, which picks one member of the
    solution family (solutions differ by 1-periodic functions).
    """
    if forcing.degree > MAX_FORCING_DEGREE:
        raise DegreeOverflowError(
            f"forcing degree {forcing.degree} exceeds the supported maximum "
            f"of {MAX_FORCING_DEGREE}")
    acc = ComplexPolynomial.zero()
    if config.include_correction:
        acc = acc + ComplexPolynomial.from_exact(forcing) * (-0.5)
    acc = acc + ComplexPolynomial.from_exact(forcing.antiderivative())
    forcing_coeffs = tuple(complex(float(c)) for c in forcing.coefficients)
    for k in range(1, config.truncation_order + 1):
        a = complex(0.0, TWO_PI * k)
        pair = _mode_polynomial(forcing_coeffs, a) \
            + _mode_polynomial(forcing_coeffs, -a)
        acc = acc + pair
    return SpectralSolution(polynomial_part=acc, config=config)


def euler_gap(forcing: Polynomial, x: float, truncation_order: int) -> float:
    """Uncorrected minus corrected solution at x; equals forcing(x)/2.

    Both solutions share the same mode sums and differ only in the -g/2
    term, so the gap is independent of the truncation order up to rounding.
    """
    uncorrected = spectral_solve(
        forcing, SpectralConfig(truncation_order, include_correction=False))
    corrected = spectral_solve(
        forcing, SpectralConfig(truncation_order, include_correction=True))
    gap = uncorrected.polynomial_part(float(x)) \
        - corrected.polynomial_part(float(x))
    return gap.real


def difference_residual(solution: SpectralSolution, forcing: Polynomial,
                        sample_points: Sequence[float]) -> list[float]:
    """|s(x+1) - s(x) - forcing(x)| at each sample point."""
    s = solution.polynomial_part
    out = []
    for x in sample_points:
        x = float(x)
        out.append(abs(s(x + 1.0) - s(x) - forcing(x)))
    return out
