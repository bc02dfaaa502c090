"""Bernoulli numbers, power-sum polynomials, and the exact antidifference.

The antidifference inverts the forward difference: given a polynomial g it
returns the unique polynomial f with f(x+1) - f(x) = g(x) and f(0) = 0.
Solutions of the difference equation are only determined up to an additive
1-periodic function, so pinning the constant term to zero is what makes the
result canonical.  This exact construction is the reference that the
truncated spectral summation is judged against.

Bernoulli numbers use the B_1 = -1/2 convention and come from the defining
recurrence

    sum_{k=0}^{n} C(n+1, k) B_k = 0,   B_0 = 1,

solved for B_n.  They are deliberately *not* obtained by back-substituting
zeta values: the zeta closed forms downstream are validated against these
numbers, and that check would be circular if the numbers came from zeta.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .polynomials import Polynomial
from .rationals import Rational, binomial

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "faulhaber",
    "antidifference_polynomial",
]


class BernoulliTable:
    """Memoised Bernoulli numbers with thread-safe on-demand extension."""

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def computed_up_to(self) -> int:
        return len(self._values) - 1

    def value(self, n: int) -> Rational:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        with self._lock:
            while len(self._values) <= n:
                self._append_next()
            return self._values[n]

    def _append_next(self) -> None:
        # C(m+1, m) B_m = -sum_{k<m} C(m+1, k) B_k, and C(m+1, m) = m + 1.
        m = len(self._values)
        acc = Fraction(0)
        for k, b_k in enumerate(self._values):
            acc += binomial(m + 1, k) * b_k
        self._values.append(-acc / (m + 1))


_TABLE = BernoulliTable()


def bernoulli(n: int) -> Rational:
    """B_n in the B_1 = -1/2 convention (B_n = 0 for odd n >= 3)."""
    return _TABLE.value(n)


def faulhaber(n: int) -> Polynomial:
    """The power-sum polynomial S_n with S_n(m) = sum_{k=1}^{m} k^n.

    For n >= 1,

        S_n(x) = x^(n+1)/(n+1) + x^n/2
                 + (1/(n+1)) sum_{j=2}^{n} C(n+1, j) B_j x^(n+1-j),

    which has no constant term.  The formula's x^n/2 term presumes n >= 1,
    so n = 0 is the explicit base case S_0(x) = x.
    """
    if n < 0:
        raise ValueError("faulhaber requires n >= 0")
    if n == 0:
        return Polynomial.monomial(1)
    coeffs = [Fraction(0)] * (n + 2)
    coeffs[n + 1] = Fraction(1, n + 1)
    coeffs[n] = Fraction(1, 2)
    for j in range(2, n + 1):
        coeffs[n + 1 - j] += binomial(n + 1, j) * bernoulli(j) / (n + 1)
    return Polynomial(coeffs)


def antidifference_polynomial(forcing: Polynomial) -> Polynomial:
    """The unique f with f(x+1) - f(x) = forcing(x) and f(0) = 0.

    Built by linearity: the antidifference of x^n is S_n(x-1), since
    S_n(x) - S_n(x-1) = x^n.  For n >= 1 that shift already has a zero
    constant term; S_0(x-1) = x - 1 does not, so the constant is dropped at
    the end (constants lie in the kernel of the forward difference).
    """
    acc = Polynomial.zero()
    for power, coeff in enumerate(forcing.coefficients):
        if coeff:
            acc = acc + coeff * faulhaber(power).translate(-1)
    constant = acc.coefficient(0)
    if constant:
        acc = acc - Polynomial.constant(constant)
    return acc
