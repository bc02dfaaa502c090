"""Even zeta values: exact closed forms, a bracketing oracle, and the
numeric-vs-exact coefficient comparison that links mode sums to Bernoulli
numbers.

The closed form is

    zeta(2j) = (-1)^(j-1) (2 pi)^(2j) B_{2j} / (2 (2j)!),

kept as an exact rational multiple of pi^(2j).  Its independent check is the
integral-test bracket around the partial sum S_N = sum_{k<=N} k^(-2j):

    S_N + integral_{N+1}^inf t^(-2j) dt  <  zeta(2j)  <  S_N + integral_N^inf,

which never touches Bernoulli numbers.

``coefficient_tables`` compares the two solution routes of the difference
equation coefficient by coefficient for forcing x^n:

    A(n, j) = -(n!/j!) sum_{k != 0} (2 k pi i)^(j-(n+1))   (numeric, truncated)
    B(n, j) = (1/(n+1)) C(n+1, j) B_j for 2 <= j <= n, else 0   (exact)

The A sums are computed as truncated symmetric mode sums on purpose; backing
them out of the Bernoulli identity would make the comparison circular.
Agreement is A(n, n+1-j) = B(n, j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import bernoulli
from .rationals import Rational, binomial, factorial

__all__ = [
    "ZetaClosedForm",
    "zeta_even_closed_form",
    "zeta_partial_sum",
    "coefficient_tables",
    "verify_comparison",
]

TWO_PI = 2.0 * math.pi

# Beyond n = 12 the exact B-table stays cheap but the numeric A-table's
# n!/j! prefactors start amplifying tail error past usefulness.
MAX_TABLE_ORDER = 12


@dataclass(frozen=True)
class ZetaClosedForm:
    """zeta(2j) = coefficient * pi^pi_power with an exact coefficient."""

    j: int
    coefficient: Rational
    pi_power: int

    def value(self) -> float:
        return float(self.coefficient) * math.pi ** self.pi_power


def zeta_even_closed_form(j: int) -> ZetaClosedForm:
    """Exact zeta(2j) for j >= 1; the coefficient is always positive."""
    if j < 1:
        raise ValueError("zeta_even_closed_form requires j >= 1")
    sign = 1 if j % 2 == 1 else -1
    coefficient = Fraction(sign * 2 ** (2 * j)) * bernoulli(2 * j) \
        / (2 * factorial(2 * j))
    return ZetaClosedForm(j=j, coefficient=coefficient, pi_power=2 * j)


def zeta_partial_sum(j: int, n_terms: int) -> tuple[float, float]:
    """Integral-test bracket [lower, upper] around zeta(2j), N = n_terms.

    The true value lies strictly inside; the width is the difference of the
    two tail integrals, about (2j-1)/N^(2j) of the first omitted term scale.
    """
    if j < 1:
        raise ValueError("zeta_partial_sum requires j >= 1")
    if n_terms < 2:
        raise ValueError("zeta_partial_sum requires at least 2 terms")
    exponent = 2 * j
    partial = 0.0
    for k in range(1, n_terms + 1):
        partial += 1.0 / float(k) ** exponent
    def tail(m: int) -> float:
        return float(m) ** (1 - exponent) / (exponent - 1)
    return (partial + tail(n_terms + 1), partial + tail(n_terms))


def coefficient_tables(n: int, truncation_order: int
                       ) -> tuple[list[float], list[Rational]]:
    """(A, B) tables for forcing x^n, both indexed by j = 0..n.

    A entries with odd n+1-j vanish identically: the +-k pair contributions
    are opposite, so the symmetric sum cancels before accumulation.
    """
    if not 1 <= n <= MAX_TABLE_ORDER:
        raise ValueError(f"table order must be in 1..{MAX_TABLE_ORDER}")
    if truncation_order < 1:
        raise ValueError("truncation order must be >= 1")
    a_table: list[float] = []
    for j in range(n + 1):
        exponent = j - (n + 1)
        if exponent % 2 != 0:
            a_table.append(0.0)
            continue
        sign = 1.0 if (exponent // 2) % 2 == 0 else -1.0
        acc = 0.0
        for k in range(1, truncation_order + 1):
            acc += (TWO_PI * k) ** exponent
        prefactor = float(factorial(n)) / float(factorial(j))
        a_table.append(-prefactor * 2.0 * sign * acc)
    b_table = [Fraction(0)] * (n + 1)
    for j in range(2, n + 1):
        b_table[j] = binomial(n + 1, j) * bernoulli(j) / (n + 1)
    return a_table, b_table


def verify_comparison(n: int, truncation_order: int) -> float:
    """max_{2 <= j <= n} |A(n, n+1-j) - B(n, j)|; 0.0 when the range is empty."""
    a_table, b_table = coefficient_tables(n, truncation_order)
    worst = 0.0
    for j in range(2, n + 1):
        worst = max(worst, abs(a_table[n + 1 - j] - float(b_table[j])))
    return worst
