"""Partial fraction expansion of 1/(e^z - 1) over the zeros of e^z - 1.

The zeros are z = 2*k*pi*i for integer k, all simple with residue 1, and

    1/(e^z - 1) = -1/2 + 1/z + sum_{k >= 1} 2z / (z^2 + 4 pi^2 k^2).

The -1/2 is the same correction constant the spectral difference solver
needs, and the k = 0 zero contributes the 1/z pole.  Each +-k pair is
combined algebraically into 2z/(z^2 + 4 pi^2 k^2) before accumulation:
that removes the catastrophic cancellation of the one-sided sums (which
diverge separately) and bakes the symmetric summation into the formula.

Expanding the same mode sum about z = 0 term by term gives the Laurent
data: the coefficient of z^j in sum_{k != 0} 1/(z - 2 k pi i) is
-sum_{k != 0} (2 k pi i)^(-(j+1)), which converges to B_{j+1}/(j+1)! for
odd j and cancels exactly for even j.
"""

from __future__ import annotations

import math

__all__ = [
    "POLE_EXCLUSION_RADIUS",
    "PoleProximityError",
    "pfd_eval",
    "characteristic_zeros",
    "laurent_from_modes",
]

TWO_PI = 2.0 * math.pi

POLE_EXCLUSION_RADIUS = 1e-6


class PoleProximityError(ValueError):
    """Evaluation point is within the exclusion radius of a pole 2*k*pi*i."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(
            f"evaluation point is within {POLE_EXCLUSION_RADIUS:g} of the "
            f"pole 2*pi*i*k at k={k}")


def pfd_eval(z: complex, truncation_order: int) -> complex:
    """Truncated partial fraction value of 1/(e^z - 1) at z.

    Requires |z - 2*k*pi*i| > POLE_EXCLUSION_RADIUS for all |k| <= K+1; the
    K+1 guard keeps the first *omitted* pole at a safe distance too.
    """
    if truncation_order < 1:
        raise ValueError("truncation order must be >= 1")
    z = complex(z)
    for k in range(0, truncation_order + 2):
        pole = complex(0.0, TWO_PI * k)
        if abs(z - pole) <= POLE_EXCLUSION_RADIUS:
            raise PoleProximityError(k)
        if k and abs(z + pole) <= POLE_EXCLUSION_RADIUS:
            raise PoleProximityError(-k)
    total = -0.5 + 1.0 / z
    z_squared = z * z
    for k in range(1, truncation_order + 1):
        total += 2.0 * z / (z_squared + (TWO_PI * k) ** 2)
    return total


def characteristic_zeros(truncation_order: int) -> list[complex]:
    """The zeros of e^z - 1 with |k| <= K: 0, then +-2*k*pi*i ascending."""
    if truncation_order < 1:
        raise ValueError("truncation order must be >= 1")
    zeros = [0j]
    for k in range(1, truncation_order + 1):
        zeros.append(complex(0.0, TWO_PI * k))
        zeros.append(complex(0.0, -TWO_PI * k))
    return zeros


def laurent_from_modes(j: int, truncation_order: int) -> complex:
    """Coefficient of z^j in the truncated mode sum about z = 0.

    Returns -sum_{1 <= |k| <= K} (2 k pi i)^(-(j+1)) with +-k paired.  For
    even j the pair members are opposite and the sum is exactly zero; for
    odd j the pair combines to 2 * (+-1) * (2 pi k)^(-(j+1)) and the total
    converges to B_{j+1}/(j+1)!.
    """
    if j < 0:
        raise ValueError("power index must be >= 0")
    if truncation_order < 1:
        raise ValueError("truncation order must be >= 1")
    exponent = -(j + 1)
    if exponent % 2 != 0:
        return 0j
    # i^exponent for even exponent: +1 when exponent/2 is even, else -1.
    sign = 1.0 if (exponent // 2) % 2 == 0 else -1.0
    acc = 0.0
    for k in range(1, truncation_order + 1):
        acc += (TWO_PI * k) ** exponent
    return complex(-2.0 * sign * acc, 0.0)
