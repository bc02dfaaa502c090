"""Constant-coefficient linear ODEs solved through characteristic roots.

For the operator P(D) = a_0 + a_1 D + ... + a_n D^n (D = d/dx) with simple
characteristic roots, a particular solution for polynomial forcing g is

    f = sum over roots r of (1/P'(r)) e^{r x} integral(e^{-r x} g dx),

where each nonzero-root term is the closed-form polynomial from
``exp_poly_integral`` and a zero root (a_0 = 0) contributes the plain
antiderivative divided by P'(0).  With all integration constants zero every
term is a polynomial, so the returned ``ExpPoly`` collapses to a single
exponent-zero term.  Repeated or numerically near-multiple roots are outside
this method and abort with ``MultipleRootUnsupported`` rather than return
something half-right.

Roots come from a Weierstrass (Durand-Kerner) simultaneous iteration started
on a perturbed circle whose radius is the Cauchy bound, then polished with a
few Newton steps.  The iteration is sequential and the starting points are
fixed, so the returned ordering (sorted by real part, then imaginary part)
and everything accumulated from it is deterministic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .polynomials import ComplexPolynomial, Polynomial
from .spectral import exp_poly_integral

__all__ = [
    "MIN_ROOT_SEPARATION",
    "RootFinderSettings",
    "RootFindingError",
    "MultipleRootUnsupported",
    "CharacteristicPolynomial",
    "ExpPolyTerm",
    "ExpPoly",
    "find_roots",
    "solve_linear_ode",
    "apply_operator",
]

MIN_ROOT_SEPARATION = 1e-6
DERIVATIVE_MAGNITUDE_FLOOR = 1e-8
RESIDUAL_SCALE = 1e-9
EXPONENT_MERGE_TOLERANCE = 1e-9
NEWTON_POLISH_STEPS = 3


class RootFindingError(RuntimeError):
    """Simultaneous iteration failed to converge or verify."""


class MultipleRootUnsupported(ValueError):
    """Repeated (or numerically indistinguishable) characteristic roots."""


@dataclass(frozen=True)
class RootFinderSettings:
    tolerance: float = 1e-12
    max_iterations: int = 200


@dataclass(frozen=True)
class CharacteristicPolynomial:
    """P(z) = a_0 + a_1 z + ... + a_n z^n with a_n != 0 and n >= 1."""

    coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coefficients)
        if len(coeffs) < 2:
            raise ValueError("characteristic polynomial needs degree >= 1")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def value(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def derivative_value(self, z: complex) -> complex:
        acc = 0j
        for i in range(self.degree, 0, -1):
            acc = acc * z + self.coefficients[i] * i
        return acc


def find_roots(polynomial: CharacteristicPolynomial,
               settings: RootFinderSettings | None = None) -> list[complex]:
    """All roots, sorted by (real, imaginary); simple roots only.

    Raises ``MultipleRootUnsupported`` when two estimates land closer than
    MIN_ROOT_SEPARATION or |P'| at a root is below the derivative floor,
    and ``RootFindingError`` on non-convergence or a failed residual check.
    """
    settings = settings or RootFinderSettings()
    n = polynomial.degree
    leading = polynomial.coefficients[-1]
    monic = [c / leading for c in polynomial.coefficients[:-1]]

    def monic_value(z: complex) -> complex:
        acc = 1 + 0j
        for i in range(n - 1, -1, -1):
            acc = acc * z + monic[i]
        return acc

    # Perturbed circle: Cauchy bound radius, angles offset off the axes so
    # real-coefficient symmetry cannot trap the iteration.
    radius = 1.0 + max(abs(b) for b in monic)
    estimates = [radius * cmath.exp(1j * (2.0 * math.pi * j / n + math.pi / (2 * n)))
                 for j in range(n)]

    converged = False
    for _ in range(settings.max_iterations):
        largest_step = 0.0
        for idx in range(n):
            z = estimates[idx]
            denom = 1 + 0j
            for other in range(n):
                if other != idx:
                    denom *= z - estimates[other]
            if denom == 0:
                # Two estimates collided mid-flight; nudge deterministically.
                estimates[idx] = z + 1e-6
                largest_step = math.inf
                continue
            step = monic_value(z) / denom
            estimates[idx] = z - step
            largest_step = max(largest_step, abs(step))
        scale = 1.0 + max(abs(z) for z in estimates)
        if largest_step <= settings.tolerance * scale:
            converged = True
            break

    for idx in range(n):
        z = estimates[idx]
        for _ in range(NEWTON_POLISH_STEPS):
            slope = polynomial.derivative_value(z)
            if slope == 0:
                break
            z = z - polynomial.value(z) / slope
        estimates[idx] = z

    roots = sorted(estimates, key=lambda r: (r.real, r.imag))
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < MIN_ROOT_SEPARATION:
                raise MultipleRootUnsupported(
                    f"roots {roots[i]} and {roots[j]} are closer than "
                    f"{MIN_ROOT_SEPARATION:g}")
    for root in roots:
        if abs(polynomial.derivative_value(root)) < DERIVATIVE_MAGNITUDE_FLOOR:
            raise MultipleRootUnsupported(
                f"|P'({root})| is below {DERIVATIVE_MAGNITUDE_FLOOR:g}")
    if not converged:
        raise RootFindingError(
            f"no convergence after {settings.max_iterations} iterations")
    residual_scale = max(abs(c) for c in polynomial.coefficients)
    for root in roots:
        if abs(polynomial.value(root)) > RESIDUAL_SCALE * residual_scale:
            raise RootFindingError(
                f"root {root} fails the residual check: "
                f"|P(root)| = {abs(polynomial.value(root)):.3e}")
    return roots


@dataclass(frozen=True)
class ExpPolyTerm:
    exponent: complex
    polynomial: ComplexPolynomial


@dataclass(frozen=True)
class ExpPoly:
    """A finite sum of terms e^{a x} p(x), canonicalised.

    Exponents closer than EXPONENT_MERGE_TOLERANCE are merged and terms with
    a zero polynomial are dropped, so the zero function is the empty sum.
    """

    terms: tuple[ExpPolyTerm, ...] = ()

    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls()

    @classmethod
    def from_terms(cls, pairs) -> "ExpPoly":
        merged: list[list] = []
        for exponent, poly in pairs:
            exponent = complex(exponent)
            for slot in merged:
                if abs(slot[0] - exponent) <= EXPONENT_MERGE_TOLERANCE:
                    slot[1] = slot[1] + poly
                    break
            else:
                merged.append([exponent, poly])
        kept = [(a, p) for a, p in merged if not p.is_zero]
        kept.sort(key=lambda item: (item[0].real, item[0].imag))
        return cls(tuple(ExpPolyTerm(a, p) for a, p in kept))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, x: float) -> complex:
        return sum((cmath.exp(term.exponent * x) * term.polynomial(x)
                    for term in self.terms), 0j)


def solve_linear_ode(polynomial: CharacteristicPolynomial,
                     forcing: Polynomial) -> ExpPoly:
    """A particular solution of P(D) f = forcing for simple roots.

    Accumulation order is fixed: the zero root (if a_0 = 0) first, then the
    nonzero roots in the order ``find_roots`` returns them.
    """
    coeffs = polynomial.coefficients
    has_zero_root = coeffs[0] == 0
    if has_zero_root:
        if coeffs[1] == 0:
            raise MultipleRootUnsupported("zero is a repeated characteristic root")
        if len(coeffs) > 2:
            deflated = CharacteristicPolynomial(coeffs[1:])
            nonzero_roots = find_roots(deflated)
        else:
            nonzero_roots = []
        for root in nonzero_roots:
            if abs(root) < MIN_ROOT_SEPARATION:
                raise MultipleRootUnsupported(
                    f"root {root} collides with the zero root")
    else:
        nonzero_roots = find_roots(polynomial)

    forcing_coeffs = tuple(complex(float(c)) for c in forcing.coefficients)
    total = ComplexPolynomial.zero()
    if has_zero_root:
        # e^{0 x} integral(e^{0 x} g) is the plain antiderivative; P'(0) = a_1.
        total = total + ComplexPolynomial.from_exact(
            forcing.antiderivative()) * (1.0 / coeffs[1])
    for root in nonzero_roots:
        slope = polynomial.derivative_value(root)
        if abs(slope) < DERIVATIVE_MAGNITUDE_FLOOR:
            raise MultipleRootUnsupported(
                f"|P'({root})| is below {DERIVATIVE_MAGNITUDE_FLOOR:g}")
        term = [0j] * len(forcing_coeffs)
        for power, coeff in enumerate(forcing_coeffs):
            if coeff == 0:
                continue
            mode = exp_poly_integral(root, power)
            for i, c in enumerate(mode.coefficients):
                term[i] += coeff * c
        total = total + ComplexPolynomial(term) * (1.0 / slope)
    return ExpPoly.from_terms([(0j, total)])


def apply_operator(polynomial: CharacteristicPolynomial, f: ExpPoly) -> ExpPoly:
    """P(D) applied to an ExpPoly, term by term.

    Uses (e^{a x} p)' = e^{a x} (a p + p'), so D^i maps the polynomial part
    through (a + d/dx)^i while the exponent is untouched.
    """
    out = []
    for term in f.terms:
        q = term.polynomial
        acc = ComplexPolynomial.zero()
        for coeff in polynomial.coefficients:
            if coeff != 0:
                acc = acc + q * coeff
            q = q * term.exponent + q.derivative()
        out.append((term.exponent, acc))
    return ExpPoly.from_terms(out)
