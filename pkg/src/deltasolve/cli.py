"""Command-line frontend.

Exit codes: 0 on success, 1 on a domain error (pole proximity, repeated
characteristic roots, degree overflow, division by zero), 2 on a usage
error (unknown subcommand, malformed literal, bad flag value).

Every subcommand prints a single plain-text value built from the documented
grammars (rational, polynomial, complex literals), or with ``--format json``
one envelope ``{"command", "inputs", "result", "meta"}`` whose numbers carry
exactly the digits of the plain rendering.  Output is bit-for-bit
reproducible for a fixed invocation, including across ``--threads`` values.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from .bernoulli import antidifference_polynomial, bernoulli, faulhaber
from .ode import (CharacteristicPolynomial, MultipleRootUnsupported,
                  RootFindingError, solve_linear_ode)
from .partial_fractions import PoleProximityError, pfd_eval
from .polynomials import (ComplexPolynomial, Polynomial, format_complex,
                          format_complex_polynomial, format_polynomial,
                          format_real_polynomial, parse_complex,
                          parse_polynomial)
from .rationals import format_rational
from .reports import (AB_COMPARISON_HEADER, PFD_CONVERGENCE_HEADER,
                      RESIDUAL_DECAY_HEADER, ab_comparison_rows,
                      pfd_convergence_rows, residual_decay_rows)
from .spectral import DegreeOverflowError, SpectralConfig, euler_gap, spectral_solve
from .zeta import zeta_even_closed_form, zeta_partial_sum

__all__ = ["main"]

_DOMAIN_ERRORS = (PoleProximityError, MultipleRootUnsupported, RootFindingError,
                  DegreeOverflowError, ZeroDivisionError, ValueError)

_DEFAULT_RESIDUAL_KS = [10, 100, 1000]
_DEFAULT_SWEEP_KS = [100, 1000, 10000]
_DEFAULT_PFD_ZS = [complex(1.0), complex(-1.0), complex(0.5, 0.5),
                   complex(0.0, math.pi), complex(2.7)]


# ----------------------------------------------------------------------
# argparse types (failures here are usage errors, exit code 2)
# ----------------------------------------------------------------------

def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive_int(text: str) -> int:
    value = _nonnegative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _float_arg(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _poly_arg(text: str) -> Polynomial:
    try:
        return parse_polynomial(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial literal: {exc}")


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex literal: {exc}")


def _coeff_list_arg(text: str) -> tuple[complex, ...]:
    parts = text.split(",")
    if len(parts) < 2:
        raise argparse.ArgumentTypeError(
            "need at least two comma-separated coefficients (degree >= 1)")
    coeffs = tuple(_complex_arg(part) for part in parts)
    if coeffs[-1] == 0:
        raise argparse.ArgumentTypeError("leading coefficient must be nonzero")
    return coeffs


def _k_list_arg(text: str) -> list[int]:
    return [_positive_int(part) for part in text.split(",")]


def _z_list_arg(text: str) -> list[complex]:
    return [_complex_arg(part) for part in text.split(",")]


# ----------------------------------------------------------------------
# subcommand handlers; each returns (plain, inputs, result, meta_K)
# ----------------------------------------------------------------------

def _run_bernoulli(args):
    value = format_rational(bernoulli(args.n))
    return value, {"n": args.n}, {"value": value}, None


def _run_faulhaber(args):
    rendered = format_polynomial(faulhaber(args.n))
    return rendered, {"n": args.n}, {"polynomial": rendered}, None


def _run_antidiff(args):
    rendered = format_polynomial(antidifference_polynomial(args.g))
    return rendered, {"g": format_polynomial(args.g)}, {"polynomial": rendered}, None


def _run_spectral(args):
    config = SpectralConfig(args.K, include_correction=not args.uncorrected)
    solution = spectral_solve(args.g, config)
    rendered = format_real_polynomial(solution.polynomial_part.real_coefficients())
    inputs = {"g": format_polynomial(args.g), "K": args.K,
              "include_correction": config.include_correction}
    return rendered, inputs, {"polynomial": rendered}, args.K


def _run_euler_gap(args):
    value = euler_gap(args.g, args.x, args.K)
    inputs = {"g": format_polynomial(args.g), "x": args.x, "K": args.K}
    return repr(value), inputs, {"value": value}, args.K


def _run_pfd(args):
    rendered = format_complex(pfd_eval(args.z, args.K))
    inputs = {"z": format_complex(args.z), "K": args.K}
    return rendered, inputs, {"value": rendered}, args.K


def _run_zeta(args):
    closed = zeta_even_closed_form(args.j)
    value = closed.value()
    coefficient = format_rational(closed.coefficient)
    plain = f"{coefficient}*pi^{closed.pi_power} = {value!r}"
    result = {"coefficient": coefficient, "pi_power": closed.pi_power,
              "value": value}
    if args.oracle_N is not None:
        lower, upper = zeta_partial_sum(args.j, args.oracle_N)
        contains = lower <= value <= upper
        plain += (f"\nbracket N={args.oracle_N}: [{lower!r}, {upper!r}] "
                  f"contains={str(contains).lower()}")
        result["bracket"] = [lower, upper]
        result["bracket_N"] = args.oracle_N
        result["contains"] = contains
    return plain, {"j": args.j, "oracle_N": args.oracle_N}, result, None


def _run_ode(args):
    operator = CharacteristicPolynomial(args.coeffs)
    solution = solve_linear_ode(operator, args.g)
    poly = solution.terms[0].polynomial if solution.terms else ComplexPolynomial.zero()
    rendered = format_complex_polynomial(poly)
    inputs = {"coeffs": [format_complex(c) for c in args.coeffs],
              "g": format_polynomial(args.g)}
    return rendered, inputs, {"solution": rendered}, None


def _run_report(args):
    if args.study == "residual-decay":
        k_values = args.K_list or _DEFAULT_RESIDUAL_KS
        header = RESIDUAL_DECAY_HEADER
        rows = residual_decay_rows(args.g, k_values, threads=args.threads)
        inputs = {"study": args.study, "g": format_polynomial(args.g),
                  "K_list": list(k_values), "out": args.out}
    elif args.study == "pfd-convergence":
        k_values = args.K_list or _DEFAULT_SWEEP_KS
        z_values = args.z_list or _DEFAULT_PFD_ZS
        header = PFD_CONVERGENCE_HEADER
        rows = pfd_convergence_rows(z_values, k_values, threads=args.threads)
        inputs = {"study": args.study,
                  "z_list": [format_complex(z) for z in z_values],
                  "K_list": list(k_values), "out": args.out}
    else:
        k_values = args.K_list or _DEFAULT_SWEEP_KS
        n_values = list(range(1, args.n_max + 1))
        header = AB_COMPARISON_HEADER
        rows = ab_comparison_rows(n_values, k_values, threads=args.threads)
        inputs = {"study": args.study, "n_max": args.n_max,
                  "K_list": list(k_values), "out": args.out}
    with open(args.out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return "", inputs, {"study": args.study, "rows": len(rows), "out": args.out}, None


_HANDLERS = {
    "bernoulli": _run_bernoulli,
    "faulhaber": _run_faulhaber,
    "antidiff": _run_antidiff,
    "spectral": _run_spectral,
    "euler-gap": _run_euler_gap,
    "pfd": _run_pfd,
    "zeta": _run_zeta,
    "ode": _run_ode,
    "report": _run_report,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default="plain",
                        help="output format (default: plain)")
    common.add_argument("--threads", type=_positive_int, default=1,
                        help="worker threads for sweep studies (default: 1); "
                             "results are identical for any value")

    parser = argparse.ArgumentParser(
        prog="deltasolve",
        description="Exact and spectral solvers for f(x+1) - f(x) = g(x).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", parents=[common],
                       help="Bernoulli number B_n (B_1 = -1/2 convention)")
    p.add_argument("n", type=_nonnegative_int)

    p = sub.add_parser("faulhaber", parents=[common],
                       help="power-sum polynomial for sum_{k=1}^{x} k^n")
    p.add_argument("n", type=_nonnegative_int)

    p = sub.add_parser("antidiff", parents=[common],
                       help="exact antidifference: f with f(x+1)-f(x)=g, f(0)=0")
    p.add_argument("--g", type=_poly_arg, required=True,
                   help="polynomial with rational coefficients, e.g. '1/2*x^2 - x'")

    p = sub.add_parser("spectral", parents=[common],
                       help="truncated spectral solution of f(x+1)-f(x)=g")
    p.add_argument("--g", type=_poly_arg, required=True)
    p.add_argument("--K", type=_positive_int, required=True,
                   help="mode truncation order (pairs 1 <= |k| <= K)")
    p.add_argument("--uncorrected", action="store_true",
                   help="omit the -g/2 correction term")

    p = sub.add_parser("euler-gap", parents=[common],
                       help="uncorrected minus corrected solution at x (= g(x)/2)")
    p.add_argument("--g", type=_poly_arg, required=True)
    p.add_argument("--x", type=_float_arg, required=True)
    p.add_argument("--K", type=_positive_int, required=True)

    p = sub.add_parser("pfd", parents=[common],
                       help="truncated partial-fraction value of 1/(e^z - 1)")
    p.add_argument("--z", type=_complex_arg, required=True,
                   help="complex literal a+bi, e.g. '0.5+0.5i'")
    p.add_argument("--K", type=_positive_int, required=True)

    p = sub.add_parser("zeta", parents=[common],
                       help="exact zeta(2j) as a rational multiple of pi^(2j)")
    p.add_argument("--j", type=_positive_int, required=True)
    p.add_argument("--oracle-N", dest="oracle_N", type=_positive_int,
                   default=None,
                   help="also print the N-term integral-test bracket; keep N "
                        "modest for large j, the width ~N^(1-2j) must stay "
                        "above double rounding for containment to be "
                        "certifiable")

    p = sub.add_parser("ode", parents=[common],
                       help="particular solution of a_0 f + a_1 f' + ... = g")
    p.add_argument("--coeffs", type=_coeff_list_arg, required=True,
                   help="comma-separated complex literals a_0,...,a_n; use "
                        "--coeffs=-1,0,1 when the first one is negative")
    p.add_argument("--g", type=_poly_arg, required=True)

    p = sub.add_parser("report", parents=[common],
                       help="write a convergence-study CSV")
    p.add_argument("study", choices=("residual-decay", "pfd-convergence",
                                     "ab-comparison"))
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--g", type=_poly_arg, default=Polynomial((0, 0, 1)),
                   help="forcing for residual-decay (default: x^2)")
    p.add_argument("--K-list", dest="K_list", type=_k_list_arg, default=None,
                   help="comma-separated truncation orders")
    p.add_argument("--z-list", dest="z_list", type=_z_list_arg, default=None,
                   help="comma-separated complex points for pfd-convergence")
    p.add_argument("--n-max", dest="n_max", type=_positive_int, default=6,
                   help="largest forcing degree for ab-comparison (default: 6)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        plain, inputs, result, meta_k = _HANDLERS[args.command](args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        envelope = {"command": args.command, "inputs": inputs,
                    "result": result, "meta": {"K": meta_k}}
        print(json.dumps(envelope))
    elif plain:
        print(plain)
    return 0


if __name__ == "__main__":
    sys.exit(main())
