"""Command-line interface: ``qhsing analyze | tables | catalog | verify``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import numcheck
from .catalog import TypeTag, catalog_normal_form, catalog_weights, normal_form_text, variable_names
from .errors import (
    DegenerateWeights,
    NotIsolated,
    NotQuasihomogeneous,
    OutOfRange,
    ForbiddenModulus,
    ParseError,
    SingularityError,
    UnusedVariable,
)
from .exactpoly import Poly, format_rat, parse_polynomial
from .report import analyze
from .tables import emit_tables, parse_k_range, render_markdown
from .weights import find_weights

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_NOT_QH = 3
EXIT_DEGENERATE = 4
EXIT_NOT_ISOLATED = 5


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (ParseError, OutOfRange, ForbiddenModulus, ValueError)):
        return EXIT_PARSE
    if isinstance(exc, NotQuasihomogeneous):
        return EXIT_NOT_QH
    if isinstance(exc, DegenerateWeights):
        return EXIT_DEGENERATE
    # an absent variable makes its whole axis critical
    if isinstance(exc, (NotIsolated, UnusedVariable)):
        return EXIT_NOT_ISOLATED
    return EXIT_INTERNAL


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _cmd_analyze(args: argparse.Namespace) -> int:
    names = [v.strip() for v in args.vars.split(",")] if args.vars else None
    report = analyze(args.polynomial, names, args.p)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_markdown())
    return EXIT_OK


def _cmd_tables(args: argparse.Namespace) -> int:
    k_range = parse_k_range(args.k_range) if args.k_range else None
    rows = emit_tables(args.which, args.n, k_range, args.modulus)
    if args.format == "json":
        doc = {"table": args.which, "n": args.n, "rows": rows}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(render_markdown(args.which, rows))
    return EXIT_OK


def _cmd_catalog(args: argparse.Namespace) -> int:
    tag = TypeTag.parse(args.tag)
    text = normal_form_text(tag, args.n, args.modulus)
    poly = catalog_normal_form(tag, args.n, args.modulus)
    w = find_weights(poly)
    doc = {
        "type": str(tag),
        "n": args.n,
        "variables": variable_names(args.n),
        "normal_form": poly.to_string(variable_names(args.n)),
        "template_weights": [format_rat(a) for a in catalog_weights(tag, args.n)],
        "weights": [format_rat(a) for a in w.a],
        "kappa": format_rat(w.kappa),
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"{doc['type']} (n={args.n}): {text}\n"
            f"weights: {', '.join(doc['weights'])}\nkappa: {doc['kappa']}\n"
        )
    return EXIT_OK


# verification suite

def verification_checks(seed: int = 0, nodes: int = numcheck.DEFAULT_NODES, points: int = 100):
    """Yield (name, passed, detail) for each numerical check."""
    rng = np.random.default_rng(seed)
    for radius in (1.0, 0.01):
        res = numcheck.circle_integral("dy/y", radius, nodes)
        yield f"circle dy/y r={radius}", res.abs_error < 1e-10, f"err={res.abs_error:.2e}"
    res = numcheck.circle_integral("dy/y^2", 1.0, nodes)
    yield "circle dy/y^2 r=1", res.abs_error < 1e-10, f"err={res.abs_error:.2e}"

    for base, v in (((-1, 0), (0, 1)), ((0, -1), (1, 0))):
        res = numcheck.p8_fiber_integral(*base, v, nodes)
        yield (
            f"P8 fiber integral at {base}",
            res.abs_error < 1e-8,
            f"value={res.value:.12f} err={res.abs_error:.2e}",
        )

    one = lambda nv: Poly.constant(nv, 1)  # noqa: E731
    surfaces = {
        "P8": parse_polynomial("z1^3+z2^3+z3^3", ["z1", "z2", "z3"]),
        "A1": parse_polynomial("z1^2+z2^2+z3^2", ["z1", "z2", "z3"]),
        "xy": parse_polynomial("x*y", ["x", "y"]),
    }
    for name, s in surfaces.items():
        worst = 0.0
        for z in numcheck.sample_smooth_points(s, points, rng):
            worst = max(worst, numcheck.residue_norm_check(s, one(s.nvars), z).abs_error)
        yield f"norm identity on {name} ({points} points)", worst < 1e-10, f"max err={worst:.2e}"

    grid = np.linspace(0.1, 1.0, 12)
    cases = [
        ("A1", surfaces["A1"], [1, 1, 1.4j], 2),
        ("A1", surfaces["A1"], [1, 1, 1.4j], 4),
        ("P8", surfaces["P8"], [1, -0.5, -1.0], 3),
    ]
    for name, s, guess, m in cases:
        w = find_weights(s)
        z = np.array(guess, dtype=complex)
        z[-1] = _complete_point(s, z)
        u0 = numcheck.phi_inverse(w, m, z)
        res = numcheck.orbit_slope(s, w, one(s.nvars), m, u0, grid)
        yield (
            f"orbit slope {name} m={m}",
            res.abs_error < 1e-3,
            f"slope={res.value:.6f} expected={res.reference:g}",
        )


def _complete_point(s: Poly, z: np.ndarray) -> complex:
    """Solve s = 0 for the last coordinate, keeping the root closest to the given guess."""
    j = s.nvars - 1
    coeffs: dict[int, complex] = {}
    for mono, c in s:
        term = complex(c)
        for i in range(j):
            term *= z[i] ** mono[i]
        coeffs[mono[j]] = coeffs.get(mono[j], 0) + term
    top = max(coeffs)
    roots = np.roots([coeffs.get(k, 0) for k in range(top, -1, -1)])
    return complex(roots[np.argmin(np.abs(roots - z[j]))])


def _cmd_verify(args: argparse.Namespace) -> int:
    failed = 0
    for name, ok, detail in verification_checks(args.seed, args.nodes, args.points):
        failed += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}")
    return EXIT_OK if not failed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhsing",
        description="Invariants and residue-lift criteria for quasihomogeneous isolated singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one polynomial germ")
    p.add_argument("polynomial", help="e.g. 'z1^3+z2^3+z3^3' (explicit '*' between factors)")
    p.add_argument("--vars", help="comma-separated variable order (default: natural sort of the names used)")
    p.add_argument("--p", type=_fraction, default=Fraction(2), help="integrability exponent (default 2)")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("tables", help="regenerate the characteristic polynomial or weights tables")
    p.add_argument("which", choices=("simple", "parabolic", "weights"))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k-range", help="inclusive range of k for A_k/D_k, e.g. 1..8")
    p.add_argument("--modulus", type=_fraction, default=None, help="modulus a for P8, X9, J10")
    p.add_argument("--format", choices=("json", "markdown"), default="markdown")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("catalog", help="print a normal form, e.g. A3, D5, E6, P8")
    p.add_argument("tag")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--modulus", type=_fraction, default=None)
    p.add_argument("--format", choices=("json", "markdown"), default="markdown")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", help="run the numerical verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nodes", type=int, default=numcheck.DEFAULT_NODES)
    p.add_argument("--points", type=int, default=100)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SingularityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # invariant violations and bugs
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
