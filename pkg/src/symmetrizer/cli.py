"""Command-line surface.

Subcommands: analyze, recover, check, generate, census. All reports are
JSON with every rational rendered as the string "p" or "p/q" (never a
float), under a versioned "schema" field. Exit codes: 0 success, 2 bad
input, 3 degenerate form where nondegeneracy was required, 4 fiber
mismatch, 5 internal invariant violation (includes failed identity
checks, which are engine bugs by construction).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Iterable

from .algebra import (
    CheckResult,
    FiberMismatchError,
    NilpotentReport,
    STDecomposition,
    check_identities,
    nilpotent_report,
    recover_symmetrizer,
    st_decompose,
    symmetrizer_algebra,
)
from .corpus import GeneratorError, GeneratorSpec, census, generate
from .forms import DegenerateFormError, ProjectivePoint, jacobian_kernel
from .linalg import InvariantError, Matrix, Vec
from .polytext import ParseError, format_poly, parse_poly

SCHEMA = 1

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_FIBER = 4
EXIT_INVARIANT = 5


def _rat(x: Fraction) -> str:
    return str(x)


def _vec(v: Vec) -> list[str]:
    return [_rat(x) for x in v]


def _matrix(m: Matrix) -> list[list[str]]:
    return [_vec(row) for row in m.rows]


def _point(p: ProjectivePoint) -> list[str]:
    return _vec(p.coords)


def _checks(results: dict[str, CheckResult]) -> dict[str, Any]:
    out = {}
    for key, res in results.items():
        status = "skipped" if res.status == "skip" else res.status
        entry: dict[str, Any] = {"status": status}
        if res.detail:
            entry["reason"] = res.detail
        out[key] = entry
    return out


def _st_blocks(dec: STDecomposition | None) -> Any:
    if dec is None:
        return None
    return {
        "k": dec.k,
        "splitting_element": _matrix(dec.splitting_element),
        "blocks": [
            {
                "basis": [_vec(v) for v in blk.basis],
                "form": format_poly(blk.form),
                "factor": str(blk.factor),
            }
            for blk in dec.blocks
        ],
    }


def _nilpotent(rep: NilpotentReport | None) -> Any:
    if rep is None:
        return None
    return {
        "classes": [
            {
                "coefficients": _vec(cl.coefficients),
                "matrix": _matrix(cl.matrix),
                "image_dim": cl.image_dim,
                "image_points": [
                    {"point": _point(pt), "vanishing_order": order}
                    for pt, order in cl.image_points
                ],
            }
            for cl in rep.classes
        ],
        "max_nilpotency_index": rep.max_nilpotency_index,
        "cube_zero_all": rep.cube_zero_all,
        "search_complete": rep.search_complete,
        "infinite_family": rep.infinite_family,
    }


def _parse_matrix_arg(text: str, n: int) -> Matrix:
    """Rows separated by ';', entries by ',', each entry "p" or "p/q"."""
    try:
        rows = [
            [Fraction(entry.strip()) for entry in row.split(",")]
            for row in text.split(";")
        ]
    except (ValueError, ZeroDivisionError) as exc:
        raise GeneratorError(f"bad matrix entry: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise GeneratorError(f"matrix must be {n}x{n}")
    return Matrix.from_rows(rows)


def _emit(obj: Any) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_analyze(args: argparse.Namespace) -> int:
    F = parse_poly(args.poly, args.nvars)
    A = symmetrizer_algebra(F)
    if not A.nondegenerate and args.require_nondegenerate:
        print("input form is degenerate", file=sys.stderr)
        return EXIT_DEGENERATE
    dec = None
    rep = None
    if A.nondegenerate:
        if A.dim_torus > 0:
            dec = st_decompose(F, seed=args.seed, algebra=A)
        rep = nilpotent_report(A)
    checks = check_identities(
        F,
        seed=args.seed,
        samples=args.samples,
        assume_finite_singular=args.assume_finite_singularities,
        algebra=A,
    )
    report = {
        "schema": SCHEMA,
        "polynomial": format_poly(F),
        "nvars": F.nvars,
        "degree": F.degree,
        "nondegenerate": A.nondegenerate,
        "kernel": None if A.nondegenerate else [_vec(v) for v in jacobian_kernel(F)],
        "dim_g": A.dim_total,
        "dim_torus": A.dim_torus,
        "dim_unipotent": A.dim_unipotent,
        "basis": [_matrix(b) for b in A.basis],
        "st_blocks": _st_blocks(dec),
        "nilpotent": _nilpotent(rep),
        "checks": _checks(checks),
    }
    _emit(report)
    return EXIT_OK


def _cmd_recover(args: argparse.Namespace) -> int:
    F = parse_poly(args.poly_from, args.nvars)
    Ft = parse_poly(args.poly_to, args.nvars if args.nvars else F.nvars)
    g = recover_symmetrizer(F, Ft)
    _emit({"schema": SCHEMA, "matrix": _matrix(g)})
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    F = parse_poly(args.poly, args.nvars)
    results = check_identities(
        F,
        seed=args.seed,
        samples=args.samples,
        assume_finite_singular=args.assume_finite_singularities,
    )
    _emit({"schema": SCHEMA, "polynomial": format_poly(F), "checks": _checks(results)})
    if any(res.status == "fail" for res in results.values()):
        print("identity check failed: engine invariant violated", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _spec_from_args(args: argparse.Namespace) -> GeneratorSpec:
    blocks = None
    if args.blocks:
        try:
            blocks = tuple(int(b) for b in args.blocks.split(","))
        except ValueError:
            raise GeneratorError(f"bad block sizes {args.blocks!r}") from None
    nilpotent = None
    if args.matrix:
        nilpotent = _parse_matrix_arg(args.matrix, args.nvars)
    return GeneratorSpec(
        kind=args.kind,
        nvars=args.nvars,
        degree=args.degree,
        seed=args.seed,
        coefficient_bound=args.bound,
        blocks=blocks,
        nilpotent=nilpotent,
    )


def _cmd_generate(args: argparse.Namespace) -> int:
    F = generate(_spec_from_args(args))
    print(format_poly(F))
    return EXIT_OK


def _specs_from_jsonl(lines: Iterable[str]) -> Iterable[GeneratorSpec]:
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            raise GeneratorError(f"line {lineno}: bad JSON ({exc})") from None
        if not isinstance(payload, dict) or "kind" not in payload:
            raise GeneratorError(f"line {lineno}: expected an object with a 'kind'")
        nilpotent = None
        if "matrix" in payload:
            nilpotent = _parse_matrix_arg(payload["matrix"], int(payload["nvars"]))
        try:
            yield GeneratorSpec(
                kind=payload["kind"],
                nvars=int(payload["nvars"]),
                degree=int(payload["degree"]),
                seed=int(payload.get("seed", 0)),
                coefficient_bound=int(payload.get("bound", 10)),
                blocks=tuple(payload["blocks"]) if "blocks" in payload else None,
                nilpotent=nilpotent,
            )
        except (KeyError, TypeError) as exc:
            raise GeneratorError(f"line {lineno}: {exc}") from None


def _cmd_census(args: argparse.Namespace) -> int:
    if args.specs == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.specs, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    for row in census(_specs_from_jsonl(lines)):
        sys.stdout.write(json.dumps(row) + "\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symmetrizer",
        description="Exact analysis of symmetrizer algebras of symmetric forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--nvars", type=int, default=None, help="variable count override")
        p.add_argument("--seed", type=int, default=0, help="seed for all sampling")
        p.add_argument(
            "--samples", type=int, default=8, help="sampled symmetrizers per check"
        )
        p.add_argument(
            "--assume-finite-singularities",
            action="store_true",
            help="assert the singular locus is finite, enabling the checks that need it",
        )

    p = sub.add_parser("analyze", help="full report for one form")
    p.add_argument("poly", help="polynomial text, e.g. 'x0^2*x1'")
    common(p)
    p.add_argument(
        "--require-nondegenerate",
        action="store_true",
        help="treat a degenerate input as an error (exit 3)",
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("recover", help="transport element between two forms")
    p.add_argument("poly_from")
    p.add_argument("poly_to")
    p.add_argument("--nvars", type=int, default=None)
    p.set_defaults(func=_cmd_recover)

    p = sub.add_parser("check", help="run the identity suite on one form")
    p.add_argument("poly")
    common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("generate", help="emit one corpus form as text")
    p.add_argument("kind", choices=["fermat", "random", "st_sum", "cone", "prescribed_nilpotent"])
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=10, help="coefficient bound")
    p.add_argument("--blocks", default=None, help="comma-separated sizes for st_sum")
    p.add_argument(
        "--matrix",
        default=None,
        help="nilpotent matrix for prescribed_nilpotent, rows ';'-separated, e.g. '0,0;1,0'",
    )
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("census", help="tabulate algebra data over a spec file")
    p.add_argument("specs", help="path to JSON-lines spec file, or '-' for stdin")
    p.set_defaults(func=_cmd_census)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GeneratorError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegenerateFormError as exc:
        print(f"degenerate form: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except FiberMismatchError as exc:
        print(f"fiber mismatch: {exc}", file=sys.stderr)
        return EXIT_FIBER
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def console_main() -> None:
    sys.exit(main())
