"""Command-line interface.

Thin layer over the library: every subcommand validates its flags, delegates
to the core modules, and prints deterministic output (no timestamps).  Exit
codes: 0 success / all checks passed, 1 failed verification, 2 usage error
(argparse's default), 3 I/O or certification errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import combinatorics as comb
from . import jsonio
from . import oeis
from . import operator_calculus as oc
from . import seq_algebra as sa
from . import verify
from .combinatorics import TriangleKind
from .errors import CatalanOpsError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


def _cmd_triangle(args) -> int:
    kind = TriangleKind[args.kind]
    start = 1 if kind is TriangleKind.B else 0
    rows = [comb.triangle_row(kind, n) for n in range(start, args.rows + 1)]
    if args.format == "table":
        for row in rows:
            print(" ".join(str(v) for v in row))
    elif args.format == "csv":
        for n, row in enumerate(rows, start=start):
            print(",".join([str(n)] + [str(v) for v in row]))
    else:
        doc = {
            "kind": args.kind,
            "rows": [{"n": n, "entries": [jsonio.BigInt(str(v)) for v in row]}
                     for n, row in enumerate(rows, start=start)],
        }
        sys.stdout.write(jsonio.dumps(doc))
    return EXIT_OK


def _cmd_seq_pow(args) -> int:
    power = sa.seq_power(sa.catalan_seq(args.len), args.k)
    if args.exact:
        entries = [jsonio.BigInt(str(v)) for v in power.entries]
    else:
        try:
            entries = [float(v) for v in power.entries]
        except OverflowError:
            print("error: entries exceed double range; rerun with --exact", file=sys.stderr)
            return EXIT_USAGE
    doc = {"sequence": f"catalan power {args.k}", "length": args.len, "entries": entries}
    sys.stdout.write(jsonio.dumps(doc))
    return EXIT_OK


def _cmd_seq_inv(args) -> int:
    inv = sa.catalan_inverse_power(args.k, args.len)
    norm = sa.weighted_norm(inv)
    bound = sa.inverse_norm_bound(args.k)
    doc = {
        "sequence": f"inverse of catalan power {args.k}",
        "length": args.len,
        "entries": [jsonio.BigInt(str(v)) for v in inv.entries],
        "norm": {
            "truncated": float(norm),
            "truncated_exact": jsonio.BigInt(f"{norm.numerator}/{norm.denominator}"),
            "limit": float(bound),
            "limit_exact": jsonio.BigInt(f"{bound.numerator}/{bound.denominator}"),
        },
    }
    sys.stdout.write(jsonio.dumps(doc))
    return EXIT_OK


def _cmd_polys(args) -> int:
    table = {
        "P": comb.row_polynomial_p,
        "Q": comb.row_polynomial_q,
        "catalan": comb.catalan_polynomial,
    }
    polys = [table[args.family](n) for n in range(args.n + 1)]
    doc = {
        "family": args.family,
        "polynomials": [
            {"n": n, "coefficients": [jsonio.BigInt(str(c)) for c in p.coeffs]}
            for n, p in enumerate(polys)
        ],
    }
    sys.stdout.write(jsonio.dumps(doc))
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"[{status}] {r.name}"
        if r.detail:
            line += f" -- {r.detail}"
        print(line)
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if args.report:
        doc = {
            "suite": args.suite,
            "passed": not failed,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
        }
        Path(args.report).write_text(jsonio.dumps(doc))
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def _load_matrix(path: str) -> np.ndarray:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CatalanOpsError(f"cannot read matrix file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CatalanOpsError(f"invalid JSON in {path}: {exc}") from exc
    try:
        return jsonio.matrix_from_doc(doc)
    except ValueError as exc:
        raise CatalanOpsError(str(exc)) from exc


def _cmd_op_eval(args) -> int:
    t = _load_matrix(args.matrix)
    value = oc.catalan_power(t, args.power, args.tol)
    sys.stdout.write(jsonio.dumps(jsonio.matrix_to_doc(value)))
    return EXIT_OK


def _cmd_op_residual(args) -> int:
    t = _load_matrix(args.matrix)
    op = oc.catalan_operator(t, args.tol)
    doc = {
        "method": op.method,
        "truncation": op.truncation,
        "residual": op.residual,
        "certificate": {
            "bound": op.certificate.bound,
            "checked_up_to": op.certificate.checked_up_to,
            "method": op.certificate.method,
        },
        "value": jsonio.matrix_to_doc(op.value),
    }
    sys.stdout.write(jsonio.dumps(doc))
    return EXIT_OK


def _cmd_op_spectrum_map(args) -> int:
    t = _load_matrix(args.matrix)
    report = oc.spectral_mapping_check(t, args.power)
    doc = {
        "power": args.power,
        "max_distance": report.max_distance,
        "eigenvalues": [{"re": v.real, "im": v.imag} for v in report.eigenvalues],
        "expected": [{"re": v.real, "im": v.imag} for v in report.expected],
        "computed": [{"re": v.real, "im": v.imag} for v in report.computed],
    }
    sys.stdout.write(jsonio.dumps(doc))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    curve = sa.SpectrumCurve.sample(args.power, args.samples)
    csv_text = curve.to_csv()
    if args.out:
        Path(args.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def _cmd_oeis_check(args) -> int:
    count = args.count
    seq_id = args.id
    try:
        computed = oeis.local_values(seq_id, count)
    except KeyError:
        print(f"no local generator for {seq_id}; known ids: A039598 A039599 "
              "A086347 A194725 A130970 A051550 A132863", file=sys.stderr)
        return EXIT_USAGE
    report = oeis.compare(seq_id, computed[:count], offline_only=not args.online)
    doc = {
        "id": seq_id,
        "count": count,
        "full_match": report.full_match,
        "match_length": report.match_length,
        "shift": report.shift,
        "first_mismatch": report.first_mismatch,
    }
    sys.stdout.write(jsonio.dumps(doc))
    return EXIT_OK if report.full_match else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-ops",
        description="Catalan triangles, the weighted convolution algebra, and the "
        "Catalan operator calculus for complex matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print rows of a Catalan triangle")
    p.add_argument("--kind", choices=["B", "A"], required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("seq", help="sequences in the weighted convolution algebra")
    seq_sub = p.add_subparsers(dest="seq_command", required=True)
    q = seq_sub.add_parser("pow", help="entries of a Catalan convolution power")
    q.add_argument("--k", type=int, required=True, help="number of convolution factors")
    q.add_argument("--len", type=int, required=True, help="truncation order N")
    q.add_argument("--exact", action="store_true", help="emit exact decimal strings")
    q.set_defaults(func=_cmd_seq_pow)
    q = seq_sub.add_parser("inv", help="convolution inverse of a Catalan power")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--len", type=int, required=True)
    q.set_defaults(func=_cmd_seq_inv)

    p = sub.add_parser("polys", help="row / Catalan polynomial coefficients")
    p.add_argument("--family", choices=["P", "Q", "catalan"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_polys)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES) + ["all"], required=True)
    p.add_argument("--report", help="write a JSON report to this path")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("op", help="Catalan operator calculus on JSON matrices")
    op_sub = p.add_subparsers(dest="op_command", required=True)
    q = op_sub.add_parser("eval", help="C(T)^J for a matrix T")
    q.add_argument("--matrix", required=True, help="path to {d, re, im} JSON")
    q.add_argument("--power", type=int, default=1)
    q.add_argument("--tol", type=float, default=1e-10)
    q.set_defaults(func=_cmd_op_eval)
    q = op_sub.add_parser("residual", help="quadratic residual report for C(T)")
    q.add_argument("--matrix", required=True)
    q.add_argument("--tol", type=float, default=1e-10)
    q.set_defaults(func=_cmd_op_residual)
    q = op_sub.add_parser("spectrum-map", help="eigenvalue mapping check for C(T)^J")
    q.add_argument("--matrix", required=True)
    q.add_argument("--power", type=int, required=True)
    q.set_defaults(func=_cmd_op_spectrum_map)

    p = sub.add_parser("spectrum", help="sample a spectrum boundary curve as CSV")
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--out", help="output CSV path (stdout when omitted)")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("oeis", help="cross-check computed values against OEIS fixtures")
    oeis_sub = p.add_subparsers(dest="oeis_command", required=True)
    q = oeis_sub.add_parser("check", help="compare a sequence against its reference")
    q.add_argument("--id", required=True, help="OEIS id, e.g. A086347")
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--online", action="store_true",
                   help="allow a network fetch when no fixture exists")
    q.set_defaults(func=_cmd_oeis_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CatalanOpsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
