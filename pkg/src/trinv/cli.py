"""Command-line front end.

Subcommands::

    trinv invert   --input F | --gen SPEC  [--method M] [--output F]
    trinv compare  --input F | --gen SPEC  [--methods a,b,c] [--format json|text]
    trinv bench    --gen-family SPEC --sizes n1,n2 [--reps K] [--methods ...] [--out F.csv]
    trinv residual --matrix F --inverse F

Generator SPEC strings are described in :mod:`trinv.generators`; the bench
family uses a literal ``N`` for the order, e.g. ``toeplitz(N, 1, 2016, 1)``.
Exit codes: 0 success, 1 method failure (invert), 2 usage or input error.
"""

import argparse
import sys

from .bench import (
    METHOD_NAMES,
    compare_to_json,
    compare_to_text,
    invert_with,
    run_bench,
    run_compare,
    write_bench_csv,
)
from .core import EPS, residual_report
from .errors import TridiagonalError
from .generators import generate, parse_generator
from .matio import read_dense, read_matrix, write_dense

USAGE_ERROR = 2
METHOD_FAILURE = 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="trinv",
        description="Invert tridiagonal matrices by ratio recursions and "
        "classic recursive methods; compare and benchmark them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invert", help="invert one matrix with one method")
    src = inv.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="F", help="matrix file (tridiag format)")
    src.add_argument("--gen", metavar="SPEC", help="generator spec")
    inv.add_argument(
        "--method", default="ratio-ext", choices=sorted(METHOD_NAMES), help="inversion method"
    )
    inv.add_argument("--output", metavar="F", help="write the inverse as CSV (default stdout)")
    inv.set_defaults(func=_cmd_invert)

    cmp_ = sub.add_parser("compare", help="run several methods and report residuals")
    src = cmp_.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="F", help="matrix file (tridiag format)")
    src.add_argument("--gen", metavar="SPEC", help="generator spec")
    cmp_.add_argument(
        "--methods",
        default=",".join(METHOD_NAMES),
        help="comma-separated method names (default: all)",
    )
    cmp_.add_argument("--format", default="text", choices=("json", "text"), help="output format")
    cmp_.set_defaults(func=_cmd_compare)

    bench = sub.add_parser("bench", help="time and count methods across sizes")
    bench.add_argument(
        "--gen-family", required=True, metavar="SPEC", help="generator spec with N as the order"
    )
    bench.add_argument("--sizes", required=True, help="comma-separated ascending orders")
    bench.add_argument("--reps", type=int, default=3, help="repetitions per cell (default 3)")
    bench.add_argument(
        "--methods", default=None, help="comma-separated method names (default: all but gepp)"
    )
    bench.add_argument("--out", metavar="F.csv", help="CSV output path (default stdout)")
    bench.set_defaults(func=_cmd_bench)

    res = sub.add_parser("residual", help="residual report for a stored matrix/inverse pair")
    res.add_argument("--matrix", required=True, metavar="F", help="matrix file (tridiag format)")
    res.add_argument("--inverse", required=True, metavar="F", help="candidate inverse (CSV)")
    res.set_defaults(func=_cmd_residual)
    return parser


def _load_matrix(args):
    if args.input is not None:
        return read_matrix(args.input), args.input
    return generate(parse_generator(args.gen)), args.gen


def _cmd_invert(args):
    A, _ = _load_matrix(args)
    try:
        X, _ = invert_with(args.method, A)
    except TridiagonalError as exc:
        print(f"trinv: {args.method} failed ({exc.status}): {exc}", file=sys.stderr)
        return METHOD_FAILURE
    if args.output:
        write_dense(args.output, X)
    else:
        for row in X.entries:
            print(",".join(repr(float(v)) for v in row))
    return 0


def _cmd_compare(args):
    A, descriptor = _load_matrix(args)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    report = run_compare(A, methods, descriptor=descriptor)
    if args.format == "json":
        print(compare_to_json(report))
    else:
        print(compare_to_text(report), end="")
    return 0


def _cmd_bench(args):
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    methods = None
    if args.methods is not None:
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    rows = run_bench(args.gen_family, sizes, repetitions=args.reps, methods=methods)
    if args.out:
        write_bench_csv(rows, args.out)
    else:
        columns = ["method", "n", "status", "ops", "reps", "time_ns_best", "time_ns_mean"]
        print(",".join(columns))
        for row in rows:
            print(",".join("" if row[c] is None else str(row[c]) for c in columns))
    return 0


def _cmd_residual(args):
    A = read_matrix(args.matrix)
    X = read_dense(args.inverse)
    rep = residual_report(A, X, method="file")
    print(f"n={rep.n}   eps={EPS:.3e}")
    for side, norms in (("right (AX-I)", rep.right_residual), ("left (XA-I)", rep.left_residual)):
        cells = "  ".join(f"{kind}={value:.6e}" for kind, value in norms.items())
        print(f"{side}: {cells}")
    print(f"elementwise max: right={rep.elementwise_max_right:.6e} left={rep.elementwise_max_left:.6e}")
    print(f"cond_1={rep.cond_1:.6e}   cond_2_estimate={rep.cond_2_estimate:.6e}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"trinv: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
