"""Command-line front end.

Subcommands::

    transform   c_n by the FFT pipeline            -> n,c_n
    oracle      c_n by direct quadrature           -> n,c_n
    compare     both, side by side                 -> n,c_fast,c_oracle,abs_error
    bench       timings over --n-list              -> N,fast_seconds,oracle_seconds,...
    table1      |x|^{3/2} check for even n <= 30   -> n,true_cn,computed_cn,abs_error

Exit status: 0 on success, 1 when ``table1`` exceeds its tolerance,
2 for usage, parse and input errors.
"""

from __future__ import annotations

import argparse
import sys
from decimal import ROUND_DOWN, Decimal, localcontext

from ._validation import default_grid_size, default_oracle_order
from .bench import BenchReport, run_bench
from .functions import FunctionSpec, parse_spec
from .legendre import abs32_reference_coeff, abs32_reference_exact
from .oracle import compare, oracle_coefficients
from .quadrature import gauss_legendre
from .spectral import legendre_transform

TABLE1_TOLERANCE = 1e-8
TABLE1_N = 32
TABLE1_M = 8192
TABLE1_K = 64


def fmt(value):
    """Locale-independent float text with 17 significant digits (round-trips)."""
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".17g")


def exact_decimal(fraction, places=20):
    """Fraction truncated to ``places`` decimals, as printed in reference tables."""
    with localcontext() as ctx:
        ctx.prec = places + 40
        d = Decimal(fraction.numerator) / Decimal(fraction.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_DOWN))


def render_rows(header, rows, style):
    if style == "csv":
        lines = [",".join(header)]
        lines += [",".join(cell if isinstance(cell, str) else fmt(cell) for cell in row) for row in rows]
        return "\n".join(lines) + "\n"
    text = [[cell if isinstance(cell, str) else fmt(cell) for cell in row] for row in rows]
    widths = [max([len(h)] + [len(r[i]) for r in text]) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in text]
    return "\n".join(lines) + "\n"


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _n_list(text):
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--function", default="abs32", help="integrand, e.g. exp, rational:0.5, pk:3, file:data.csv:cubic")
    common.add_argument("--n", type=_positive, default=32, help="number of coefficients N")
    common.add_argument("--m", type=_positive, default=None, help="grid size M (power of two, >= 2N)")
    common.add_argument("--k", type=_positive, default=64, help="Gauss-Legendre order for the Abel integral")
    common.add_argument("--q", type=_positive, default=None, help="oracle quadrature order Q")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--format", choices=("csv", "table"), default="csv")

    parser = argparse.ArgumentParser(prog="fastlegendre", description="Legendre coefficients via an Abel-type transform and one FFT.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("transform", parents=[common], help="fast O(N log N) coefficients")
    sub.add_parser("oracle", parents=[common], help="direct-quadrature coefficients")
    sub.add_parser("compare", parents=[common], help="fast vs oracle, entrywise")
    bench = sub.add_parser("bench", parents=[common], help="timing comparison")
    bench.add_argument("--n-list", type=_n_list, default=[1024, 4096, 16384])
    bench.add_argument("--repeats", type=_positive, default=5)
    # parent actions are shared between subparsers, so no per-subcommand set_defaults
    sub.add_parser("table1", parents=[common], help="|x|^{3/2} reference check (M defaults to 8192)")
    return parser


def _spec(args, parser):
    try:
        return parse_spec(args.function)
    except OSError as exc:
        parser.exit(2, f"{parser.prog}: error: cannot read function data: {exc}\n")
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        parser.exit(2, f"{parser.prog}: error: --function: {exc}\n")


def _transform(spec, args):
    M = args.m if args.m is not None else default_grid_size(args.n)
    return legendre_transform(spec, args.n, M, gauss_legendre(args.k))


def _oracle(spec, args):
    Q = args.q if args.q is not None else default_oracle_order(args.n)
    return oracle_coefficients(spec, args.n, Q)


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cmd = args.subcommand
    spec = FunctionSpec("abs32") if cmd == "table1" else _spec(args, parser)

    try:
        if cmd in ("transform", "oracle"):
            coeffs = (_transform if cmd == "transform" else _oracle)(spec, args)
            rows = [(n, c) for n, c in enumerate(coeffs.values)]
            _emit(args, render_rows(("n", "c_n"), rows, args.format))
        elif cmd == "compare":
            fast, slow = _transform(spec, args), _oracle(spec, args)
            report = compare(fast, slow)
            rows = [(n, a, b, e) for n, (a, b, e) in enumerate(zip(fast.values, slow.values, report.per_index_abs_error))]
            _emit(args, render_rows(("n", "c_fast", "c_oracle", "abs_error"), rows, args.format))
            print(f"max_abs_error={fmt(report.max_abs_error)} n_at_max={report.n_at_max}", file=sys.stderr)
        elif cmd == "bench":
            M_for = (lambda N: args.m) if args.m is not None else None
            Q_for = (lambda N: args.q) if args.q is not None else None
            report = run_bench(spec, args.n_list, args.k, args.repeats, 1, M_for, Q_for)
            rows = [tuple(getattr(r, f) for f in BenchReport.FIELDS) for r in report.rows]
            _emit(args, render_rows(BenchReport.FIELDS, rows, args.format))
        else:
            return _table1(spec, args)
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except OSError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    return 0


def _table1(spec, args):
    M = args.m if args.m is not None else TABLE1_M
    coeffs = legendre_transform(spec, TABLE1_N, M, gauss_legendre(args.k))
    rows = []
    worst = 0.0
    for n in range(0, TABLE1_N, 2):
        err = abs(coeffs.values[n] - abs32_reference_coeff(n))
        worst = max(worst, err)
        rows.append((n, exact_decimal(abs32_reference_exact(n)), coeffs.values[n], err))
    _emit(args, render_rows(("n", "true_cn", "computed_cn", "abs_error"), rows, args.format))
    if worst > TABLE1_TOLERANCE:
        print(f"table1: max abs error {fmt(worst)} exceeds {TABLE1_TOLERANCE:g}", file=sys.stderr)
        return 1
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
