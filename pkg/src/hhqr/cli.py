"""Command line entry point: ``hhqr qr|sweep|probe``."""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .core import Precision
from .experiment import ExperimentConfig, probe_corpus, run_sweep
from .householder import DimensionError, SignPolicy, form_q, qr_factorize
from .matrixfile import MatrixParseError, format_matrix, format_scalar, read_matrix
from .metrics import evaluate
from .plot import Y_DECADES, Y_DECADES_BINARY32, sweep_svg

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_OUTPUT = 4

CSV_HEADER = "p,delta,err_stable,err_wrong,orth_stable,orth_wrong,first_col_err_wrong"


def sweep_csv(records, precision: Precision = Precision.BINARY64) -> str:
    lines = [CSV_HEADER]
    for r in records:
        vals = [r.delta, r.err_stable, r.err_wrong, r.orth_stable, r.orth_wrong,
                r.first_col_err_wrong]
        lines.append(",".join([str(r.p), *(format_scalar(v, precision) for v in vals)]))
    return "\n".join(lines) + "\n"


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def cmd_qr(args) -> int:
    precision = Precision.parse(args.precision)
    try:
        a = read_matrix(args.input, precision)
    except MatrixParseError as e:
        print(f"error: {args.input}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        f = qr_factorize(a, SignPolicy(args.policy))
    except DimensionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DIMENSION
    q = form_q(f)
    report = evaluate(a, q, f.r)
    print("R")
    print(format_matrix(f.r, precision), end="")
    if args.show_q:
        print("Q")
        print(format_matrix(q, precision), end="")
    for field in dataclasses.fields(report):
        print(f"{field.name} = {format_scalar(getattr(report, field.name))}")
    return EXIT_OK


def _config(args) -> ExperimentConfig:
    return ExperimentConfig(m=args.m, n=args.n, p_min=args.p_min, p_max=args.p_max,
                            seed=args.seed, precision=Precision.parse(args.precision))


def cmd_sweep(args) -> int:
    try:
        cfg = _config(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DIMENSION
    records = run_sweep(cfg)
    csv_text = sweep_csv(records, cfg.precision)
    try:
        if args.csv:
            _write(args.csv, csv_text)
        else:
            sys.stdout.write(csv_text)
        if args.svg:
            y_decades = Y_DECADES_BINARY32 if cfg.precision is Precision.BINARY32 else Y_DECADES
            _write(args.svg, sweep_svg(records, y_decades=y_decades))
    except OSError as e:
        print(f"error: cannot write output: {e}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


def cmd_probe(args) -> int:
    try:
        cfg = ExperimentConfig(m=args.m, n=args.n, seed=args.seed,
                               precision=Precision.parse(args.precision))
        summary = probe_corpus(cfg, args.trials)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DIMENSION
    fields = dataclasses.asdict(summary)
    width = max(map(len, fields))
    for k, v in fields.items():
        print(f"{k:<{width}}  {v if isinstance(v, int) else format_scalar(v)}")
    print("# csv " + ",".join(fields))
    print(",".join(str(v) if isinstance(v, int) else format_scalar(v) for v in fields.values()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhqr", description="Householder QR with a stable or a wrong sign choice.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--precision", type=int, choices=[64, 32], default=64)

    p = sub.add_parser("qr", help="factor a matrix read from a text file")
    p.add_argument("input", help="file with header 'm n' then m rows of n numbers")
    p.add_argument("--policy", choices=[s.value for s in SignPolicy], default="stable")
    p.add_argument("--show-q", action="store_true", help="also print the explicit Q")
    common(p)
    p.set_defaults(func=cmd_qr)

    p = sub.add_parser("sweep", help="delta = 10**-p sweep under both sign choices")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p-min", type=int, default=1)
    p.add_argument("--p-max", type=int, default=16)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--csv", help="write the table here instead of stdout")
    p.add_argument("--svg", help="write a log-log scatter plot here")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("probe", help="worst-case error over random unit-norm matrices")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
