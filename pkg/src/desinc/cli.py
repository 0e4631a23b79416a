"""Command line entry point: ``desinc sweep | grid | check-props``.

Exit codes: 0 success, 1 usage error, 2 property failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .bounds import bound_report
from .errors import DomainError, HarnessIOError
from .function_space import BUILTINS, get_builtin
from .harness import SweepConfig, check_props, emit_csv, emit_plot_data, format_csv_line, run_sweep
from .selection import STRATEGIES, select, strategy_from_label

EXIT_OK, EXIT_USAGE, EXIT_PROPERTY, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="desinc", description="DE-Sinc approximation sweeps and checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    functions = sorted(BUILTINS)
    names = list(STRATEGIES)

    p = sub.add_parser("sweep", help="run a sweep over n and write CSV")
    p.add_argument("--function", choices=functions, required=True)
    p.add_argument("--strategy", choices=names + ["all"], default="all")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--grid", type=int, default=20001, help="number of test points (odd)")
    p.add_argument("--range", type=float, default=4.0, help="test points span [-range, range]")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--plot-dir", help="also write two-column series files here")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("grid", help="print h, M, N, evals, C, headline bound")
    p.add_argument("--function", choices=functions, required=True)
    p.add_argument("--strategy", choices=names, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("check-props", help="randomized checks of the kernel inequalities")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    return parser


def _sweep(args) -> int:
    strategies = list(STRATEGIES.values()) if args.strategy == "all" else [strategy_from_label(args.strategy)]
    cfg = SweepConfig(args.function, strategies, args.n_min, args.n_max, args.grid, args.range, args.out)
    rows = run_sweep(cfg, workers=args.workers)
    emit_csv(rows, args.out)
    if args.plot_dir:
        emit_plot_data(rows, args.plot_dir)
    uncertified = sum(not r.certified for r in rows)
    print(f"wrote {len(rows)} rows to {args.out} ({uncertified} uncertified)", file=sys.stderr)
    return EXIT_OK


def _grid(args) -> int:
    F = get_builtin(args.function)
    grid = select(F.certificate, args.n, strategy_from_label(args.strategy))
    report = bound_report(F.certificate, grid)
    print(format_csv_line((grid.h, grid.M, grid.N, grid.evals, report.constant_C, report.headline_bound)))
    if grid.warning:
        print(f"warning: {grid.warning}", file=sys.stderr)
    return EXIT_OK


def _check_props(args) -> int:
    if args.samples < 1:
        raise DomainError("--samples must be >= 1")
    report = check_props(args.samples, args.seed)
    sys.stdout.write(report.text)
    return EXIT_OK if report.passed else EXIT_PROPERTY


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = _parser().parse_args(argv)
    handler = {"sweep": _sweep, "grid": _grid, "check-props": _check_props}[args.command]
    try:
        return handler(args)
    except HarnessIOError as exc:
        print(f"desinc: {exc}", file=sys.stderr)
        return EXIT_IO
    except DomainError as exc:
        print(f"desinc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
