"""``hyperlin`` command line: run verification suites and write reports."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigError, UnknownSuiteError
from .suites import SUITES, SuiteConfig, backend_from_env, list_suites, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperlin", description="Run hyperbolic quantum-mechanics verification suites.")
    p.add_argument("--suite", default="all", help=f"one of: {', '.join(SUITES)} (default: all)")
    p.add_argument("--list", action="store_true", help="print the suite catalog and exit")
    p.add_argument("--grid-half-width", type=float, dest="half_width", help="override grid half-width L")
    p.add_argument("--grid-points", type=int, dest="points", help="override grid point count N (odd)")
    p.add_argument("--tolerance", type=float, default=1e-6, help="Fourier convergence tolerance (default 1e-6)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write the report here (default: standard output only)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--algebra-file", help="JSON algebra table to check alongside the built-ins")
    p.add_argument("--matrix-file", help="JSON 2x2 matrix of [x, y] pairs to classify")
    p.add_argument("--upto", type=int, help="truncation window for the exact CCR checks")
    p.add_argument("--samples", type=int, help="override the random sample counts")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.list:
        for s in list_suites():
            print(f"{s['name']:<8} {s['description']}  [{'; '.join(s['topics'])}]")
        return EXIT_PASS
    try:
        config = SuiteConfig(
            suite=args.suite, half_width=args.half_width, points=args.points,
            tolerance=args.tolerance, seed=args.seed, output=args.output, format=args.format,
            algebra_file=args.algebra_file, matrix_file=args.matrix_file, upto=args.upto,
            samples=args.samples, backend=backend_from_env(),
        )
        report = run_suite(config)
    except UnknownSuiteError as exc:
        print(f"hyperlin: unknown suite {exc.args[0]!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"hyperlin: {exc}", file=sys.stderr)
        return EXIT_USAGE

    rendered = report.to_json() if args.format == "json" else report.to_text()
    if args.output:
        # the file copy is the byte-stable artifact; the timestamp goes only to the terminal
        stable = report.to_json(stable=True) if args.format == "json" else rendered
        Path(args.output).write_text(stable)
        n_pass = sum(c.passed for c in report.checks)
        print(f"{report.suite}: {'PASS' if report.passed else 'FAIL'} ({n_pass}/{len(report.checks)} checks) -> {args.output}")
    else:
        sys.stdout.write(rendered)
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
