"""Command-line interface: analyze, simulate, and validate.

Exit codes: 0 success, 1 I/O failure, 2 usage or input validation error,
3 property violations found.  Data goes to stdout (or --output), messages to
stderr.  Set COMDRIFT_LOG=debug|info|... for diagnostics.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from .errors import ComdriftError
from .io import parse_membership, write_report, write_sweep
from .migration import analyze_timeline
from .simulation import gradient_check, property_suite, standard_sweep

log = logging.getLogger("comdrift.cli")

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_VIOLATIONS = 3


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _gradient_step(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not 0.0 < value <= 1e-3:
        raise argparse.ArgumentTypeError(f"must be in (0, 1e-3], got {value}")
    return value


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_analyze(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    snapshots = parse_membership(text, format=args.format)
    log.info("parsed %d snapshots from %s", len(snapshots), args.input)
    reports = analyze_timeline(snapshots)
    output = write_report(reports, format="json" if args.json else "csv")
    _write_output(args.output, output)
    log.info("wrote %d transition reports", len(reports))
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    rows = standard_sweep(
        mode=args.mode, m_max=args.m_max, eta_steps=args.eta_steps, seed=args.seed
    )
    _write_output(args.output, write_sweep(rows))
    log.info("wrote %d sweep rows", len(rows))
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    violations = property_suite(args.trials, args.seed)
    violations += gradient_check(step=args.gradient_step)
    if violations:
        dump = json.dumps([dataclasses.asdict(v) for v in violations], indent=2)
        sys.stdout.write(dump + "\n")
        print(
            f"comdrift validate: {len(violations)} violation(s) in "
            f"{args.trials} trials (seed {args.seed})",
            file=sys.stderr,
        )
        return EXIT_VIOLATIONS
    print(
        f"comdrift validate: OK - {args.trials} randomized trials and the "
        f"gradient checks passed (seed {args.seed})",
        file=sys.stderr,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comdrift",
        description="Quantify community evolution across snapshot timelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", help="compute split/shrink/merge/expand indices for a timeline"
    )
    analyze.add_argument("--input", default="-", help="membership file, or - for stdin")
    analyze.add_argument(
        "--format", choices=["csv", "jsonl"], default="csv", help="input encoding"
    )
    analyze.add_argument("--output", default="-", help="report file, or - for stdout")
    analyze.add_argument(
        "--json", action="store_true", help="emit the JSON report instead of CSV"
    )
    analyze.set_defaults(func=cmd_analyze)

    simulate = sub.add_parser(
        "simulate", help="emit index curves over an (m, eta) grid"
    )
    simulate.add_argument(
        "--mode", choices=["even", "single", "random", "all"], default="all"
    )
    simulate.add_argument("--m-max", type=_positive_int, default=10)
    simulate.add_argument(
        "--eta-steps",
        type=_positive_int,
        default=20,
        help="number of equal eta steps between 0 and 1 (grid has K+1 points)",
    )
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--output", default="-", help="sweep CSV, or - for stdout")
    simulate.set_defaults(func=cmd_simulate)

    validate = sub.add_parser(
        "validate", help="run the randomized property suite and gradient checks"
    )
    validate.add_argument("--trials", type=_positive_int, default=10000)
    validate.add_argument("--seed", type=int, default=0)
    validate.add_argument("--gradient-step", type=_gradient_step, default=1e-6)
    validate.set_defaults(func=cmd_validate)

    return parser


def _configure_logging() -> None:
    level_name = os.environ.get("COMDRIFT_LOG")
    if not level_name:
        return
    level = getattr(logging, level_name.upper(), None)
    if not isinstance(level, int):
        level = logging.INFO
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(name)s %(levelname)s: %(message)s"
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging()
    try:
        return args.func(args)
    except OSError as exc:
        print(f"comdrift: {exc}", file=sys.stderr)
        return EXIT_IO
    except ComdriftError as exc:
        print(f"comdrift: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
