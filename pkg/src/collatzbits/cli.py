"""Command line: ``collatzbits verify | batch | regress``.

Exit codes:
    0  success
    2  invalid input or usage (bad number text, bad range, degenerate fit data)
    3  a trajectory exhausted its step bound without reaching 1
    4  file could not be read or written
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import bitnum as bn
from .bitnum import InvalidInputError, PreconditionError
from .engine import BoundExceededError, default_max_steps, run_to_one
from .experiments import (
    CSV_HEADER,
    BatchError,
    CsvFormatError,
    GeneratorSpec,
    gen_all_ones,
    gen_all_ones_with_zeros,
    read_csv,
    records_to_csv,
    run_batch,
    write_csv,
)
from .regress import DegenerateInputError, fit_records, report_json, report_text

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BOUND = 3
EXIT_IO = 4

_RANGE_RE = re.compile(r"^(\d+)(?:\.\.(\d+)(?::(\d+))?)?$")

STATS_FIELDS = (
    "start_bit_length",
    "halvings",
    "odd_steps",
    "stopping_time",
    "max_bit_length",
    "reached_one",
)


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``N`` or ``LOW..HIGH[:STEP]``, inclusive on both ends."""
    m = _RANGE_RE.match(text.strip())
    if not m:
        raise UsageError(f"bad size range {text!r}; expected N or LOW..HIGH[:STEP]")
    low = int(m.group(1))
    high = int(m.group(2)) if m.group(2) is not None else low
    step = int(m.group(3)) if m.group(3) is not None else 1
    if step < 1:
        raise UsageError(f"range step must be >= 1 in {text!r}")
    if low > high:
        raise UsageError(f"range low {low} exceeds high {high}")
    return range(low, high + 1, step)


def scale_limit(n: int) -> int:
    """ceil(1.7 * n) in exact integer arithmetic."""
    return (17 * n + 9) // 10


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="collatzbits",
        description="Collatz trajectories on LSB-first binary integers.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run one integer to 1 and report its counters")
    sel = v.add_mutually_exclusive_group(required=True)
    sel.add_argument("--decimal", help="start value as base-10 digits")
    sel.add_argument("--bits", help="start value as 0/1 text, least significant bit first")
    sel.add_argument("--all-ones", dest="all_ones", help="start at 2**N - 1")
    v.add_argument("--zeros", type=int, help="with --all-ones: clear bits 1..K")
    v.add_argument("--max-steps", dest="max_steps", type=int)
    v.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    v.add_argument("--out", help="write the report here instead of stdout")

    b = sub.add_parser("batch", help="run a sweep of all-ones inputs and write CSV")
    b.add_argument("--all-ones", dest="all_ones", required=True, help="N or LOW..HIGH[:STEP]")
    b.add_argument("--zeros", type=int)
    b.add_argument("--max-steps", dest="max_steps", type=int)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--out", help="CSV destination (default: stdout)")
    b.add_argument("--format", choices=("csv", "json"), default="csv")

    r = sub.add_parser("regress", help="least-squares fit over a results CSV")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--x", default="integer_size", choices=CSV_HEADER)
    r.add_argument("--y", default="expanded_size", choices=CSV_HEADER)
    r.add_argument("--format", choices=("plain", "json"), default="plain")
    r.add_argument("--out")
    return p


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _check_max_steps(value: int | None) -> None:
    if value is not None and value < 1:
        raise UsageError(f"--max-steps must be >= 1, got {value}")


def _verify_input(args) -> bn.BitNum:
    if args.zeros is not None and args.all_ones is None:
        raise UsageError("--zeros only applies with --all-ones")
    if args.decimal is not None:
        return bn.from_decimal(args.decimal)
    if args.bits is not None:
        return bn.from_lsb_text(args.bits)
    if not args.all_ones.isdigit():
        raise UsageError(f"--all-ones takes a single size for verify, got {args.all_ones!r}")
    n = int(args.all_ones)
    if args.zeros:
        return gen_all_ones_with_zeros(n, args.zeros)
    return gen_all_ones(n)


def cmd_verify(args) -> int:
    _check_max_steps(args.max_steps)
    x = _verify_input(args)
    max_steps = args.max_steps if args.max_steps is not None else default_max_steps(x)
    stats = run_to_one(x, max_steps)
    report = {k: getattr(stats, k) for k in STATS_FIELDS}

    if args.format == "json":
        text = json.dumps(report, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = ",".join(STATS_FIELDS) + "\n"
        text += ",".join(str(report[k]).lower() for k in STATS_FIELDS) + "\n"
    else:
        text = "".join(f"{k}: {str(report[k]).lower()}\n" for k in STATS_FIELDS)
        if not stats.reached_one:
            text += f"bound exceeded: {max_steps} steps used without reaching 1\n"
    _emit(text, args.out)

    if not stats.reached_one:
        print(
            f"collatzbits: bound exceeded after {max_steps} steps; "
            "this start value did not reach 1",
            file=sys.stderr,
        )
        return EXIT_BOUND
    return EXIT_OK


def cmd_batch(args) -> int:
    _check_max_steps(args.max_steps)
    sizes = parse_range(args.all_ones)
    specs = [GeneratorSpec.all_ones(n, args.zeros or 0) for n in sizes]
    print(f"collatzbits: running {len(specs)} inputs", file=sys.stderr)
    records = run_batch(specs, max_steps=args.max_steps, jobs=args.jobs)

    ratio = max((r.expanded_size / r.integer_size for r in records), default=0.0)
    summary = {"count": len(records), "max_expanded_ratio": ratio}

    if args.format == "json":
        body = json.dumps(
            {"records": [dict(zip(CSV_HEADER, _row(r))) for r in records], "summary": summary},
            sort_keys=True,
        ) + "\n"
        _emit(body, args.out)
    else:
        if args.out is None:
            sys.stdout.write(records_to_csv(records))
        else:
            write_csv(records, args.out)
    summary_line = f"rows: {len(records)}  max expanded/size ratio: {ratio:.4f}\n"
    # keep stdout parseable when it carries the data
    (sys.stdout if args.out else sys.stderr).write(summary_line)
    return EXIT_OK


def _row(rec) -> tuple[int, ...]:
    return tuple(getattr(rec, k) for k in CSV_HEADER)


def cmd_regress(args) -> int:
    records = read_csv(args.input)
    fit = fit_records(records, args.x, args.y)
    if args.format == "json":
        _emit(report_json(fit) + "\n", args.out)
    else:
        _emit(report_text(fit, args.x, args.y), args.out)
    return EXIT_OK


_COMMANDS = {"verify": cmd_verify, "batch": cmd_batch, "regress": cmd_regress}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, InvalidInputError, PreconditionError, DegenerateInputError) as exc:
        print(f"collatzbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CsvFormatError as exc:
        print(f"collatzbits: error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BatchError as exc:
        print(f"collatzbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceededError as exc:
        print(f"collatzbits: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except OSError as exc:
        print(f"collatzbits: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
