"""Experiment inputs, batch runs and the results CSV."""

from __future__ import annotations

import csv
import enum
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence, TextIO

from . import bitnum as bn
from .bitnum import BitNum, InvalidInputError
from .engine import BoundExceededError, TraceStats, default_max_steps, run_to_one

CSV_HEADER = ("integer_size", "zeros", "expanded_size", "halvings", "odd_steps", "stopping_time")


class GeneratorKind(enum.Enum):
    ALL_ONES = "ALL_ONES"
    ALL_ONES_WITH_ZEROS = "ALL_ONES_WITH_ZEROS"
    DECIMAL = "DECIMAL"
    LSB_BITS = "LSB_BITS"


class CsvFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BatchError(RuntimeError):
    """A spec in a batch failed; ``spec`` and ``index`` say which one."""

    def __init__(self, message: str, spec: "GeneratorSpec", index: int):
        super().__init__(f"spec #{index} {spec}: {message}")
        self.spec = spec
        self.index = index


@dataclass(frozen=True)
class GeneratorSpec:
    kind: GeneratorKind
    size_bits: int = 0
    zeros: int = 0
    literal: str = ""

    @classmethod
    def all_ones(cls, n: int, zeros: int = 0) -> "GeneratorSpec":
        if zeros:
            return cls(GeneratorKind.ALL_ONES_WITH_ZEROS, size_bits=n, zeros=zeros)
        return cls(GeneratorKind.ALL_ONES, size_bits=n)

    @classmethod
    def decimal(cls, text: str) -> "GeneratorSpec":
        return cls(GeneratorKind.DECIMAL, literal=text)

    @classmethod
    def lsb_bits(cls, text: str) -> "GeneratorSpec":
        return cls(GeneratorKind.LSB_BITS, literal=text)

    def build(self) -> BitNum:
        if self.kind is GeneratorKind.ALL_ONES:
            return gen_all_ones(self.size_bits)
        if self.kind is GeneratorKind.ALL_ONES_WITH_ZEROS:
            return gen_all_ones_with_zeros(self.size_bits, self.zeros)
        if self.kind is GeneratorKind.DECIMAL:
            return bn.from_decimal(self.literal)
        return bn.from_lsb_text(self.literal)

    def __str__(self) -> str:
        if self.kind is GeneratorKind.ALL_ONES:
            return f"all-ones n={self.size_bits}"
        if self.kind is GeneratorKind.ALL_ONES_WITH_ZEROS:
            return f"all-ones n={self.size_bits} zeros={self.zeros}"
        lit = self.literal if len(self.literal) <= 24 else self.literal[:21] + "..."
        return f"{self.kind.value.lower()} {lit}"


@dataclass(frozen=True)
class ExperimentRecord:
    integer_size: int
    zeros: int
    expanded_size: int
    halvings: int
    odd_steps: int
    stopping_time: int

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValueError(f"{f.name} must be a non-negative int, got {v!r}")
        if self.stopping_time != self.halvings + self.odd_steps:
            raise ValueError(
                f"stopping_time {self.stopping_time} != halvings {self.halvings}"
                f" + odd_steps {self.odd_steps}"
            )
        if self.expanded_size < self.integer_size:
            raise ValueError(
                f"expanded_size {self.expanded_size} < integer_size {self.integer_size}"
            )

    @classmethod
    def from_stats(cls, stats: TraceStats, zeros: int = 0) -> "ExperimentRecord":
        return cls(
            integer_size=stats.start_bit_length,
            zeros=zeros,
            expanded_size=stats.max_bit_length,
            halvings=stats.halvings,
            odd_steps=stats.odd_steps,
            stopping_time=stats.stopping_time,
        )


def gen_all_ones(n: int) -> BitNum:
    """2**n - 1: the largest integer with ``n`` bits."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"all-ones size must be >= 1, got {n!r}")
    full, rest = divmod(n, bn.WORD_BITS)
    words = [bn.WORD_MASK] * full
    if rest:
        words.append((1 << rest) - 1)
    return BitNum(tuple(words))


def gen_all_ones_with_zeros(n: int, k: int) -> BitNum:
    """``n``-bit odd integer whose ``k`` zero bits sit at indices 1..k.

    Bit 0 and bit n-1 stay set, so the value keeps its full size and stays odd.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"size must be >= 3 to hold zeros, got {n!r}")
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n - 2:
        raise InvalidInputError(f"zeros must be in 1..{n - 2} for size {n}, got {k!r}")
    return BitNum.from_bits([1] + [0] * k + [1] * (n - k - 1))


def _run_one(spec: GeneratorSpec, max_steps: int | None) -> TraceStats:
    x = spec.build()
    return run_to_one(x, max_steps if max_steps is not None else default_max_steps(x))


def run_batch(
    specs: Sequence[GeneratorSpec],
    max_steps: int | None = None,
    jobs: int = 1,
) -> list[ExperimentRecord]:
    """Run every spec to 1 and return one record per spec, in spec order.

    ``max_steps=None`` gives each input the default budget for its size.
    With ``jobs > 1`` the trajectories run in worker processes.
    """
    specs = list(specs)
    if jobs is None or jobs < 1:
        jobs = os.cpu_count() or 1

    results: list[TraceStats | BaseException] = []
    if jobs == 1 or len(specs) < 2:
        for spec in specs:
            try:
                results.append(_run_one(spec, max_steps))
            except (InvalidInputError, ValueError) as exc:
                results.append(exc)
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_one, s, max_steps) for s in specs]
            for fut in futures:
                exc = fut.exception()
                results.append(exc if exc is not None else fut.result())

    records = []
    for i, (spec, res) in enumerate(zip(specs, results)):
        if isinstance(res, BaseException):
            raise BatchError(str(res), spec, i) from res
        if not res.reached_one:
            raise BoundExceededError(
                f"spec #{i} {spec}: step bound exhausted after {res.stopping_time} steps"
                " without reaching 1",
                res,
            )
        zeros = spec.zeros if spec.kind is GeneratorKind.ALL_ONES_WITH_ZEROS else 0
        records.append(ExperimentRecord.from_stats(res, zeros))
    return records


def write_csv(records: Iterable[ExperimentRecord], dest: str | os.PathLike | TextIO) -> None:
    if hasattr(dest, "write"):
        _write_rows(records, dest)
        return
    with open(dest, "w", newline="") as fh:
        _write_rows(records, fh)


def _write_rows(records: Iterable[ExperimentRecord], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in records:
        w.writerow(astuple(rec))


def records_to_csv(records: Iterable[ExperimentRecord]) -> str:
    buf = io.StringIO()
    _write_rows(records, buf)
    return buf.getvalue()


def read_csv(source: str | os.PathLike | TextIO) -> list[ExperimentRecord]:
    """Parse a results file, validating the header and every row."""
    if hasattr(source, "read"):
        return _read_rows(source)
    with open(source, newline="") as fh:
        return _read_rows(fh)


def _read_rows(fh: TextIO) -> list[ExperimentRecord]:
    reader = csv.reader(fh)
    header = next(reader, None)
    if header is None:
        raise CsvFormatError("missing header", 1)
    if tuple(header) != CSV_HEADER:
        raise CsvFormatError(f"expected header {','.join(CSV_HEADER)!r}, got {','.join(header)!r}", 1)
    out = []
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        if len(row) != len(CSV_HEADER):
            raise CsvFormatError(f"expected {len(CSV_HEADER)} fields, got {len(row)}", line)
        values = []
        for name, cell in zip(CSV_HEADER, row):
            if not (cell.isascii() and cell.isdigit()):
                raise CsvFormatError(f"{name} is not a non-negative integer: {cell!r}", line)
            values.append(int(cell))
        try:
            out.append(ExperimentRecord(*values))
        except ValueError as exc:
            raise CsvFormatError(str(exc), line) from exc
    return out
