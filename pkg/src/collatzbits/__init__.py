"""Collatz trajectory verification on reversed (LSB-first) binary integers."""

from .bitnum import (
    BitNum,
    InvalidInputError,
    PreconditionError,
    from_decimal,
    from_int,
    from_lsb_text,
    to_decimal,
    to_lsb_text,
)
from .engine import BoundExceededError, StepKind, TraceStats, run_to_one, step, trace
from .experiments import ExperimentRecord, GeneratorSpec, read_csv, run_batch, write_csv
from .regress import RegressionFit, fit_ols, predict

__version__ = "0.1.0"
