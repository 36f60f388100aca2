"""Collatz iteration over :class:`~collatzbits.bitnum.BitNum` values."""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

from . import bitnum as bn
from .bitnum import BitNum

# Observed stopping times are about 7.8 steps per input bit.
DEFAULT_STEPS_PER_BIT = 100_000

_ONE_WORDS = bn.ONE.words


class StepKind(enum.Enum):
    HALVE = "HALVE"
    TRIPLE = "TRIPLE"


class TerminalValueError(ValueError):
    """step() was asked to move past 1."""


class BoundExceededError(RuntimeError):
    """A trajectory used up its step budget without reaching 1.

    This is the outcome a counterexample search would be looking for, so it is
    never folded into an ordinary result.
    """

    def __init__(self, message: str, stats: "TraceStats | None" = None):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class TraceStats:
    """Counters for one trajectory.

    ``max_bit_length`` covers every element, including the even ``3x + 1``
    values before they are halved. ``climb_bit_length`` is narrower: the
    largest odd element of the opening climb, i.e. of the odd terms up to and
    including the first one whose ``3x + 1`` is divisible by 4.
    """

    start_bit_length: int
    halvings: int
    odd_steps: int
    stopping_time: int
    max_bit_length: int
    reached_one: bool
    climb_bit_length: int

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TraceEvent:
    bit_length: int  # of the value produced by this step
    kind: StepKind


@dataclass(frozen=True)
class Trace:
    start_bit_length: int
    events: tuple[TraceEvent, ...]
    reached_one: bool
    climb_bit_length: int

    def stats(self) -> TraceStats:
        halvings = sum(1 for e in self.events if e.kind is StepKind.HALVE)
        odd = len(self.events) - halvings
        peak = max((e.bit_length for e in self.events), default=self.start_bit_length)
        return TraceStats(
            start_bit_length=self.start_bit_length,
            halvings=halvings,
            odd_steps=odd,
            stopping_time=len(self.events),
            max_bit_length=max(peak, self.start_bit_length),
            reached_one=self.reached_one,
            climb_bit_length=self.climb_bit_length,
        )


def default_max_steps(x: BitNum) -> int:
    return DEFAULT_STEPS_PER_BIT * bn.bit_length(x)


def normalize_to_odd(x: BitNum) -> tuple[BitNum, int]:
    """Strip all factors of two: returns ``(odd, k)`` with ``odd * 2**k == x``."""
    k = bn.trailing_zeros(x)
    return bn.shift_down(x, k), k


def step(x: BitNum) -> tuple[BitNum, StepKind]:
    if bn.is_one(x):
        raise TerminalValueError("1 is terminal; there is no next step")
    if bn.is_even(x):
        return bn.halve(x), StepKind.HALVE
    return bn.triple_plus_one(x), StepKind.TRIPLE


def _check_bound(max_steps: int) -> None:
    if isinstance(max_steps, bool) or not isinstance(max_steps, int) or max_steps < 1:
        raise ValueError(f"max_steps must be a positive int, got {max_steps!r}")


def run_to_one(x: BitNum, max_steps: int | None = None) -> TraceStats:
    """Iterate the Collatz map from ``x`` until it hits 1 or ``max_steps`` steps are used.

    A run of halvings is applied in one shift; the counters are the same as
    applying :func:`step` once per halving. When the budget runs out the
    returned stats have ``reached_one=False`` and describe the partial
    trajectory.
    """
    if max_steps is None:
        max_steps = default_max_steps(x)
    _check_bound(max_steps)

    start_len = bn.bit_length(x)
    halvings = odd_steps = 0
    peak = start_len
    climb = 1
    climbing = True
    budget = max_steps

    # Hot loop works on the packed words directly; each pass is one TRIPLE
    # followed by the run of HALVEs it forces.
    words = x.words
    k = bn._trailing_zeros_words(words)
    if k:
        take = min(k, budget)
        words = bn._shift_down_words(words, take)
        halvings += take
        budget -= take

    top_shift = bn.WORD_BITS
    while budget and words != _ONE_WORDS:
        if climbing:
            n = (len(words) - 1) * top_shift + words[-1].bit_length()
            if n > climb:
                climb = n
        words = bn._triple_plus_one_words(words)
        odd_steps += 1
        budget -= 1
        n = (len(words) - 1) * top_shift + words[-1].bit_length()
        if n > peak:
            peak = n
        w0 = words[0]
        if w0:
            k = (w0 & -w0).bit_length() - 1
        else:
            k = bn._trailing_zeros_words(words)
        if k >= 2:
            climbing = False
        take = k if k <= budget else budget
        words = bn._shift_down_words(words, take)
        halvings += take
        budget -= take

    return TraceStats(
        start_bit_length=start_len,
        halvings=halvings,
        odd_steps=odd_steps,
        stopping_time=halvings + odd_steps,
        max_bit_length=peak,
        reached_one=words == _ONE_WORDS,
        climb_bit_length=climb,
    )


def trace(x: BitNum, max_steps: int | None = None) -> Trace:
    """Step-by-step record of bit lengths and step kinds (values are not kept)."""
    if max_steps is None:
        max_steps = default_max_steps(x)
    _check_bound(max_steps)

    start_len = bn.bit_length(x)
    events = []
    climb = 1
    climbing = True
    seen_odd = False
    run_of_halves = 0
    while len(events) < max_steps and not bn.is_one(x):
        if not bn.is_even(x) and climbing:
            climb = max(climb, bn.bit_length(x))
            seen_odd = True
        x, kind = step(x)
        if kind is StepKind.HALVE:
            run_of_halves += 1
            if seen_odd and run_of_halves >= 2:
                climbing = False
        else:
            run_of_halves = 0
        events.append(TraceEvent(bn.bit_length(x), kind))
    return Trace(start_len, tuple(events), bn.is_one(x), climb)
