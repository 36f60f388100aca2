"""Positive integers stored in reversed (least-significant-bit-first) binary form.

Only the handful of operations a Collatz trajectory needs are provided:
doubling is a zero inserted at the low end, halving drops the low bit, and
``3x + 1`` is evaluated as ``x + 2x + 1`` with ordinary ripple-carry addition.

Bits are packed into 64-bit words (word 0 holds bits 0..63) so that the
per-bit semantics stay exact while the Python loop runs once per word instead
of once per bit.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

WORD_BITS = 64
WORD_MASK = (1 << WORD_BITS) - 1

# 10**19 is the largest power of ten below 2**64.
_DEC_CHUNK_DIGITS = 19
_DEC_CHUNK = 10**_DEC_CHUNK_DIGITS

__all__ = [
    "BitNum",
    "InvalidInputError",
    "PreconditionError",
    "Ordering",
    "ONE",
    "from_decimal",
    "to_decimal",
    "from_lsb_text",
    "to_lsb_text",
    "from_int",
    "bit_length",
    "is_even",
    "is_one",
    "halve",
    "double",
    "add",
    "triple_plus_one",
    "compare",
    "trailing_zeros",
    "shift_down",
]


class InvalidInputError(ValueError):
    """Raised when text or a native value cannot be turned into a BitNum."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class PreconditionError(ValueError):
    """Raised when an operation is applied outside its domain (e.g. halving an odd value)."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class BitNum:
    """Immutable positive integer, bit 0 first.

    Construct through :func:`from_decimal`, :func:`from_lsb_text`,
    :func:`from_bits` or :func:`from_int`; the raw constructor trusts its
    input and is meant for this module's kernels.
    """

    __slots__ = ("_words",)

    def __init__(self, words: tuple[int, ...]):
        self._words = words

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitNum":
        """Build from an LSB-first sequence of 0/1 values; the last bit must be 1."""
        bits = list(bits)
        if not bits:
            raise InvalidInputError("empty bit sequence")
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise InvalidInputError(f"bit {i} is {b!r}, expected 0 or 1", i)
        if bits[-1] != 1:
            raise InvalidInputError(
                f"most significant bit (index {len(bits) - 1}) is 0", len(bits) - 1
            )
        words = []
        for start in range(0, len(bits), WORD_BITS):
            w = 0
            for j, b in enumerate(bits[start : start + WORD_BITS]):
                w |= b << j
            words.append(w)
        return cls(tuple(words))

    @property
    def words(self) -> tuple[int, ...]:
        return self._words

    @property
    def bits(self) -> tuple[int, ...]:
        """The LSB-first bit sequence, ending in 1."""
        n = bit_length(self)
        out = []
        for w in self._words:
            out.extend((w >> j) & 1 for j in range(WORD_BITS))
        return tuple(out[:n])

    def __len__(self) -> int:
        return bit_length(self)

    def __int__(self) -> int:
        value = 0
        for w in reversed(self._words):
            value = (value << WORD_BITS) | w
        return value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitNum):
            return NotImplemented
        return self._words == other._words

    def __hash__(self) -> int:
        return hash(self._words)

    def __lt__(self, other: "BitNum") -> bool:
        return compare(self, other) is Ordering.LESS

    def __le__(self, other: "BitNum") -> bool:
        return compare(self, other) is not Ordering.GREATER

    def __gt__(self, other: "BitNum") -> bool:
        return compare(self, other) is Ordering.GREATER

    def __ge__(self, other: "BitNum") -> bool:
        return compare(self, other) is not Ordering.LESS

    def __repr__(self) -> str:
        n = bit_length(self)
        if n <= 64:
            return f"BitNum({to_lsb_text(self)!r})"
        return f"BitNum(<{n} bits>)"

    def __reduce__(self):
        return (BitNum, (self._words,))


ONE = BitNum((1,))


def _strip(words: list[int]) -> tuple[int, ...]:
    while len(words) > 1 and words[-1] == 0:
        words.pop()
    return tuple(words)


def from_int(value: int) -> BitNum:
    """Pack a native positive int. Mostly useful in tests and demos."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"expected int, got {type(value).__name__}")
    if value < 1:
        raise InvalidInputError(f"value must be >= 1, got {value}")
    words = []
    while value:
        words.append(value & WORD_MASK)
        value >>= WORD_BITS
    return BitNum(tuple(words))


def _mul_small_add(words: list[int], factor: int, addend: int) -> None:
    """In place: words = words * factor + addend, factor and addend below 2**64."""
    carry = addend
    for i, w in enumerate(words):
        t = w * factor + carry
        words[i] = t & WORD_MASK
        carry = t >> WORD_BITS
    while carry:
        words.append(carry & WORD_MASK)
        carry >>= WORD_BITS


def _divmod_small(words: Sequence[int], divisor: int) -> tuple[list[int], int]:
    quotient = [0] * len(words)
    rem = 0
    for i in range(len(words) - 1, -1, -1):
        cur = (rem << WORD_BITS) | words[i]
        quotient[i], rem = divmod(cur, divisor)
    while len(quotient) > 1 and quotient[-1] == 0:
        quotient.pop()
    return quotient, rem


def from_decimal(text: str) -> BitNum:
    """Parse base-10 ASCII digits (no sign, no leading zeros, value >= 1).

    >>> to_lsb_text(from_decimal("5"))
    '101'
    """
    if not isinstance(text, str):
        raise InvalidInputError(f"expected str, got {type(text).__name__}")
    if text == "":
        raise InvalidInputError("empty decimal text")
    for i, ch in enumerate(text):
        if ch not in "0123456789":
            raise InvalidInputError(f"non-digit character {ch!r} at position {i}", i)
    if text[0] == "0":
        if len(text) == 1:
            raise InvalidInputError("value zero is not representable", 0)
        raise InvalidInputError("leading zero at position 0", 0)

    words = [0]
    head = len(text) % _DEC_CHUNK_DIGITS
    if head:
        words[0] = int(text[:head])
    for start in range(head, len(text), _DEC_CHUNK_DIGITS):
        _mul_small_add(words, _DEC_CHUNK, int(text[start : start + _DEC_CHUNK_DIGITS]))
    return BitNum(_strip(words))


def to_decimal(x: BitNum) -> str:
    """Render as base-10 text by repeated division by 10**19."""
    words = list(x.words)
    chunks = []
    while len(words) > 1 or words[0] >= _DEC_CHUNK:
        words, rem = _divmod_small(words, _DEC_CHUNK)
        chunks.append(rem)
    parts = [str(words[0])]
    parts.extend(f"{c:0{_DEC_CHUNK_DIGITS}d}" for c in reversed(chunks))
    return "".join(parts)


def from_lsb_text(text: str) -> BitNum:
    """Parse '0'/'1' characters, index 0 least significant. The last character must be '1'."""
    if not isinstance(text, str):
        raise InvalidInputError(f"expected str, got {type(text).__name__}")
    if text == "":
        raise InvalidInputError("empty bit text")
    for i, ch in enumerate(text):
        if ch not in "01":
            raise InvalidInputError(f"character {ch!r} at position {i} is not 0 or 1", i)
    if text[-1] != "1":
        raise InvalidInputError(
            f"most significant bit (position {len(text) - 1}) is 0", len(text) - 1
        )
    words = []
    for start in range(0, len(text), WORD_BITS):
        # int() wants MSB first
        words.append(int(text[start : start + WORD_BITS][::-1], 2))
    return BitNum(tuple(words))


def to_lsb_text(x: BitNum) -> str:
    words = x.words
    parts = [format(w, f"0{WORD_BITS}b")[::-1] for w in words[:-1]]
    parts.append(format(words[-1], "b")[::-1])
    return "".join(parts)


def bit_length(x: BitNum) -> int:
    words = x.words
    return (len(words) - 1) * WORD_BITS + words[-1].bit_length()


def is_even(x: BitNum) -> bool:
    return not (x.words[0] & 1)


def is_one(x: BitNum) -> bool:
    return x.words == (1,)


def halve(x: BitNum) -> BitNum:
    """Drop bit 0 of an even value."""
    words = x.words
    if words[0] & 1:
        raise PreconditionError("halve() requires an even value")
    out = []
    top = len(words) - 1
    for i, w in enumerate(words):
        hi = (words[i + 1] & 1) << (WORD_BITS - 1) if i < top else 0
        out.append((w >> 1) | hi)
    return BitNum(_strip(out))


def double(x: BitNum) -> BitNum:
    """Insert a 0 at index 0."""
    out = []
    carry = 0
    for w in x.words:
        out.append(((w << 1) & WORD_MASK) | carry)
        carry = w >> (WORD_BITS - 1)
    if carry:
        out.append(carry)
    return BitNum(tuple(out))


def add(a: BitNum, b: BitNum) -> BitNum:
    """Ripple-carry sum, one word at a time."""
    wa, wb = a.words, b.words
    if len(wa) < len(wb):
        wa, wb = wb, wa
    out = []
    carry = 0
    nb = len(wb)
    for i, w in enumerate(wa):
        s = w + (wb[i] if i < nb else 0) + carry
        out.append(s & WORD_MASK)
        carry = s >> WORD_BITS
    if carry:
        out.append(carry)
    return BitNum(tuple(out))


def _triple_plus_one_words(words: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    carry = 1
    shifted_in = 0
    for w in words:
        s = w + (((w << 1) & WORD_MASK) | shifted_in) + carry
        shifted_in = w >> (WORD_BITS - 1)
        out.append(s & WORD_MASK)
        carry = s >> WORD_BITS
    last = shifted_in + carry
    if last:
        out.append(last)
    return tuple(out)


def triple_plus_one(x: BitNum) -> BitNum:
    """``x + 2x + 1`` for odd ``x`` in one pass.

    The doubled operand is produced word by word as the shift happens and the
    ``+ 1`` enters as the initial carry, so the result equals
    ``add(add(x, double(x)), ONE)`` without materialising the intermediates.
    """
    if not x.words[0] & 1:
        raise PreconditionError("triple_plus_one() requires an odd value")
    return BitNum(_triple_plus_one_words(x.words))


def compare(a: BitNum, b: BitNum) -> Ordering:
    wa, wb = a.words, b.words
    if len(wa) != len(wb):
        return Ordering.LESS if len(wa) < len(wb) else Ordering.GREATER
    for i in range(len(wa) - 1, -1, -1):
        if wa[i] != wb[i]:
            return Ordering.LESS if wa[i] < wb[i] else Ordering.GREATER
    return Ordering.EQUAL


def _trailing_zeros_words(words: tuple[int, ...]) -> int:
    for i, w in enumerate(words):
        if w:
            return i * WORD_BITS + (w & -w).bit_length() - 1
    raise AssertionError("canonical BitNum has a nonzero word")


def _shift_down_words(words: tuple[int, ...], k: int) -> tuple[int, ...]:
    skip, bits = divmod(k, WORD_BITS)
    if skip:
        words = words[skip:]
    if bits == 0:
        return words
    up = WORD_BITS - bits
    top = len(words) - 1
    out = [
        (w >> bits) | ((words[i + 1] << up) & WORD_MASK) for i, w in enumerate(words[:top])
    ]
    out.append(words[top] >> bits)
    return _strip(out)


def trailing_zeros(x: BitNum) -> int:
    """Number of low zero bits, i.e. how many times ``x`` can be halved."""
    return _trailing_zeros_words(x.words)


def shift_down(x: BitNum, k: int) -> BitNum:
    """Drop the ``k`` lowest bits, all of which must be zero.

    Same result as ``k`` successive :func:`halve` calls.
    """
    if k < 0:
        raise PreconditionError(f"shift count must be >= 0, got {k}")
    if k == 0:
        return x
    tz = trailing_zeros(x)
    if k > tz:
        raise PreconditionError(f"cannot halve {k} times: only {tz} low zero bits")
    return BitNum(_shift_down_words(x.words, k))
