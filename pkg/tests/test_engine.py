import pytest
from hypothesis import given
from hypothesis import strategies as st

from collatzbits import bitnum as bn
from collatzbits import engine
from collatzbits.engine import StepKind, TerminalValueError, TraceStats

from oracles import RSA_100, collatz_int, collatz_native


def num(v):
    return bn.from_int(v)


@pytest.mark.parametrize("v, odd, k", [(5, 5, 0), (16, 1, 4), (12, 3, 2), (2**130, 1, 130)])
def test_normalize_to_odd(v, odd, k):
    x, halvings = engine.normalize_to_odd(num(v))
    assert int(x) == odd and halvings == k


@pytest.mark.parametrize(
    "v, nxt, kind",
    [(5, 16, StepKind.TRIPLE), (16, 8, StepKind.HALVE), (3, 10, StepKind.TRIPLE)],
)
def test_step(v, nxt, kind):
    x, got = engine.step(num(v))
    assert int(x) == nxt and got is kind


def test_step_refuses_one():
    with pytest.raises(TerminalValueError):
        engine.step(num(1))


def test_run_one_is_already_done():
    s = engine.run_to_one(num(1), 10)
    assert (s.halvings, s.odd_steps, s.stopping_time, s.max_bit_length, s.reached_one) == (
        0,
        0,
        0,
        1,
        True,
    )


def test_run_five():
    s = engine.run_to_one(num(5), 100)
    assert (s.halvings, s.odd_steps, s.stopping_time, s.max_bit_length, s.reached_one) == (
        4,
        1,
        5,
        5,
        True,
    )


def test_run_rsa100():
    s = engine.run_to_one(bn.from_decimal(RSA_100))
    assert s.start_bit_length == 330
    assert (s.halvings, s.odd_steps, s.reached_one) == (1566, 780, True)


def test_run_27_matches_native_oracle():
    h, o, m, t = collatz_native([27])
    s = engine.run_to_one(num(27))
    assert (s.halvings, s.odd_steps, s.max_bit_length, s.stopping_time) == (h[0], o[0], m[0], t[0])
    assert s.stopping_time == 111


def test_even_start_counts_leading_halvings():
    s = engine.run_to_one(num(40))
    assert s.halvings == 3 + engine.run_to_one(num(5)).halvings
    assert s.max_bit_length == 6
    assert s.stopping_time == s.halvings + s.odd_steps


def test_bound_exhausted_is_not_success():
    s = engine.run_to_one(num(27), 50)
    assert not s.reached_one
    assert s.stopping_time == 50
    full = engine.trace(num(27)).events[:50]
    assert s.halvings == sum(e.kind is StepKind.HALVE for e in full)
    # bound hit in the middle of a run of halvings
    s = engine.run_to_one(num(2**10 * 3), 4)
    assert (s.halvings, s.odd_steps, s.reached_one) == (4, 0, False)


@pytest.mark.parametrize("bad", [0, -1, 1.5, True])
def test_bad_bound(bad):
    with pytest.raises(ValueError):
        engine.run_to_one(num(3), bad)


def test_default_bound_scales_with_size():
    assert engine.default_max_steps(num(2**99)) == 100 * engine.DEFAULT_STEPS_PER_BIT


def test_trace_examples():
    assert [e.kind for e in engine.trace(num(5)).events] == [StepKind.TRIPLE] + [StepKind.HALVE] * 4
    assert engine.trace(num(5)).events[0].bit_length == 5
    assert engine.trace(num(1)).events == ()


def test_trace_aggregates_to_run_to_one_exhaustive():
    for v in range(1, 10001):
        x = num(v)
        t = engine.trace(x)
        assert t.stats() == engine.run_to_one(x), v
        kinds = [e.kind for e in t.events]
        for a, b in zip(kinds, kinds[1:]):
            if a is StepKind.TRIPLE:
                assert b is StepKind.HALVE


def test_trace_with_bound_matches_partial_run():
    for bound in (1, 2, 7, 50, 111, 112):
        assert engine.trace(num(27), bound).stats() == engine.run_to_one(num(27), bound)


def test_oracle_agreement_small_block():
    starts = list(range(1, 3001))
    h, o, m, t = collatz_native(starts)
    for i, v in enumerate(starts):
        s = engine.run_to_one(num(v))
        assert (s.halvings, s.odd_steps, s.max_bit_length, s.stopping_time) == (
            h[i],
            o[i],
            m[i],
            t[i],
        ), v


@given(st.integers(min_value=2, max_value=2**300))
def test_stats_invariants(v):
    s = engine.run_to_one(num(v))
    assert s.reached_one
    assert s.stopping_time == s.halvings + s.odd_steps
    assert s.max_bit_length >= s.start_bit_length
    assert (s.halvings, s.odd_steps, s.max_bit_length, s.stopping_time) == collatz_int(v)
    if v % 2:
        assert s.halvings >= s.odd_steps >= 1


def test_deterministic():
    x = bn.from_decimal(RSA_100)
    assert engine.run_to_one(x) == engine.run_to_one(x)


def test_climb_peak_of_all_ones_is_last_odd_term_of_the_climb():
    # 2**n - 1 climbs through 3**k * 2**(n-k) - 1 and tops out at 2 * 3**(n-1) - 1
    for n in range(2, 200):
        s = engine.run_to_one(num(2**n - 1))
        assert s.climb_bit_length == (2 * 3 ** (n - 1) - 1).bit_length()
        assert s.climb_bit_length <= s.max_bit_length


def test_stats_as_dict():
    d = engine.run_to_one(num(5)).as_dict()
    assert d["halvings"] == 4 and d["reached_one"] is True
    assert isinstance(engine.run_to_one(num(5)), TraceStats)
