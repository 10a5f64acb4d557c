import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dengue_control.schedule import (
    Constant,
    Piecewise,
    Pulsed,
    Zero,
    level_at,
    merged_breaks,
    parse_schedule,
    switch_times,
    total_amount,
)


def enumerate_switches(period, pulse, horizon):
    """Brute force: scan a fine integer-aligned grid for level changes."""
    ts = np.arange(0, horizon * 100 + 1) / 100
    on = ((ts % period) < pulse).astype(int)
    return [float(ts[i]) for i in range(1, len(ts) - 1) if on[i] != on[i - 1]]


class TestLevelAt:
    def test_pulse_day(self):
        assert level_at(Pulsed(7), 0.5) == 1
        assert level_at(Pulsed(7), 3.0) == 0
        assert level_at(Pulsed(7), 7.0) == 1
        assert level_at(Pulsed(7), 1.0) == 0

    def test_constant(self):
        assert level_at(Constant(0.084), 42) == 0.084

    def test_piecewise(self):
        s = Piecewise(((0, 0.5), (10, 0.0), (20, 1.0)))
        assert [s.level_at(t) for t in (0, 9.99, 10, 19, 20, 100)] == [0.5, 0.5, 0, 0, 1, 1]

    def test_negative_time(self):
        for s in (Zero(), Constant(0.1), Pulsed(7), Piecewise(((0, 1),))):
            with pytest.raises(ValueError):
                s.level_at(-1)

    def test_delayed_start(self):
        s = Pulsed(10, 2, 0.5, start=3)
        assert [s.level_at(t) for t in (0, 2.9, 3, 4.9, 5, 13, 15)] == [0, 0, 0.5, 0.5, 0, 0.5, 0]

    def test_non_integer_period_round_off(self):
        s = Pulsed(7.3)
        assert s.level_at(3 * 7.3) == 1
        assert s.level_at(3 * 7.3 - 1e-9) == 0


class TestSwitchTimes:
    def test_constant_has_none(self):
        assert switch_times(Constant(0.084), 84) == []
        assert switch_times(Zero(), 84) == []

    def test_weekly(self):
        expected = sorted({float(x) for n in range(12) for x in (7 * n, 7 * n + 1)} - {0.0})
        assert switch_times(Pulsed(7), 84) == expected
        assert expected[:4] == [1, 7, 8, 14] and expected[-2:] == [77, 78]
        assert switch_times(Pulsed(7), 84) == enumerate_switches(7, 1, 84)

    def test_monthly(self):
        assert switch_times(Pulsed(30), 84) == [1, 30, 31, 60, 61]
        assert enumerate_switches(30, 1, 84) == [1, 30, 31, 60, 61]

    def test_full_duty_pulse_is_constant(self):
        assert switch_times(Pulsed(5, 5, 0.3), 84) == []
        s, c = Pulsed(5, 5, 0.3), Constant(0.3)
        for t in np.linspace(0, 84, 301):
            assert s.level_at(t) == c.level_at(t)

    @pytest.mark.parametrize("sched", [Pulsed(7), Pulsed(11), Pulsed(4.5, 0.75, 0.6, 2), Piecewise(((0, 0.2), (3.3, 0.9), (40, 0)))])
    def test_constant_between_switches(self, sched):
        bounds = [0.0, *switch_times(sched, 84), 84.0]
        for a, b in zip(bounds, bounds[1:]):
            mid = sched.level_at(0.5 * (a + b))
            assert sched.level_at(a) == mid
            assert sched.level_at(a + 0.9 * (b - a)) == mid
            if b < 84:
                assert sched.level_at(b) != mid

    def test_merged(self):
        assert merged_breaks([Pulsed(30), Pulsed(60)], 84) == [1, 30, 31, 60, 61]


class TestTotalAmount:
    @pytest.mark.parametrize("period,amount", [(7, 12), (11, 8), (12, 7), (15, 6), (30, 3)])
    def test_table(self, period, amount):
        assert total_amount(Pulsed(period), 84) == pytest.approx(amount, abs=1e-9)

    def test_constant_reference(self):
        assert total_amount(Constant(0.084), 84) == pytest.approx(7.056, abs=1e-9)
        assert total_amount(Zero(), 84) == 0

    def test_truncated_pulse(self):
        assert total_amount(Pulsed(10, 3, 1.0), 21.5) == pytest.approx(7.5)

    @given(st.floats(0.5, 40), st.floats(0.05, 1), st.floats(0, 1), st.floats(1, 120))
    def test_matches_segment_sum(self, period, frac, level, horizon):
        sched = Pulsed(period, period * frac, level)
        bounds = [0.0, *switch_times(sched, horizon), horizon]
        expected = sum(sched.level_at(0.5 * (a + b)) * (b - a) for a, b in zip(bounds, bounds[1:]))
        assert total_amount(sched, horizon) == pytest.approx(expected, rel=1e-9, abs=1e-9)

    def test_cost_monotone_in_period(self):
        amounts = [total_amount(Pulsed(p), 84) for p in range(1, 85)]
        assert all(a >= b for a, b in zip(amounts, amounts[1:]))


class TestParse:
    @pytest.mark.parametrize("text,expected", [
        ("zero", Zero()),
        ("ZERO", Zero()),
        ("constant:0.084", Constant(0.084)),
        ("pulsed:7:1:1", Pulsed(7, 1, 1)),
        ("Pulsed:15", Pulsed(15)),
        ("pulsed:10:2:0.5:3", Pulsed(10, 2, 0.5, 3)),
        ("piecewise:0=0.5,10=0,20=1", Piecewise(((0, 0.5), (10, 0), (20, 1)))),
    ])
    def test_parse(self, text, expected):
        assert parse_schedule(text) == expected

    @pytest.mark.parametrize("text", ["", "constant", "constant:2", "pulsed:7:8", "pulsed:x",
                                      "piecewise:1=0.5", "piecewise:0=0.5,0=1", "weekly", "zero:1"])
    def test_reject(self, text):
        with pytest.raises(ValueError):
            parse_schedule(text)

    @pytest.mark.parametrize("sched", [Zero(), Constant(0.084), Pulsed(7), Pulsed(7.5, 0.25, 0.3, 1.5),
                                       Piecewise(((0, 0.1), (2.5, 1)))])
    def test_descriptor_roundtrip(self, sched):
        assert parse_schedule(sched.descriptor()) == sched
