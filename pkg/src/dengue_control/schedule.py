"""Piecewise-constant insecticide policies c(t).

Every schedule is left-closed/right-open on its segments, so ``level_at`` is
well defined at a switch instant and takes the value of the segment starting
there.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union


def _check_level(level: float) -> None:
    if not 0.0 <= level <= 1.0:
        raise ValueError(f"control level must lie in [0, 1], got {level!r}")


def _check_time(t: float) -> None:
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t!r}")


def _fmt(x: float) -> str:
    return repr(float(x)).removesuffix(".0") if float(x).is_integer() else repr(float(x))


@dataclass(frozen=True)
class Zero:
    def level_at(self, t: float) -> float:
        _check_time(t)
        return 0.0

    def switch_times(self, horizon: float) -> list[float]:
        return []

    def total_amount(self, horizon: float) -> float:
        return 0.0

    def descriptor(self) -> str:
        return "zero"


@dataclass(frozen=True)
class Constant:
    level: float

    def __post_init__(self):
        _check_level(self.level)

    def level_at(self, t: float) -> float:
        _check_time(t)
        return self.level

    def switch_times(self, horizon: float) -> list[float]:
        return []

    def total_amount(self, horizon: float) -> float:
        return self.level * horizon

    def descriptor(self) -> str:
        return f"constant:{_fmt(self.level)}"


@dataclass(frozen=True)
class Pulsed:
    """Full-strength applications lasting ``pulse_length`` days every ``period`` days."""

    period: float
    pulse_length: float = 1.0
    level: float = 1.0
    start: float = 0.0

    def __post_init__(self):
        if not self.period > 0:
            raise ValueError("period must be positive")
        if not 0 < self.pulse_length <= self.period:
            raise ValueError("pulse_length must lie in (0, period]")
        if self.start < 0:
            raise ValueError("start must be nonnegative")
        _check_level(self.level)

    def _pulse_starts(self, horizon: float) -> list[float]:
        n = math.ceil((horizon - self.start) / self.period) + 1
        return [self.start + i * self.period for i in range(max(n, 0))]

    def level_at(self, t: float) -> float:
        _check_time(t)
        if t < self.start:
            return 0.0
        i = math.floor((t - self.start) / self.period)
        # guard floor() against round-off right at a pulse start
        if self.start + (i + 1) * self.period <= t:
            i += 1
        elif self.start + i * self.period > t:
            i -= 1
        offset = t - (self.start + i * self.period)
        return self.level if offset < self.pulse_length else 0.0

    def switch_times(self, horizon: float) -> list[float]:
        if self.level == 0.0:
            return []
        if self.pulse_length >= self.period:
            return [self.start] if 0 < self.start < horizon else []
        out = set()
        for s in self._pulse_starts(horizon):
            for x in (s, s + self.pulse_length):
                if 0 < x < horizon:
                    out.add(x)
        return sorted(out)

    def total_amount(self, horizon: float) -> float:
        total = 0.0
        for s in self._pulse_starts(horizon):
            overlap = min(s + self.pulse_length, horizon) - max(s, 0.0)
            if overlap > 0:
                total += overlap
        return self.level * total

    def descriptor(self) -> str:
        text = f"pulsed:{_fmt(self.period)}:{_fmt(self.pulse_length)}:{_fmt(self.level)}"
        if self.start:
            text += f":{_fmt(self.start)}"
        return text


@dataclass(frozen=True)
class Piecewise:
    """Levels switched at given instants; ``segments`` is ((t0=0, v0), (t1, v1), ...)."""

    segments: tuple[tuple[float, float], ...]

    def __post_init__(self):
        segs = tuple((float(t), float(v)) for t, v in self.segments)
        if not segs or segs[0][0] != 0.0:
            raise ValueError("piecewise schedule must start at t = 0")
        for (t0, _), (t1, _) in zip(segs, segs[1:]):
            if not t1 > t0:
                raise ValueError("piecewise switch times must be strictly increasing")
        for _, v in segs:
            _check_level(v)
        object.__setattr__(self, "segments", segs)

    def level_at(self, t: float) -> float:
        _check_time(t)
        level = self.segments[0][1]
        for start, v in self.segments:
            if start <= t:
                level = v
            else:
                break
        return level

    def switch_times(self, horizon: float) -> list[float]:
        out = []
        for (_, v0), (t1, v1) in zip(self.segments, self.segments[1:]):
            if v1 != v0 and 0 < t1 < horizon:
                out.append(t1)
        return out

    def total_amount(self, horizon: float) -> float:
        total = 0.0
        ends = [t for t, _ in self.segments[1:]] + [math.inf]
        for (start, v), end in zip(self.segments, ends):
            length = min(end, horizon) - start
            if length > 0:
                total += v * length
        return total

    def descriptor(self) -> str:
        return "piecewise:" + ",".join(f"{_fmt(t)}={_fmt(v)}" for t, v in self.segments)


ControlSchedule = Union[Zero, Constant, Pulsed, Piecewise]


def level_at(schedule: ControlSchedule, t: float) -> float:
    return schedule.level_at(t)


def switch_times(schedule: ControlSchedule, horizon: float) -> list[float]:
    """Discontinuities of c(t) strictly inside ``(0, horizon)``, ascending."""
    if not horizon > 0:
        raise ValueError("horizon must be positive")
    return schedule.switch_times(horizon)


def total_amount(schedule: ControlSchedule, horizon: float) -> float:
    """Exact integral of c(t) over ``[0, horizon]``."""
    if not horizon > 0:
        raise ValueError("horizon must be positive")
    return schedule.total_amount(horizon)


def parse_schedule(text: str) -> ControlSchedule:
    """Parse ``zero``, ``constant:<v>``, ``pulsed:<period>[:<length>[:<level>[:<start>]]]``
    or ``piecewise:<t0=v0,t1=v1,...>`` (case-insensitive)."""
    raw = text.strip().lower()
    kind, _, rest = raw.partition(":")
    try:
        if kind == "zero" and not rest:
            return Zero()
        if kind == "constant":
            return Constant(float(rest))
        if kind == "pulsed":
            parts = [float(x) for x in rest.split(":")]
            if not 1 <= len(parts) <= 4:
                raise ValueError("pulsed takes 1 to 4 fields")
            return Pulsed(*parts)
        if kind == "piecewise":
            segments = []
            for item in rest.split(","):
                t, sep, v = item.partition("=")
                if not sep:
                    raise ValueError(f"expected t=v, got {item!r}")
                segments.append((float(t), float(v)))
            return Piecewise(tuple(segments))
    except ValueError as exc:
        raise ValueError(f"invalid schedule {text!r}: {exc}") from None
    raise ValueError(f"invalid schedule {text!r}: unknown kind {kind!r}")


def merged_breaks(schedules: Sequence[ControlSchedule], horizon: float) -> list[float]:
    """Union of the switch times of several schedules."""
    return sorted({t for s in schedules for t in s.switch_times(horizon)})
