"""Fixed-step classical Runge-Kutta integration aligned to control switches."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .model import COMPARTMENTS, NEGATIVE_TOL, ModelParameters, StateVector, rhs
from .schedule import ControlSchedule

DEFAULT_STEP = 0.01


class DivergenceError(ArithmeticError):
    """Integration produced a non-finite or strongly negative state."""


@dataclass(frozen=True, eq=False)
class Trajectory:
    params: ModelParameters
    schedule: ControlSchedule
    times: np.ndarray   # (n,)
    states: np.ndarray  # (n, 8), raw integrator values
    levels: np.ndarray  # (n,), control in force on the step leaving each point
    breaks: tuple[float, ...] = ()

    def __post_init__(self):
        for arr in (self.times, self.states, self.levels):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def horizon(self) -> float:
        return float(self.times[-1])

    def state(self, i: int) -> StateVector:
        return StateVector.from_sequence(self.states[i])

    def component(self, name: str) -> np.ndarray:
        return self.states[:, COMPARTMENTS.index(name)]

    def clamped_states(self) -> np.ndarray:
        """States with round-off negatives replaced by zero, for output only."""
        return np.maximum(self.states, 0.0) + 0.0  # also drops -0.0


def _rk4(y, p: ModelParameters, c: float, h: float):
    k1 = rhs(y, p, c)
    k2 = rhs([a + 0.5 * h * b for a, b in zip(y, k1)], p, c)
    k3 = rhs([a + 0.5 * h * b for a, b in zip(y, k2)], p, c)
    k4 = rhs([a + h * b for a, b in zip(y, k3)], p, c)
    return tuple(
        a + h / 6.0 * (d1 + 2.0 * d2 + 2.0 * d3 + d4)
        for a, d1, d2, d3, d4 in zip(y, k1, k2, k3, k4)
    )


def rk4_step(state: StateVector, params: ModelParameters, c: float, h: float) -> StateVector:
    """Advance one step of length ``h`` with the control held at ``c``."""
    if not h > 0:
        raise ValueError("step must be positive")
    out = _rk4(state.as_tuple(), params, c, h)
    if not all(math.isfinite(v) for v in out):
        raise DivergenceError(f"non-finite state after step of {h} days")
    return StateVector(*out)


def segment_grid(a: float, b: float, h: float) -> list[float]:
    """Points of ``(a, b]`` spaced by ``h`` from ``a``, last step shortened to land on ``b``."""
    n = max(1, math.ceil((b - a) / h - 1e-9))
    return [a + i * h for i in range(1, n)] + [b]


def simulate(
    params: ModelParameters,
    initial: StateVector,
    schedule: ControlSchedule,
    horizon: float,
    h: float = DEFAULT_STEP,
    extra_breaks: Iterable[float] = (),
) -> Trajectory:
    """Integrate from ``initial`` over ``[0, horizon]``.

    Steps never straddle a discontinuity of the schedule nor any of
    ``extra_breaks`` (used to put two schedules on a common grid).
    """
    if not horizon > 0:
        raise ValueError("horizon must be positive")
    if not 0 < h <= horizon:
        raise ValueError("step must lie in (0, horizon]")
    floor = -NEGATIVE_TOL * params.N_h
    for name, v in zip(COMPARTMENTS, initial.as_tuple()):
        if not math.isfinite(v) or v < floor:
            raise ValueError(f"initial {name} is invalid ({v})")

    breaks = sorted(
        set(schedule.switch_times(horizon)) | {t for t in extra_breaks if 0 < t < horizon}
    )
    bounds = [0.0, *breaks, float(horizon)]

    y = initial.as_tuple()
    times = [0.0]
    states = [y]
    levels = []
    for a, b in zip(bounds, bounds[1:]):
        # constant on [a, b); the midpoint avoids round-off at the left edge
        c = schedule.level_at(0.5 * (a + b))
        t = a
        for t_next in segment_grid(a, b, h):
            y = _rk4(y, params, c, t_next - t)
            if not all(math.isfinite(v) for v in y):
                raise DivergenceError(f"non-finite state at t = {t_next:g}")
            for name, v in zip(COMPARTMENTS, y):
                if v < floor:
                    raise DivergenceError(f"{name} fell to {v:g} at t = {t_next:g}")
            t = t_next
            times.append(t)
            states.append(y)
            levels.append(c)
    levels.append(schedule.level_at(float(horizon)))

    return Trajectory(
        params=params,
        schedule=schedule,
        times=np.array(times),
        states=np.array(states),
        levels=np.array(levels),
        breaks=tuple(breaks),
    )
