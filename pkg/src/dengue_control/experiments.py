"""Strategy metrics, dominance against the constant reference, period search."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .integrator import DEFAULT_STEP, Trajectory, simulate
from .model import ModelParameters, StateVector
from .schedule import Constant, ControlSchedule, Pulsed

REFERENCE_LEVEL = 0.084
REFERENCE_LABEL = "constant_0.084"


@dataclass(frozen=True)
class StrategyReport:
    schedule: str
    peak_I_h: float
    t_peak_I_h: float
    peak_I_m: float
    t_peak_I_m: float
    cumulative_infections: float
    insecticide_amount: float
    feasible: Optional[bool] = None
    period: Optional[float] = None


class NoFeasiblePeriodError(RuntimeError):
    def __init__(self, message: str, reports: list[StrategyReport]):
        super().__init__(message)
        self.reports = reports


def metrics(traj: Trajectory) -> StrategyReport:
    """Summarise a trajectory; the feasibility flag is left unset."""
    if len(traj) == 0:
        raise ValueError("empty trajectory")
    I_h = traj.component("I_h")
    I_m = traj.component("I_m")
    # argmax returns the first maximum, i.e. the earliest time on ties
    i_h = int(np.argmax(I_h))
    i_m = int(np.argmax(I_m))
    incidence = traj.params.nu_h * traj.component("E_h")
    cumulative = float(np.trapezoid(incidence, traj.times)) if len(traj) > 1 else 0.0
    return StrategyReport(
        schedule=traj.schedule.descriptor(),
        peak_I_h=float(I_h[i_h]),
        t_peak_I_h=float(traj.times[i_h]),
        peak_I_m=float(I_m[i_m]),
        t_peak_I_m=float(traj.times[i_m]),
        cumulative_infections=cumulative,
        insecticide_amount=traj.schedule.total_amount(traj.horizon),
    )


def dominates(candidate: Trajectory, reference: Trajectory, component: str = "I_h") -> bool:
    """True when ``candidate`` never exceeds ``reference`` on ``component``."""
    if component not in ("I_h", "I_m"):
        raise ValueError(f"component must be I_h or I_m, got {component!r}")
    if candidate.times.shape != reference.times.shape or not np.array_equal(
        candidate.times, reference.times
    ):
        raise ValueError(
            "trajectories are on different grids; re-simulate both on the merged "
            "switch times (extra_breaks)"
        )
    return bool(np.all(candidate.component(component) <= reference.component(component)))


def reference_schedule() -> Constant:
    return Constant(REFERENCE_LEVEL)


def compare(
    params: ModelParameters,
    initial: StateVector,
    schedule: ControlSchedule,
    horizon: float,
    h: float = DEFAULT_STEP,
    component: str = "I_h",
) -> tuple[Trajectory, Trajectory, bool]:
    """Simulate ``schedule`` and the reference on a common grid and test dominance."""
    ref = reference_schedule()
    breaks = schedule.switch_times(horizon)
    cand = simulate(params, initial, schedule, horizon, h)
    ref_traj = simulate(params, initial, ref, horizon, h, extra_breaks=breaks)
    return cand, ref_traj, dominates(cand, ref_traj, component)


def _period_report(params, initial, period, horizon, h) -> StrategyReport:
    try:
        cand, _, ok = compare(params, initial, Pulsed(period), horizon, h)
    except (ValueError, ArithmeticError) as exc:
        raise type(exc)(f"period {period:g}: {exc}") from exc
    return replace(metrics(cand), feasible=ok, period=period)


def reference_report(params, initial, horizon, h=DEFAULT_STEP) -> StrategyReport:
    traj = simulate(params, initial, reference_schedule(), horizon, h)
    return replace(metrics(traj), feasible=True)


def sweep_periods(
    params: ModelParameters,
    initial: StateVector,
    periods: Sequence[float],
    horizon: float,
    h: float = DEFAULT_STEP,
) -> list[StrategyReport]:
    """One report per pulse period (input order), then the reference's own report."""
    if len(periods) == 0:
        raise ValueError("no periods given")
    for p in periods:
        if not p > 0:
            raise ValueError(f"period must be positive, got {p!r}")
    reports = [_period_report(params, initial, p, horizon, h) for p in periods]
    reports.append(reference_report(params, initial, horizon, h))
    return reports


def find_best_period(
    params: ModelParameters,
    initial: StateVector,
    lo: int,
    hi: int,
    horizon: float,
    h: float = DEFAULT_STEP,
) -> tuple[int, StrategyReport]:
    """Largest integer period in ``[lo, hi]`` whose I_h curve stays under the reference.

    Longer periods use no more insecticide, so the largest feasible period
    is the cheapest feasible one.
    """
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    reports = [_period_report(params, initial, p, horizon, h) for p in range(lo, hi + 1)]
    feasible = [r for r in reports if r.feasible]
    if not feasible:
        raise NoFeasiblePeriodError(f"no feasible period in [{lo}, {hi}]", reports)
    best = max(feasible, key=lambda r: r.period)
    return int(best.period), best
