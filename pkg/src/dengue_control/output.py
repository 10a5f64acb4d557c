"""CSV emission for trajectories and sweep tables."""
from __future__ import annotations

from typing import Iterable, TextIO

import numpy as np

from .experiments import REFERENCE_LABEL, StrategyReport
from .integrator import Trajectory
from .model import COMPARTMENTS

TRAJECTORY_HEADER = ("t",) + COMPARTMENTS + ("c",)
SWEEP_HEADER = (
    "period",
    "insecticide_amount",
    "peak_I_h",
    "t_peak_I_h",
    "peak_I_m",
    "cumulative_infections",
    "feasible",
)


def fmt(x: float) -> str:
    """Plain positional decimal that round-trips exactly (no exponent)."""
    return np.format_float_positional(float(x), unique=True, trim="-")


def thin_indices(times: np.ndarray, interval: float) -> np.ndarray:
    """Grid points lying on multiples of ``interval``, plus both endpoints."""
    if interval <= 0:
        return np.arange(len(times))
    ratio = times / interval
    on_grid = np.abs(ratio - np.round(ratio)) <= 1e-6
    on_grid[0] = on_grid[-1] = True
    return np.flatnonzero(on_grid)


def write_trajectory(traj: Trajectory, out: TextIO, interval: float = 0.1) -> None:
    out.write(",".join(TRAJECTORY_HEADER) + "\n")
    states = traj.clamped_states()
    for i in thin_indices(traj.times, interval):
        row = [traj.times[i], *states[i], traj.levels[i]]
        out.write(",".join(fmt(v) for v in row) + "\n")


def sweep_row(report: StrategyReport) -> list[str]:
    label = REFERENCE_LABEL if report.period is None else fmt(report.period)
    return [
        label,
        fmt(report.insecticide_amount),
        fmt(report.peak_I_h),
        fmt(report.t_peak_I_h),
        fmt(report.peak_I_m),
        fmt(report.cumulative_infections),
        "true" if report.feasible else "false",
    ]


def write_sweep(reports: Iterable[StrategyReport], out: TextIO) -> None:
    out.write(",".join(SWEEP_HEADER) + "\n")
    for r in reports:
        out.write(",".join(sweep_row(r)) + "\n")


def summary_line(report: StrategyReport) -> str:
    parts = [
        f"schedule={report.schedule}",
        f"peak_I_h={fmt(report.peak_I_h)}",
        f"t_peak_I_h={fmt(report.t_peak_I_h)}",
        f"peak_I_m={fmt(report.peak_I_m)}",
        f"t_peak_I_m={fmt(report.t_peak_I_m)}",
        f"cumulative_infections={fmt(report.cumulative_infections)}",
        f"insecticide_amount={fmt(report.insecticide_amount)}",
    ]
    if report.feasible is not None:
        parts.append(f"feasible={str(report.feasible).lower()}")
    return " ".join(parts)


PLOT_SCRIPT = '''\
"""Plot infected humans and mosquitoes from a trajectory CSV."""
import sys

import matplotlib.pyplot as plt
import pandas as pd

path = sys.argv[1] if len(sys.argv) > 1 else {csv!r}
df = pd.read_csv(path)
fig, (ax_h, ax_m) = plt.subplots(1, 2, figsize=(10, 4))
ax_h.plot(df["t"], df["I_h"])
ax_h.set_xlabel("t (days)")
ax_h.set_ylabel("I_h")
ax_m.plot(df["t"], df["I_m"])
ax_m.set_xlabel("t (days)")
ax_m.set_ylabel("I_m")
fig.tight_layout()
fig.savefig(path.rsplit(".", 1)[0] + ".png", dpi=150)
'''


def plot_script(csv_path: str) -> str:
    return PLOT_SCRIPT.format(csv=csv_path)
