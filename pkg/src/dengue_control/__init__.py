"""Deterministic simulator for a dengue transmission model with insecticide control."""
from .experiments import (
    StrategyReport,
    dominates,
    find_best_period,
    metrics,
    sweep_periods,
)
from .integrator import DivergenceError, Trajectory, rk4_step, simulate
from .model import (
    DfeState,
    ModelParameters,
    StateVector,
    compute_r0,
    derivative,
    dfe,
    human_total,
    initial_state,
    r0_threshold,
)
from .schedule import Constant, Piecewise, Pulsed, Zero, parse_schedule, total_amount

__version__ = "0.1.0"
