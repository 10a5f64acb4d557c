"""Dengue human/mosquito transmission model with an adult-mosquito insecticide.

Compartments are ordered ``S_h, E_h, I_h, R_h, A_m, S_m, E_m, I_m``; every
rate is per day.
"""
from __future__ import annotations

import math
from dataclasses import astuple, dataclass, fields
from typing import Sequence

import numpy as np

COMPARTMENTS = ("S_h", "E_h", "I_h", "R_h", "A_m", "S_m", "E_m", "I_m")
NEGATIVE_TOL = 1e-9  # relative to N_h


@dataclass(frozen=True)
class ModelParameters:
    """Rate constants and population scalars.

    Defaults are the Cape Verde 2009 outbreak scenario (human data) with
    Aedes aegypti values taken from Brazil.
    """

    N_h: float = 480000.0
    B: float = 1.0
    beta_mh: float = 0.375
    beta_hm: float = 0.375
    mu_h: float = 1.0 / (71 * 365)
    eta_h: float = 1.0 / 3
    mu_m: float = 1.0 / 11
    mu_b: float = 6.0
    mu_A: float = 1.0 / 4
    eta_A: float = 0.08
    eta_m: float = 1.0 / 11
    nu_h: float = 1.0 / 4
    m: float = 6.0
    k: float = 3.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"parameter {f.name} must be positive, got {value!r}")
        for name in ("beta_mh", "beta_hm"):
            if getattr(self, name) > 1:
                raise ValueError(f"parameter {name} must lie in [0, 1]")

    @property
    def K(self) -> float:
        """Maximal larval capacity."""
        return self.k * self.N_h


@dataclass(frozen=True)
class StateVector:
    S_h: float = 0.0
    E_h: float = 0.0
    I_h: float = 0.0
    R_h: float = 0.0
    A_m: float = 0.0
    S_m: float = 0.0
    E_m: float = 0.0
    I_m: float = 0.0

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "StateVector":
        if len(values) != len(COMPARTMENTS):
            raise ValueError(f"expected {len(COMPARTMENTS)} values, got {len(values)}")
        return cls(*(float(v) for v in values))

    def as_tuple(self) -> tuple[float, ...]:
        return astuple(self)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)


@dataclass(frozen=True)
class DfeState:
    """Disease-free equilibrium for a constant control level."""

    state: StateVector
    c: float

    @property
    def extinct(self) -> bool:
        return self.state.A_m == 0.0 and self.state.S_m == 0.0


def human_total(state: StateVector) -> float:
    return state.S_h + state.E_h + state.I_h + state.R_h


def initial_state(
    params: ModelParameters,
    E_h0: float = 216.0,
    I_h0: float = 434.0,
    R_h0: float = 0.0,
    E_m0: float = 0.0,
    I_m0: float = 0.0,
) -> StateVector:
    """Outbreak start: susceptibles fill the rest, mosquitoes at m and k per human."""
    S_h0 = params.N_h - E_h0 - I_h0 - R_h0
    if S_h0 < 0:
        raise ValueError(f"initial S_h would be negative ({S_h0})")
    return StateVector(S_h0, E_h0, I_h0, R_h0, params.k * params.N_h, params.m * params.N_h, E_m0, I_m0)


def rhs(y: Sequence[float], p: ModelParameters, c: float) -> tuple[float, ...]:
    """Unchecked vector field on a plain 8-sequence (the integrator's hot path)."""
    S_h, E_h, I_h, R_h, A_m, S_m, E_m, I_m = y
    N_h = p.N_h
    infect_h = p.B * p.beta_mh * I_m / N_h * S_h
    infect_m = p.B * p.beta_hm * I_h / N_h * S_m
    return (
        p.mu_h * N_h - infect_h - p.mu_h * S_h,
        infect_h - (p.nu_h + p.mu_h) * E_h,
        p.nu_h * E_h - (p.eta_h + p.mu_h) * I_h,
        p.eta_h * I_h - p.mu_h * R_h,
        # insecticide has no effect on the aquatic phase
        p.mu_b * (1.0 - A_m / p.K) * (S_m + E_m + I_m) - (p.eta_A + p.mu_A) * A_m,
        -infect_m - p.mu_m * S_m + p.eta_A * A_m - c * S_m,
        infect_m - (p.mu_m + p.eta_m) * E_m - c * E_m,
        p.eta_m * E_m - p.mu_m * I_m - c * I_m,
    )


def _check_level(c: float) -> None:
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"control level must lie in [0, 1], got {c!r}")


def derivative(state: StateVector, params: ModelParameters, c: float) -> StateVector:
    """Time derivative of every compartment under control level ``c``."""
    _check_level(c)
    floor = -NEGATIVE_TOL * params.N_h
    for name, value in zip(COMPARTMENTS, state.as_tuple()):
        if value < floor:
            raise ValueError(f"compartment {name} is negative ({value})")
    return StateVector(*rhs(state.as_tuple(), params, c))


def dfe(params: ModelParameters, c: float = 0.0) -> DfeState:
    """Disease-free equilibrium with the mosquito population at its steady state.

    Returns the extinction equilibrium (no mosquitoes) when the control is
    strong enough that adults cannot replace themselves.
    """
    if c < 0:
        raise ValueError("control level must be nonnegative")
    p = params
    bracket = 1.0 - (p.eta_A + p.mu_A) * (p.mu_m + c) / (p.mu_b * p.eta_A)
    if bracket <= 0:
        A_m = S_m = 0.0
    else:
        A_m = p.K * bracket
        S_m = p.eta_A * A_m / (p.mu_m + c)
    return DfeState(StateVector(p.N_h, 0.0, 0.0, 0.0, A_m, S_m, 0.0, 0.0), c)


def next_generation_matrices(params: ModelParameters, c: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Jacobians ``(F, V)`` of the infected subsystem ``(E_h, I_h, E_m, I_m)`` at the DFE.

    F holds the cross-species new-infection terms, V every other flow out of
    or between the infected classes. Both maps are linear in the infected
    variables once susceptibles are frozen at the DFE, so columns are read off
    by evaluating on unit vectors.
    """
    p = params
    eq = dfe(p, c).state

    def new_infections(x):
        E_h, I_h, E_m, I_m = x
        return np.array([
            p.B * p.beta_mh * I_m / p.N_h * eq.S_h,
            0.0,
            p.B * p.beta_hm * I_h / p.N_h * eq.S_m,
            0.0,
        ])

    def transitions(x):
        E_h, I_h, E_m, I_m = x
        return np.array([
            (p.nu_h + p.mu_h) * E_h,
            -p.nu_h * E_h + (p.eta_h + p.mu_h) * I_h,
            (p.mu_m + p.eta_m + c) * E_m,
            -p.eta_m * E_m + (p.mu_m + c) * I_m,
        ])

    basis = np.eye(4)
    F = np.column_stack([new_infections(e) for e in basis])
    V = np.column_stack([transitions(e) for e in basis])
    return F, V


def compute_r0(params: ModelParameters, c: float = 0.0) -> float:
    """Basic reproduction number as the spectral radius of F V^-1."""
    if c < 0:
        raise ValueError("control level must be nonnegative")
    if dfe(params, c).extinct:
        return 0.0
    F, V = next_generation_matrices(params, c)
    try:
        K = F @ np.linalg.inv(V)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError("transition matrix V is singular") from exc
    return float(np.max(np.abs(np.linalg.eigvals(K))))


def r0_threshold(
    params: ModelParameters,
    c_lo: float = 0.0,
    c_hi: float = 1.0,
    tol: float = 1e-10,
) -> float:
    """Control level where R0 crosses one, by bisection on ``[c_lo, c_hi]``."""
    if not c_lo < c_hi:
        raise ValueError(f"degenerate interval [{c_lo}, {c_hi}]")
    f_lo = compute_r0(params, c_lo) - 1.0
    f_hi = compute_r0(params, c_hi) - 1.0
    if not (f_lo > 0 > f_hi):
        raise ValueError(
            f"R0 - 1 does not change sign on [{c_lo}, {c_hi}] "
            f"(R0 = {f_lo + 1:.6g} and {f_hi + 1:.6g})"
        )
    lo, hi = c_lo, c_hi
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if compute_r0(params, mid) > 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
