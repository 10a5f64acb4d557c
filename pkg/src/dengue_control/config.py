"""Scenario configuration: flat ``key = value`` files with ``#`` comments."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Mapping, Optional, Union

from .model import ModelParameters, StateVector
from .schedule import ControlSchedule, parse_schedule

PARAM_KEYS = tuple(f.name for f in fields(ModelParameters))


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ScenarioConfig:
    params: ModelParameters = field(default_factory=ModelParameters)
    E_h0: float = 216.0
    I_h0: float = 434.0
    R_h0: float = 0.0
    E_m0: float = 0.0
    I_m0: float = 0.0
    # derived from params when None
    S_h0: Optional[float] = None
    A_m0: Optional[float] = None
    S_m0: Optional[float] = None
    t_f: float = 84.0
    h: float = 0.01
    schedule: str = "zero"

    def __post_init__(self):
        for name in ("E_h0", "I_h0", "R_h0", "E_m0", "I_m0", "S_h0", "A_m0", "S_m0"):
            v = getattr(self, name)
            if v is not None and (not math.isfinite(v) or v < 0):
                raise ConfigError(f"{name} must be a nonnegative number, got {v!r}")
        S_h0 = self.initial_state().S_h
        if S_h0 < 0:
            raise ConfigError(f"S_h0 = N_h - E_h0 - I_h0 - R_h0 is negative ({S_h0:g})")
        if not self.t_f > 0:
            raise ConfigError("t_f must be positive")
        if not 0 < self.h <= self.t_f:
            raise ConfigError("h must lie in (0, t_f]")
        try:
            parse_schedule(self.schedule)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def initial_state(self) -> StateVector:
        p = self.params
        S_h0 = self.S_h0 if self.S_h0 is not None else p.N_h - self.E_h0 - self.I_h0 - self.R_h0
        A_m0 = self.A_m0 if self.A_m0 is not None else p.k * p.N_h
        S_m0 = self.S_m0 if self.S_m0 is not None else p.m * p.N_h
        return StateVector(S_h0, self.E_h0, self.I_h0, self.R_h0, A_m0, S_m0, self.E_m0, self.I_m0)

    def control(self) -> ControlSchedule:
        return parse_schedule(self.schedule)


SCENARIO_KEYS = tuple(f.name for f in fields(ScenarioConfig) if f.name != "params")
VALID_KEYS = PARAM_KEYS + SCENARIO_KEYS
_OPTIONAL = {"S_h0", "A_m0", "S_m0"}


def parse_lines(text: str, source: str = "<config>") -> dict[str, str]:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        values[key.strip()] = value.strip()
    return values


def parse_assignment(item: str) -> tuple[str, str]:
    key, sep, value = item.partition("=")
    if not sep or not key.strip():
        raise ConfigError(f"expected key=value, got {item!r}")
    return key.strip(), value.strip()


def build_config(values: Mapping[str, str]) -> ScenarioConfig:
    unknown = sorted(set(values) - set(VALID_KEYS))
    if unknown:
        raise ConfigError(f"unknown key(s) {', '.join(unknown)}; valid keys: {', '.join(VALID_KEYS)}")
    numbers = {}
    for key, raw in values.items():
        if key == "schedule":
            continue
        try:
            numbers[key] = float(raw)
        except ValueError:
            raise ConfigError(f"{key} must be a number, got {raw!r}") from None
    try:
        params = ModelParameters(**{k: numbers[k] for k in PARAM_KEYS if k in numbers})
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    scenario = {k: numbers[k] for k in SCENARIO_KEYS if k in numbers}
    if "schedule" in values:
        scenario["schedule"] = values["schedule"]
    return ScenarioConfig(params=params, **scenario)


def load_config(
    path: Union[str, Path, None] = None,
    overrides: Optional[Mapping[str, str]] = None,
) -> ScenarioConfig:
    """Defaults, then the file at ``path``, then ``overrides`` (strings, as on the command line)."""
    values: dict[str, str] = {}
    if path is not None:
        values.update(parse_lines(Path(path).read_text(), str(path)))
    if overrides:
        values.update(overrides)
    return build_config(values)


def write_config(cfg: ScenarioConfig) -> str:
    lines = ["# model parameters"]
    for key in PARAM_KEYS:
        lines.append(f"{key} = {getattr(cfg.params, key)!r}")
    lines.append("# scenario")
    for key in SCENARIO_KEYS:
        value = getattr(cfg, key)
        if key in _OPTIONAL and value is None:
            continue
        lines.append(f"{key} = {value if key == 'schedule' else repr(float(value))}")
    return "\n".join(lines) + "\n"

