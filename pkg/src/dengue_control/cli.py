"""Command-line entry point.

Exit status: 0 on success, 1 on numerical failure, 2 on usage or config error.
"""
from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from typing import Optional, Sequence

from . import experiments
from .config import ConfigError, ScenarioConfig, load_config, parse_assignment
from .integrator import DivergenceError, simulate
from .model import compute_r0, r0_threshold
from .output import fmt, plot_script, summary_line, write_sweep, write_trajectory


DEFAULT_PERIODS = "7,11,12,15,30"


class UsageError(Exception):
    pass


def _float_list(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value scenario file")
    common.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        help="override one config key (repeatable)")
    common.add_argument("--schedule", help="zero | constant:<v> | pulsed:<period>:<length>:<level> | piecewise:<t=v,...>")
    common.add_argument("--out", default="-", help="output path (default stdout)")
    common.add_argument("--step", type=float, help="integration step in days")
    common.add_argument("--horizon", type=float, help="final time in days")

    parser = argparse.ArgumentParser(prog="dengue-control", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", parents=[common], help="write a trajectory CSV")
    p.add_argument("--interval", type=float, default=0.1,
                   help="output spacing in days; 0 writes every step (default 0.1)")

    p = sub.add_parser("sweep", parents=[common], help="compare pulse periods with the constant reference")
    p.add_argument("--periods", type=_float_list, default=_float_list(DEFAULT_PERIODS))

    p = sub.add_parser("find-period", parents=[common], help="cheapest pulse period dominating the reference")
    p.add_argument("--lo", type=int, default=7)
    p.add_argument("--hi", type=int, default=30)

    p = sub.add_parser("r0", parents=[common], help="basic reproduction number for constant control levels")
    p.add_argument("--c", dest="levels", type=_float_list, default=[0.0, experiments.REFERENCE_LEVEL])
    p.add_argument("--threshold", action="store_true", help="also print the level where R0 = 1")

    p = sub.add_parser("plot-script", parents=[common], help="emit a matplotlib script for a trajectory CSV")
    p.add_argument("csv", nargs="?", default="trajectory.csv")
    return parser


def scenario_from_args(args) -> ScenarioConfig:
    overrides = dict(parse_assignment(item) for item in args.set)
    if args.schedule is not None:
        overrides["schedule"] = args.schedule
    if args.step is not None:
        overrides["h"] = repr(args.step)
    if args.horizon is not None:
        overrides["t_f"] = repr(args.horizon)
    return load_config(args.config, overrides)


def cmd_simulate(cfg: ScenarioConfig, out, interval: float = 0.1) -> None:
    traj = simulate(cfg.params, cfg.initial_state(), cfg.control(), cfg.t_f, cfg.h)
    write_trajectory(traj, out, interval)
    print(summary_line(experiments.metrics(traj)), file=sys.stderr)


def cmd_sweep(cfg: ScenarioConfig, out, periods: Sequence[float]) -> None:
    reports = experiments.sweep_periods(cfg.params, cfg.initial_state(), periods, cfg.t_f, cfg.h)
    write_sweep(reports, out)


def cmd_find_period(cfg: ScenarioConfig, out, lo: int, hi: int) -> int:
    try:
        best, report = experiments.find_best_period(cfg.params, cfg.initial_state(), lo, hi, cfg.t_f, cfg.h)
    except experiments.NoFeasiblePeriodError as exc:
        write_sweep(exc.reports, out)
        print(f"no feasible period in [{lo}, {hi}]", file=sys.stderr)
        return 1
    write_sweep([report], out)
    print(f"best_period={best} insecticide_amount={fmt(report.insecticide_amount)}", file=sys.stderr)
    return 0


def cmd_r0(cfg: ScenarioConfig, out, levels: Sequence[float], threshold: bool = False) -> None:
    out.write("c,R0\n")
    for c in levels:
        out.write(f"{fmt(c)},{fmt(compute_r0(cfg.params, c))}\n")
    if threshold:
        out.write(f"c_threshold={fmt(r0_threshold(cfg.params, 0.0, 1.0))}\n")


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    try:
        cfg = scenario_from_args(args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    status = 0
    try:
        with _open_out(args.out) as out:
            if args.command == "simulate":
                cmd_simulate(cfg, out, args.interval)
            elif args.command == "sweep":
                cmd_sweep(cfg, out, args.periods)
            elif args.command == "find-period":
                status = cmd_find_period(cfg, out, args.lo, args.hi)
            elif args.command == "r0":
                cmd_r0(cfg, out, args.levels, args.threshold)
            elif args.command == "plot-script":
                out.write(plot_script(args.csv))
    except (DivergenceError, ArithmeticError, RuntimeError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1
    return status


if __name__ == "__main__":
    sys.exit(main())
