"""Command-line front end: report, sweep, figures and validate subcommands.

Exit codes: 0 success, 1 validation failure, 2 bad arguments or domain error,
3 output I/O error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import validate as validation
from .bounds import full_report
from .channels import BlackHoleParams, hawking_temperature, unruh_channel
from .states import InvalidStateError
from .sweep import (
    FAMILIES,
    SweepConfig,
    make_observable,
    run_sweep,
    write_figure_tables,
    write_rows,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


def default_jobs() -> int:
    raw = os.environ.get("HORIZON_EUR_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horizon-eur",
        description=(
            "Entropic uncertainty bounds and secret-key rates for two-qubit states "
            "whose memory qubit sits near a dilaton black hole horizon."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", help="print every bound for one configuration")
    _add_state_args(report)
    report.add_argument("--p", type=float, required=True, help="family mixing parameter in [0, 1]")
    report.add_argument("--temp", type=float, default=None, help="Hawking temperature (>= 0)")
    report.add_argument("--mass", type=float, default=None, help="black hole mass M")
    report.add_argument("--dilaton", type=float, default=None, help="dilaton charge D (requires --mass)")

    sweep = sub.add_parser("sweep", help="evaluate a (p, T) grid and write CSV or JSON")
    _add_state_args(sweep)
    sweep.add_argument("--p-min", type=float, default=0.0)
    sweep.add_argument("--p-max", type=float, default=1.0)
    sweep.add_argument("--p-step", type=float, default=0.1)
    sweep.add_argument("--t-list", type=str, default=None, help="comma-separated temperatures")
    sweep.add_argument("--t-min", type=float, default=None)
    sweep.add_argument("--t-max", type=float, default=None)
    sweep.add_argument("--t-step", type=float, default=None)
    sweep.add_argument("--out", type=Path, required=True)
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--jobs", type=int, default=default_jobs())

    figures = sub.add_parser("figures", help="write the six figure data files fig2.csv .. fig7.csv")
    figures.add_argument("--out", type=Path, required=True, help="output directory")
    figures.add_argument("--omega", type=float, default=1.0)
    figures.add_argument("--jobs", type=int, default=default_jobs())

    val = sub.add_parser("validate", help="run every invariant suite")
    val.add_argument("--seed", type=int, default=validation.DEFAULT_SEED)

    return parser


def _add_state_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--state", choices=sorted(FAMILIES), required=True)
    parser.add_argument("--omega", type=float, default=1.0, help="mode frequency (> 0)")
    parser.add_argument("--obs-q", type=str, default="x", help="x|y|z or theta,phi")
    parser.add_argument("--obs-r", type=str, default="z", help="x|y|z or theta,phi")


def resolve_temperature(args: argparse.Namespace) -> float:
    has_temp = args.temp is not None
    has_hole = args.mass is not None or args.dilaton is not None
    if has_temp == has_hole:
        raise ValueError("give exactly one of --temp or the pair --mass/--dilaton")
    if has_temp:
        if args.temp < 0.0:
            raise ValueError("temperature must be nonnegative")
        return args.temp
    if args.mass is None or args.dilaton is None:
        raise ValueError("--mass and --dilaton must be given together")
    return hawking_temperature(BlackHoleParams(args.mass, args.dilaton))


def cmd_report(args: argparse.Namespace) -> int:
    temperature = resolve_temperature(args)
    make_observable(args.obs_q)
    make_observable(args.obs_r)
    state = FAMILIES[args.state](args.p)
    rep = full_report(
        state,
        make_observable(args.obs_q),
        make_observable(args.obs_r),
        channel=unruh_channel(args.omega, temperature),
    )
    print(f"family           {args.state}")
    print(f"p                {args.p:.6f}")
    print(f"T                {temperature:.6f}")
    print(f"omega            {args.omega:.6f}")
    print(f"obs_q            {args.obs_q}")
    print(f"obs_r            {args.obs_r}")
    for name, value in rep.as_dict().items():
        print(f"{name:<16} {value:.6f}")
    return EXIT_OK


def parse_t_grid(args: argparse.Namespace) -> tuple[float, ...]:
    if args.t_list is not None:
        if args.t_min is not None or args.t_max is not None or args.t_step is not None:
            raise ValueError("give either --t-list or --t-min/--t-max/--t-step, not both")
        return tuple(float(tok) for tok in args.t_list.split(",") if tok.strip())
    if args.t_min is None or args.t_max is None or args.t_step is None:
        raise ValueError("temperature grid needs --t-list or all of --t-min/--t-max/--t-step")
    return grid_from_steps(args.t_min, args.t_max, args.t_step)


def grid_from_steps(lo: float, hi: float, step: float) -> tuple[float, ...]:
    if step <= 0.0:
        raise ValueError("grid step must be positive")
    if hi < lo:
        raise ValueError("grid upper end below lower end")
    count = int(round((hi - lo) / step))
    values = [lo + k * step for k in range(count + 1)]
    return tuple(v for v in values if v <= hi + 1e-12)


def cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        family=args.state,
        p_grid=grid_from_steps(args.p_min, args.p_max, args.p_step),
        t_grid=parse_t_grid(args),
        omega=args.omega,
        q_axis=args.obs_q,
        r_axis=args.obs_r,
        output_path=args.out,
        format=args.format,
    )
    rows = run_sweep(config, jobs=max(1, args.jobs))
    write_rows(rows, args.out, fmt=args.format)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_figures(args: argparse.Namespace) -> int:
    paths = write_figure_tables(args.out, omega=args.omega, jobs=max(1, args.jobs))
    for path in paths:
        print(f"wrote {path}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    results = validation.run_all(seed=args.seed)
    lines, status = validation.summarize(results)
    for line in lines:
        print(line)
    return EXIT_VALIDATION if status else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "report": cmd_report,
        "sweep": cmd_sweep,
        "figures": cmd_figures,
        "validate": cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except (InvalidStateError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
