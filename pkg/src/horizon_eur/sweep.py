"""Grid evaluation over (p, T) and deterministic CSV/JSON emission.

Rows are always emitted sorted by (p, then T) with values printed at 9
significant digits, so output bytes are reproducible regardless of worker
count or scheduling.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .bounds import full_report
from .channels import KrausChannel, unruh_channel
from .measurement import Observable, bloch_observable, pauli
from .states import DensityMatrix, bell_diagonal_from_p, werner, x_state

FAMILIES: dict[str, Callable[[float], DensityMatrix]] = {
    "bell-diagonal": bell_diagonal_from_p,
    "werner": werner,
    "x-state": x_state,
}

CSV_COLUMNS = (
    "family",
    "p",
    "T",
    "omega",
    "c",
    "mu_bound",
    "s_cond_ab",
    "berta_bound",
    "delta",
    "adabi_bound",
    "lhs",
    "qsk_rate",
)

LINE_T_GRID = (0.1, 0.5, 1.0, 2.0, 10.0)
FIGURE_P_GRID = tuple(i / 100 for i in range(101))
CONTOUR_T_GRID = tuple(0.01 + i * (10.0 - 0.01) / 100 for i in range(101))

# One data file per figure analog: line grids for the Bell-diagonal pair,
# full contour grids for the Werner and X-state pairs.
FIGURE_SPECS: dict[str, tuple[str, str]] = {
    "fig2": ("bell-diagonal", "lines"),
    "fig3": ("bell-diagonal", "lines"),
    "fig4": ("werner", "contour"),
    "fig5": ("werner", "contour"),
    "fig6": ("x-state", "contour"),
    "fig7": ("x-state", "contour"),
}


def make_observable(spec: str) -> Observable:
    """Parse an observable spec: a Pauli axis (x|y|z) or a 'theta,phi' pair."""
    text = spec.strip().lower()
    if text in ("x", "y", "z"):
        return pauli(text)
    parts = text.split(",")
    if len(parts) == 2:
        try:
            theta, phi = float(parts[0]), float(parts[1])
        except ValueError:
            pass
        else:
            return bloch_observable(theta, phi)
    raise ValueError(f"observable spec {spec!r} is neither a Pauli axis nor 'theta,phi'")


@dataclass(frozen=True)
class SweepConfig:
    """A (p, T) grid over one state family, plus output selection."""

    family: str
    p_grid: tuple[float, ...]
    t_grid: tuple[float, ...]
    omega: float = 1.0
    q_axis: str = "x"
    r_axis: str = "z"
    output_path: Path | None = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {sorted(FAMILIES)}")
        object.__setattr__(self, "p_grid", tuple(float(p) for p in self.p_grid))
        object.__setattr__(self, "t_grid", tuple(float(t) for t in self.t_grid))
        _check_grid(self.p_grid, "p_grid")
        _check_grid(self.t_grid, "t_grid")
        if not all(0.0 <= p <= 1.0 for p in self.p_grid):
            raise ValueError("p_grid values must lie in [0, 1]")
        if self.t_grid[0] < 0.0:
            raise ValueError("temperatures must be nonnegative")
        if not self.omega > 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        make_observable(self.q_axis)
        make_observable(self.r_axis)


def _check_grid(grid: Sequence[float], name: str) -> None:
    if not grid:
        raise ValueError(f"{name} must be non-empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError(f"{name} must be strictly increasing")


@dataclass(frozen=True)
class ResultRow:
    """One evaluated grid point, mirroring the CSV column contract."""

    family: str
    p: float
    T: float
    omega: float
    c: float
    mu_bound: float
    s_cond_ab: float
    berta_bound: float
    delta: float
    adabi_bound: float
    lhs: float
    qsk_rate: float

    def values(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))


@lru_cache(maxsize=512)
def _cached_channel(omega: float, temperature: float) -> KrausChannel:
    # channels are immutable, so grid points sharing (omega, T) can share one
    return unruh_channel(omega, temperature)


def evaluate_point(
    family: str, p: float, temperature: float, omega: float, q_axis: str, r_axis: str
) -> ResultRow:
    """Full report for one grid point, flattened to a row."""
    state = FAMILIES[family](p)
    channel = _cached_channel(omega, temperature)
    rep = full_report(state, make_observable(q_axis), make_observable(r_axis), channel=channel)
    return ResultRow(
        family=family,
        p=p,
        T=temperature,
        omega=omega,
        c=rep.c,
        mu_bound=rep.mu_bound,
        s_cond_ab=rep.s_cond_ab,
        berta_bound=rep.berta_bound,
        delta=rep.delta,
        adabi_bound=rep.adabi_bound,
        lhs=rep.lhs,
        qsk_rate=rep.qsk_lower,
    )


def _evaluate_star(args: tuple) -> ResultRow:
    return evaluate_point(*args)


def run_sweep(config: SweepConfig, jobs: int = 1) -> list[ResultRow]:
    """Evaluate every grid point, returned sorted by (p, then T)."""
    points = [
        (config.family, p, t, config.omega, config.q_axis, config.r_axis)
        for p in config.p_grid
        for t in config.t_grid
    ]
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(points) // (jobs * 4))
            rows = list(pool.map(_evaluate_star, points, chunksize=chunk))
    else:
        rows = [_evaluate_star(p) for p in points]
    # points are generated in (p, T) order; sorting keeps that contract even
    # if the execution strategy changes
    rows.sort(key=lambda r: (r.p, r.T))
    return rows


def format_value(value) -> str:
    if isinstance(value, str):
        return value
    return f"{value:.9g}"


def render_csv(rows: Iterable[ResultRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(format_value(v) for v in row.values()) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(rows: Iterable[ResultRow]) -> str:
    payload = [dict(zip(CSV_COLUMNS, row.values())) for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def write_rows(rows: Sequence[ResultRow], path: Path, fmt: str = "csv") -> None:
    text = render_csv(rows) if fmt == "csv" else render_json(rows)
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def figure_config(name: str, omega: float = 1.0) -> SweepConfig:
    """Sweep configuration behind one of the figure data files fig2..fig7."""
    family, kind = FIGURE_SPECS[name]
    t_grid = LINE_T_GRID if kind == "lines" else CONTOUR_T_GRID
    return SweepConfig(family=family, p_grid=FIGURE_P_GRID, t_grid=t_grid, omega=omega)


def write_figure_tables(out_dir: Path, omega: float = 1.0, jobs: int = 1) -> list[Path]:
    """Emit fig2.csv .. fig7.csv into ``out_dir`` and return the paths.

    Figures sharing a family and grid reuse one computation.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cache: dict[tuple[str, str], list[ResultRow]] = {}
    written = []
    for name, (family, kind) in FIGURE_SPECS.items():
        key = (family, kind)
        if key not in cache:
            cache[key] = run_sweep(figure_config(name, omega=omega), jobs=jobs)
        path = out_dir / f"{name}.csv"
        write_rows(cache[key], path, fmt="csv")
        written.append(path)
    return written
