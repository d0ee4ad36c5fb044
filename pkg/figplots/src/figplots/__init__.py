"""Render figure analogs from horizon-eur sweep CSV files.

Consumes the sweep CSV contract (header family,p,T,omega,c,mu_bound,
s_cond_ab,berta_bound,delta,adabi_bound,lhs,qsk_rate) and produces either a
line plot (one curve per temperature, over p) or a filled contour over the
(T, p) plane. Styling is fixed and output carries no timestamps, so rendering
the same CSV twice yields identical bytes. No physics is recomputed here.
"""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__version__ = "0.1.0"

REQUIRED_COLUMNS = ("family", "p", "T")
Y_COLUMNS = ("adabi_bound", "qsk_rate")

Y_LABELS = {
    "adabi_bound": "uncertainty lower bound (bits)",
    "qsk_rate": "secret-key rate bound (bits)",
}

# preset name -> (kind, y column, title); input fig<N>.csv, output fig<N>.png
PRESETS: dict[str, tuple[str, str, str]] = {
    "fig2": ("lines", "adabi_bound", "Uncertainty bound vs p (Bell-diagonal family)"),
    "fig3": ("lines", "qsk_rate", "Secret-key rate vs p (Bell-diagonal family)"),
    "fig4": ("contour", "adabi_bound", "Uncertainty bound over (T, p) (Werner family)"),
    "fig5": ("contour", "qsk_rate", "Secret-key rate over (T, p) (Werner family)"),
    "fig6": ("contour", "adabi_bound", "Uncertainty bound over (T, p) (X-state family)"),
    "fig7": ("contour", "qsk_rate", "Secret-key rate over (T, p) (X-state family)"),
}


@dataclass(frozen=True)
class FigureSpec:
    csv_path: Path
    kind: str  # "lines" | "contour"
    y_column: str
    title: str
    out_path: Path

    def __post_init__(self) -> None:
        if self.kind not in ("lines", "contour"):
            raise ValueError(f"kind must be 'lines' or 'contour', got {self.kind!r}")
        if self.y_column not in Y_COLUMNS:
            raise ValueError(f"y column must be one of {Y_COLUMNS}, got {self.y_column!r}")


@dataclass(frozen=True)
class Table:
    """Parsed sweep rows: parallel arrays of p, T and the selected column."""

    p: np.ndarray
    t: np.ndarray
    y: np.ndarray

    @property
    def p_values(self) -> np.ndarray:
        return np.unique(self.p)

    @property
    def t_values(self) -> np.ndarray:
        return np.unique(self.t)


def load_table(path: Path, y_column: str) -> Table:
    """Read the CSV and pull out (p, T, y_column); strict about the contract."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [c for c in (*REQUIRED_COLUMNS, y_column) if c not in header]
        if missing:
            raise ValueError(f"{path}: missing columns {missing}")
        rows = list(reader)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    try:
        p = np.array([float(row["p"]) for row in rows])
        t = np.array([float(row["T"]) for row in rows])
        y = np.array([float(row[y_column]) for row in rows])
    except ValueError as exc:
        raise ValueError(f"{path}: non-numeric cell ({exc})") from exc
    return Table(p=p, t=t, y=y)


def split_curves(table: Table) -> dict[float, tuple[np.ndarray, np.ndarray]]:
    """One (p, y) series per temperature, each sorted by p."""
    curves = {}
    for t_value in table.t_values:
        mask = table.t == t_value
        order = np.argsort(table.p[mask], kind="stable")
        curves[float(t_value)] = (table.p[mask][order], table.y[mask][order])
    return curves


def contour_matrix(table: Table) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pivot rows into Z[p_index, t_index]; the (p, T) grid must be complete."""
    ps, ts = table.p_values, table.t_values
    if len(table.p) != len(ps) * len(ts):
        raise ValueError(
            f"ragged grid: {len(table.p)} rows != {len(ps)} x {len(ts)} grid points"
        )
    z = np.full((len(ps), len(ts)), np.nan)
    p_index = {v: i for i, v in enumerate(ps)}
    t_index = {v: j for j, v in enumerate(ts)}
    for p, t, y in zip(table.p, table.t, table.y):
        i, j = p_index[p], t_index[t]
        if not np.isnan(z[i, j]):
            raise ValueError(f"ragged grid: duplicate point (p={p}, T={t})")
        z[i, j] = y
    if np.isnan(z).any():
        raise ValueError("ragged grid: missing (p, T) combinations")
    return ps, ts, z


def build_figure(spec: FigureSpec, table: Table) -> plt.Figure:
    """Assemble the figure without touching the filesystem."""
    fig, ax = plt.subplots(figsize=(6.4, 4.8), dpi=120)
    if spec.kind == "lines":
        for t_value, (p, y) in sorted(split_curves(table).items()):
            ax.plot(p, y, label=f"T = {t_value:g}")
        ax.set_xlabel("p")
        ax.set_ylabel(Y_LABELS[spec.y_column])
        ax.legend(frameon=False)
    else:
        ps, ts, z = contour_matrix(table)
        filled = ax.contourf(ts, ps, z, levels=21, cmap="viridis")
        fig.colorbar(filled, ax=ax, label=Y_LABELS[spec.y_column])
        ax.set_xlabel("T")
        ax.set_ylabel("p")
    ax.set_title(spec.title)
    fig.tight_layout()
    return fig


def render(spec: FigureSpec) -> Path:
    """Load, build and save; nothing is written when loading or building fails."""
    table = load_table(spec.csv_path, spec.y_column)
    fig = build_figure(spec, table)
    try:
        spec.out_path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(spec.out_path, metadata={"Software": "figplots"})
    finally:
        plt.close(fig)
    return spec.out_path


def spec_from_preset(name: str, data_dir: Path, out_dir: Path) -> FigureSpec:
    kind, y_column, title = PRESETS[name]
    return FigureSpec(
        csv_path=data_dir / f"{name}.csv",
        kind=kind,
        y_column=y_column,
        title=title,
        out_path=out_dir / f"{name}.png",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplots",
        description="Render line or contour figure analogs from sweep CSV files.",
    )
    parser.add_argument(
        "preset",
        nargs="?",
        choices=sorted(PRESETS) + ["all"],
        help="render a preset figure (reads <preset>.csv from --data-dir)",
    )
    parser.add_argument("--data-dir", type=Path, default=Path("."))
    parser.add_argument("--out-dir", type=Path, default=Path("."))
    parser.add_argument("--csv", type=Path, help="explicit input CSV (instead of a preset)")
    parser.add_argument("--kind", choices=("lines", "contour"))
    parser.add_argument("--y", choices=Y_COLUMNS, dest="y_column")
    parser.add_argument("--out", type=Path, help="explicit output image path")
    parser.add_argument("--title", default="")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.csv is not None:
            if args.kind is None or args.y_column is None or args.out is None:
                raise ValueError("--csv requires --kind, --y and --out")
            specs = [
                FigureSpec(
                    csv_path=args.csv,
                    kind=args.kind,
                    y_column=args.y_column,
                    title=args.title,
                    out_path=args.out,
                )
            ]
        elif args.preset == "all":
            specs = [spec_from_preset(n, args.data_dir, args.out_dir) for n in sorted(PRESETS)]
        elif args.preset is not None:
            specs = [spec_from_preset(args.preset, args.data_dir, args.out_dir)]
        else:
            raise ValueError("give a preset name or --csv/--kind/--y/--out")
        for spec in specs:
            print(f"wrote {render(spec)}")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(main())
