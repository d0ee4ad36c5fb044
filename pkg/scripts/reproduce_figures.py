#!/usr/bin/env python3
"""Regenerate every figure data table, and render images when figplots is installed.

Usage: python scripts/reproduce_figures.py [output_dir] [--jobs N]
"""
from __future__ import annotations

import argparse
import shutil
import subprocess
import sys
from pathlib import Path

from horizon_eur.sweep import write_figure_tables


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output_dir", nargs="?", default="data/figures", type=Path)
    parser.add_argument("--jobs", type=int, default=2)
    args = parser.parse_args()

    paths = write_figure_tables(args.output_dir, jobs=args.jobs)
    for path in paths:
        print(f"wrote {path}")

    if shutil.which("figplots") is None:
        print("figplots not installed; skipping image rendering")
        return 0
    for path in paths:
        name = path.stem
        out = path.with_suffix(".png")
        subprocess.run(
            ["figplots", name, "--data-dir", str(args.output_dir), "--out-dir", str(args.output_dir)],
            check=True,
        )
        print(f"rendered {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
