#!/usr/bin/env python3
"""Regenerate the code-comparison figures from the primary CLI's CSV sweeps.

The CSV is the single source of truth: nothing is recomputed here.  Expected
input is the `weylcodes compare` format, a `p` column followed by one column
per code (d18, d50, five, seven).

Usage:
    figures.py --csv <path> --preset fig1|fig2-left|fig2-right --out <path>

Output format follows the --out extension; .svg is the default choice.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLES = {
    "d18": {"label": r"$\mathcal{F}^{(18)}$", "linestyle": "-", "linewidth": 2.6, "color": "#1f77b4"},
    "five": {"label": r"$\mathcal{F}^{[[5,1,3]]}$", "linestyle": "-", "linewidth": 1.0, "color": "#2ca02c"},
    "seven": {"label": r"$\mathcal{F}^{[[7,1,3]]}$", "linestyle": "--", "linewidth": 1.6, "color": "#d62728"},
    "d50": {"label": r"$\mathcal{F}^{(50)}$", "linestyle": "-", "linewidth": 1.0, "color": "#9467bd"},
}

PRESETS = {
    "fig1": {"title": "Symmetric Weyl channel"},
    "fig2-left": {"title": r"Asymmetric Weyl channel, $\kappa = 4 < 11.34$"},
    "fig2-right": {"title": r"Asymmetric Weyl channel, $\kappa = 20 > 11.34$"},
}


class MissingColumnError(KeyError):
    """A CSV column has no declared curve style (or the p column is absent)."""


@dataclass
class FigureSpec:
    csv_path: Path
    preset: str
    out_path: Path
    styles: dict = field(default_factory=lambda: STYLES)


def load_csv(path: Path) -> tuple[list[float], dict[str, list[float]]]:
    """Read a sweep CSV into (p grid, column -> values)."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if not header or header[0] != "p":
            raise MissingColumnError(f"first column must be 'p', got {header[:1]}")
        columns: dict[str, list[float]] = {name: [] for name in header[1:]}
        grid: list[float] = []
        for row in reader:
            grid.append(float(row[0]))
            for name, value in zip(header[1:], row[1:]):
                columns[name].append(float(value))
    return grid, columns


def check_ordering(
    columns: dict[str, list[float]],
    grid: list[float],
    order: list[str],
    p_max: float | None = None,
) -> bool:
    """True when the named curves are strictly ordered top-to-bottom for 0 < p (<= p_max)."""
    for i, p in enumerate(grid):
        if p <= 0.0 or (p_max is not None and p > p_max):
            continue
        values = [columns[name][i] for name in order]
        if any(a <= b for a, b in zip(values, values[1:])):
            return False
    return True


def render_comparison(spec: FigureSpec) -> Path:
    grid, columns = load_csv(spec.csv_path)
    unknown = [name for name in columns if name not in spec.styles]
    if unknown:
        raise MissingColumnError(f"no declared style for columns: {unknown}")

    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    for name, values in columns.items():
        ax.plot(grid, values, **spec.styles[name])
    floor = min(min(values) for values in columns.values())
    ax.set_xlim(grid[0], grid[-1] if grid[-1] > grid[0] else grid[0] + 1e-6)
    ax.set_ylim(floor, 1.0 + 0.02 * max(1e-12, 1.0 - floor))
    ax.set_xlabel(r"error probability $p$")
    ax.set_ylabel(r"entanglement fidelity $\mathcal{F}$")
    ax.set_title(PRESETS[spec.preset]["title"])
    ax.legend(loc="lower left")
    ax.grid(alpha=0.25)
    fig.tight_layout()
    fig.savefig(spec.out_path)
    plt.close(fig)
    return spec.out_path


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, type=Path)
    parser.add_argument("--preset", required=True, choices=sorted(PRESETS))
    parser.add_argument("--out", required=True, type=Path)
    args = parser.parse_args(argv)
    try:
        out = render_comparison(FigureSpec(args.csv, args.preset, args.out))
    except MissingColumnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
