"""Render sweep output as figures.

Consumes the CSV written by `detmult sweep` and draws length-versus-q
curves, one per (m, n, s, route) group, saving the figure next to the
data. Kept out of the main CLI on purpose: the CLI emits exact data,
this script draws approximate pictures of it.
"""

from __future__ import annotations

import argparse
import csv
import os
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .cli import OUTPUT_DIR_ENV, SWEEP_FIELDS, _resolve_output_path

__all__ = ["load_sweep_rows", "render_length_plot", "main"]


def load_sweep_rows(path) -> list:
    """Read a sweep CSV back into typed rows."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = [f for f in SWEEP_FIELDS if f not in (reader.fieldnames or [])]
        if missing:
            raise ValueError(f"{path} lacks sweep columns: {', '.join(missing)}")
        rows = []
        for raw in reader:
            rows.append(
                {
                    "m": int(raw["m"]),
                    "n": int(raw["n"]),
                    "s": raw["s"],
                    "q": int(raw["q"]),
                    "r": int(raw["r"]),
                    "route": raw["route"],
                    "length": int(raw["length"]),
                }
            )
    return rows


def render_length_plot(rows, out_path, log_scale=False):
    """Plot length against q, one curve per (m, n, s, route)."""
    if not rows:
        raise ValueError("no rows to plot")
    groups = {}
    for row in rows:
        key = (row["m"], row["n"], row["s"], row["route"])
        groups.setdefault(key, []).append((row["q"], row["length"]))
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    for (m, n, s, route), pts in sorted(groups.items()):
        pts.sort()
        xs = [p[0] for p in pts]
        # lengths can exceed float range in principle; fine for a picture
        ys = [float(p[1]) for p in pts]
        label = f"{m}x{n}, s={Fraction(s)}, {route}"
        ax.plot(xs, ys, marker="o", linewidth=1.2, markersize=4, label=label)
    ax.set_xlabel("q")
    ax.set_ylabel("length")
    if log_scale:
        ax.set_xscale("log", base=2)
        ax.set_yscale("log")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="detmult-plot",
        description="Draw length-versus-q figures from detmult sweep CSV output.",
    )
    parser.add_argument("csv_path", help="CSV produced by `detmult sweep --format csv`")
    parser.add_argument(
        "--out",
        help=f"output image (default: CSV name with .png); relative paths honor ${OUTPUT_DIR_ENV}",
    )
    parser.add_argument("--log", action="store_true", help="log-log axes")
    args = parser.parse_args(argv)
    out = args.out or os.path.splitext(os.path.basename(args.csv_path))[0] + ".png"
    out = _resolve_output_path(out)
    rows = load_sweep_rows(args.csv_path)
    render_length_plot(rows, out, log_scale=args.log)
    print(out)
    return 0
