"""Report rendering: delimited summaries plus matplotlib figures.

The batch verification path writes a CSV table and, next to it, static
figures (rank-table dot plots and a delta-spectrum map).  Figures are
rendered headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

__all__ = [
    "write_summary_csv",
    "plot_rank_table",
    "plot_delta_spectrum",
    "plot_thinness_overview",
]


def write_summary_csv(rows, columns, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=columns)
        w.writeheader()
        for row in rows:
            w.writerow({k: row.get(k, "") for k in columns})
    return path


def plot_rank_table(ranks, path, title=None):
    """Dot plot of a bigraded rank table: i horizontal, j = j2/2 vertical."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(4.2, 4.0))
    if ranks.entries:
        xs = [i for (i, _j2) in ranks.entries]
        ys = [j2 / 2 for (_i, j2) in ranks.entries]
        sizes = [60 * r for r in ranks.entries.values()]
        ax.scatter(xs, ys, s=sizes, color="tab:blue", zorder=3)
        for (i, j2), r in ranks.entries.items():
            if r > 1:
                ax.annotate(str(r), (i, j2 / 2), textcoords="offset points",
                            xytext=(6, 4), fontsize=8)
    ax.set_xlabel("homological grading i")
    ax.set_ylabel("Jones grading j")
    ax.grid(True, linestyle=":", linewidth=0.5)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_delta_spectrum(per_name_deltas, path, title="delta spectrum"):
    """Heat-style map: one row per knot, columns are 2*delta values."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    names = list(per_name_deltas)
    all_deltas = sorted({d for spec in per_name_deltas.values() for d in spec})
    fig_h = max(2.0, 0.28 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(6.4, fig_h))
    for row, nm in enumerate(names):
        spec = per_name_deltas[nm]
        total = sum(spec.values()) or 1
        for d2, r in spec.items():
            ax.scatter([d2], [row], s=30 + 240 * r / total,
                       color="tab:red" if len(spec) > 1 else "tab:blue",
                       alpha=0.8, zorder=3)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xticks(all_deltas)
    ax.set_xlabel("2*delta")
    ax.set_title(title)
    ax.grid(True, axis="x", linestyle=":", linewidth=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_thinness_overview(rows, path):
    """Determinant against total homology rank; thin knots sit on y = x."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(5.0, 4.2))
    thin_x, thin_y, fat_x, fat_y, labels = [], [], [], [], []
    for row in rows:
        det = row.get("det")
        tot = row.get("kh_total")
        if det is None or tot in (None, ""):
            continue
        if row.get("kh_thin"):
            thin_x.append(det)
            thin_y.append(tot)
        else:
            fat_x.append(det)
            fat_y.append(tot)
            labels.append((det, tot, row["name"]))
    lim = max(thin_x + fat_x + [1]) + 3
    ax.plot([0, lim], [0, lim], color="gray", linewidth=0.8, linestyle="--",
            label="rank = det")
    ax.scatter(thin_x, thin_y, color="tab:blue", s=22, label="thin")
    if fat_x:
        ax.scatter(fat_x, fat_y, color="tab:red", s=30, label="not thin")
        for det, tot, nm in labels:
            ax.annotate(nm, (det, tot), textcoords="offset points",
                        xytext=(5, 3), fontsize=8)
    ax.set_xlabel("determinant")
    ax.set_ylabel("total reduced rank")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
