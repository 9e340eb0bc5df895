"""Matplotlib rendering of the region picture, for writing figure files."""

from __future__ import annotations

from pathlib import Path

from .classifier import ALMOST_NICE, NICE, classify
from .lattice import enumerate_range
from .plot import PlotSpec, _curve_samples
from .oracle import BoundaryCurves


def region_figure(g: int, k: int, ax=None):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    spec = PlotSpec.for_params(g, k)
    inventory = classify(g, k)
    if ax is None:
        fig, ax = plt.subplots(figsize=(6, 4.5))
    else:
        fig = ax.figure

    pts = enumerate_range(k)
    ax.scatter([p.a for p in pts], [p.e for p in pts], s=18, facecolors="white",
               edgecolors="0.4", zorder=3, label="range")

    groups = {"component": [], NICE: [], ALMOST_NICE: []}
    for rec in inventory.components:
        if rec.pair is None:
            continue
        if NICE in rec.labels:
            groups[NICE].append(rec.pair)
        if ALMOST_NICE in rec.labels:
            groups[ALMOST_NICE].append(rec.pair)
        if not rec.labels & {NICE, ALMOST_NICE}:
            groups["component"].append(rec.pair)
    style = {
        "component": dict(c="0.2", marker="o", s=30),
        NICE: dict(c="tab:blue", marker="s", s=42),
        ALMOST_NICE: dict(c="tab:red", marker="D", s=30),
    }
    for name, members in groups.items():
        if members:
            ax.scatter([p.a for p in members], [p.e for p in members], zorder=4,
                       label=name.replace("_", " "), **style[name])

    a_pts, b_pts = _curve_samples(spec, BoundaryCurves(g, k))
    if len(a_pts) >= 2:
        ax.plot([float(a) for a, _ in a_pts], [float(e) for _, e in a_pts], color="tab:green",
                lw=1.2, label="curve A")
    if len(b_pts) >= 2:
        ax.plot([float(a) for a, _ in b_pts], [float(e) for _, e in b_pts], color="tab:purple",
                lw=1.2, ls="--", label="curve B")

    ax.set_xlim(spec.a_min - 0.5, spec.a_max + 0.5)
    ax.set_ylim(spec.e_min - 0.5, spec.e_max + 0.5)
    ax.set_xlabel("a")
    ax.set_ylabel("e")
    ax.set_title(f"g={g}, k={k}: {len(inventory.components)} components")
    ax.legend(loc="upper right", fontsize=8, frameon=False)
    return fig


def save_region_figure(g: int, k: int, path) -> Path:
    import matplotlib
    import matplotlib.pyplot as plt

    path = Path(path)
    with matplotlib.rc_context({"svg.hashsalt": "ratcurves"}):
        fig = region_figure(g, k)
        fig.savefig(path, dpi=120, bbox_inches="tight", metadata=_metadata(path))
    plt.close(fig)
    return path


def _metadata(path):
    # drop timestamps so repeated runs write identical files
    suffix = path.suffix.lower()
    if suffix == ".svg":
        return {"Date": None}
    if suffix == ".pdf":
        return {"CreationDate": None}
    return None
