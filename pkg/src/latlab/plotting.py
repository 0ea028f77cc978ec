"""Hasse diagram rendering for the CLI report path."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import heights


def hasse_positions(L):
    """Layered layout: y = height, x spreads each layer symmetrically."""
    h = heights(L)
    layers = {}
    for i in range(L.size):
        layers.setdefault(h[i], []).append(i)
    pos = {}
    for level, members in layers.items():
        k = len(members)
        for slot, i in enumerate(members):
            pos[i] = (slot - (k - 1) / 2.0, level)
    return pos


def draw_hasse(L, path, figsize=None):
    """Render the Hasse diagram of L to an image file."""
    pos = hasse_positions(L)
    if figsize is None:
        wide = max(len(v) for v in
                   _group_by_level(pos).values())
        figsize = (max(4.0, 0.9 * wide), max(3.0, 0.9 * (max(heights(L)) + 1)))
    fig, ax = plt.subplots(figsize=figsize)
    for lo, hi in L.covers:
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=1.0, zorder=1)
    for i, (x, y) in pos.items():
        ax.scatter([x], [y], s=140, color="white", edgecolor="black", zorder=2)
        ax.annotate(L.labels[i], (x, y), ha="center", va="center",
                    fontsize=7, zorder=3)
    ax.set_title(L.name)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _group_by_level(pos):
    out = {}
    for i, (_, y) in pos.items():
        out.setdefault(y, []).append(i)
    return out
