"""Matplotlib renderings of the state graph, solution paths and sweep summaries.

Everything writes straight to a file; the Agg backend is forced so the CLI
works without a display.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .core import Distribution, is_valid_state  # noqa: E402
from .model import ModelGraph  # noqa: E402


def _arrow(ax, u, v, color, lw, alpha, z):
    # bend so that u->v and v->u stay distinguishable
    ax.add_patch(
        FancyArrowPatch(
            u, v, arrowstyle="-|>", mutation_scale=10, color=color, lw=lw, alpha=alpha,
            connectionstyle="arc3,rad=0.15", shrinkA=9, shrinkB=9, zorder=z,
        )
    )


def plot_graph(
    graph: ModelGraph,
    path: Sequence[Distribution] = (),
    filename: str = "graph.png",
    hide_isolated: bool = False,
    title: str | None = None,
) -> str:
    """Draw the vertex grid with every edge; highlight ``path`` if given.

    B's level runs along x and C's along y, one column per value of ``i``.
    """
    q = graph.quadruple
    hidden = graph.isolated() if hide_isolated else set()
    width = max(4.0, 1.1 * (q.b + 1))
    height = max(3.0, 1.1 * (q.c + 1))
    fig, ax = plt.subplots(figsize=(width, height))

    for u, v in graph.edges():
        _arrow(ax, u, v, "0.6", 0.8, 0.6, 1)
    on_path = list(zip(path, path[1:]))
    colors = plt.cm.viridis([k / max(1, len(on_path) - 1) for k in range(len(on_path))])
    for (u, v), col in zip(on_path, colors):
        _arrow(ax, u, v, col, 2.2, 1.0, 3)

    for v in graph.vertices:
        if v in hidden:
            continue
        valid = is_valid_state(q, v)
        ax.scatter(*v, s=380, zorder=2, facecolor="white" if valid else "0.85",
                   edgecolor="black" if valid else "0.6")
        ax.annotate(f"{v.i},{v.j}", v, ha="center", va="center", fontsize=7, zorder=4)

    ax.set_xlim(-0.7, q.b + 0.7)
    ax.set_ylim(-0.7, q.c + 0.7)
    ax.set_xticks(range(q.b + 1))
    ax.set_yticks(range(q.c + 1))
    ax.set_xlabel("gallons in B")
    ax.set_ylabel("gallons in C")
    ax.set_aspect("equal")
    ax.set_title(title or f"Q = {q}")
    fig.tight_layout()
    fig.savefig(filename, dpi=150)
    plt.close(fig)
    return filename


def plot_sweep(quads, reports, filename: str = "sweep.png") -> str:
    """Bar chart of quadruples checked per capacity ``a`` with discrepancies overlaid."""
    checked = Counter(q.a for q in quads)
    bad = Counter(r.quadruple.a for r in reports)
    xs = sorted(checked)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(xs, [checked[x] for x in xs], color="tab:blue", label="checked")
    ax.bar(xs, [bad[x] for x in xs], color="tab:red", label="discrepancies")
    ax.set_xlabel("capacity of jug A")
    ax.set_ylabel("quadruples")
    ax.legend()
    fig.tight_layout()
    fig.savefig(filename, dpi=150)
    plt.close(fig)
    return filename
