"""Board figures: equilateral-triangle layout rendered with matplotlib.

Rows are staggered by half a cell so every unit triangle of the board
draws equilateral.  Used by the CLI report path to drop a PNG per board
next to the delimited outcome table.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle

from .graphs import Family, Graph, build_family
from .position import Player, Position, initial_position
from .strategy import SmallCaseError, has_strategy, prescribed_move, split_spec

_ROW_DY = math.sqrt(3) / 2

_FILL_FREE = "white"
_FILL_DEAD = "0.88"
_FILL_BLUE_TINT = "#b8cff0"
_FILL_RED_TINT = "#f0bcb8"
_FILL_MOVE = "#2b5fc4"
_EDGE_IGNORED = "#e08a00"


def layout(graph: Graph) -> dict[int, tuple[float, float]]:
    """Vertex -> (x, y); row j sits half a cell left of row j-1."""
    coords = {}
    for v, lab in enumerate(graph.vertices):
        col, row = lab.coords(graph.n)
        coords[v] = (col - (row - 1) * 0.5, -(row - 1) * _ROW_DY)
    return coords


def render_board(
    graph: Graph,
    position: Position | None = None,
    *,
    move: int | None = None,
    ignored_vertices: set[int] | None = None,
    ignored_edges: set[frozenset[int]] | None = None,
    title: str | None = None,
    ax: plt.Axes | None = None,
):
    """Draw a board state; returns the matplotlib figure."""
    ignored_vertices = ignored_vertices or set()
    ignored_edges = ignored_edges or set()
    pos = layout(graph)
    if ax is None:
        width = max(x for x, _ in pos.values()) - min(x for x, _ in pos.values()) + 2
        fig, ax = plt.subplots(figsize=(max(3.0, 0.75 * width), 3.0))
    else:
        fig = ax.figure

    for u, v in graph.edges():
        (x1, y1), (x2, y2) = pos[u], pos[v]
        if frozenset((u, v)) in ignored_edges:
            ax.plot([x1, x2], [y1, y2], color=_EDGE_IGNORED, lw=2.4, ls="--", zorder=1)
        else:
            dead = position is not None and not (
                position.alive & (1 << u) and position.alive & (1 << v)
            )
            ax.plot(
                [x1, x2], [y1, y2],
                color="0.8" if dead else "0.35",
                lw=0.8 if dead else 1.2,
                zorder=1,
            )

    for v, lab in enumerate(graph.vertices):
        bit = 1 << v
        fill = _FILL_FREE
        if v == move:
            fill = _FILL_MOVE
        elif position is not None:
            if not position.alive & bit:
                fill = _FILL_DEAD
            elif position.blue & bit:
                fill = _FILL_BLUE_TINT
            elif position.red & bit:
                fill = _FILL_RED_TINT
        ring = _EDGE_IGNORED if v in ignored_vertices else "black"
        width = 1.8 if v in ignored_vertices else 0.9
        x, y = pos[v]
        ax.add_patch(Circle((x, y), 0.22, facecolor=fill, edgecolor=ring, lw=width, zorder=2))
        ax.text(
            x, y, str(lab),
            ha="center", va="center", fontsize=5.5, zorder=3,
            color="white" if v == move else "black",
        )

    ax.set_aspect("equal")
    ax.autoscale()
    ax.margins(0.12)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return fig


def render_strategy_figure(family: Family, n: int):
    """Board after the prescribed opening, with the split dashes/rings marked."""
    graph = build_family(family, n)
    start = initial_position(graph)
    title = f"{family.value} n={n}"
    if not has_strategy(family, n):
        return render_board(graph, start, title=title)
    mv = graph.index_of(prescribed_move(family, n))
    after = start.apply_move(Player.LEFT, mv)
    try:
        spec = split_spec(family, n)
        ign_v = {graph.index_of(v) for v in spec.ignored_vertices}
        ign_e = {
            frozenset((graph.index_of(a), graph.index_of(b)))
            for a, b in spec.ignored_edges
        }
    except SmallCaseError:
        ign_v, ign_e = set(), set()
    return render_board(
        graph, after,
        move=mv, ignored_vertices=ign_v, ignored_edges=ign_e,
        title=f"{title}: open {graph.label_of(mv)}",
    )


def save_figure(fig, path) -> None:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
