"""Shared corpus builders for the test suite.

Random boards and positions are generated from seeded RNGs so every run
sees the same corpus.  Brute-force-checked samples are filtered through a
node budget: sparse boards whose naive game tree explodes are resampled,
never silently truncated.
"""

from __future__ import annotations

import random

from snortlab.graphs import Graph, _from_edges
from snortlab.position import Player, Position, initial_position
from snortlab.solver import ResourceBudgetError, brute_force_wins


def random_graph(rng: random.Random, min_v: int = 2, max_v: int = 12) -> Graph:
    nv = rng.randint(min_v, max_v)
    density = rng.uniform(0.25, 0.75)
    edges = [
        (u, v)
        for u in range(nv)
        for v in range(u + 1, nv)
        if rng.random() < density
    ]
    return _from_edges(nv, edges)


def random_position(
    rng: random.Random,
    graph: Graph,
    max_plies: int = 4,
    tint_prob: float = 0.0,
) -> Position:
    pos = initial_position(graph)
    player = rng.choice([Player.LEFT, Player.RIGHT])
    for _ in range(rng.randint(0, max_plies)):
        moves = pos.legal_moves(player)
        if not moves:
            break
        pos = pos.apply_move(player, rng.choice(moves))
        player = player.opponent()
    if tint_prob > 0:
        for colour in (Player.LEFT, Player.RIGHT):
            targets = [v for v in pos.alive_set() if rng.random() < tint_prob]
            pos = pos.apply_tint(colour, targets)
    return pos


def tractable_brute_force(pos: Position, mover: Player, budget: int = 3_000_000):
    """Brute-force answer, or None when the naive tree blows the budget."""
    try:
        return brute_force_wins(pos, mover, node_budget=budget)
    except ResourceBudgetError:
        return None
