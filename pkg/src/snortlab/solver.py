"""Exhaustive win/loss search with a mover-relative transposition table.

Normal play: whoever cannot move loses.  ``wins_moving`` answers whether
the side to move can force the last move; the four outcome classes fall
out of asking that for both sides.  The memo key is colour-normalised
(own tints vs enemy tints), so mirrored states for the two movers share
one entry.  Search is exact; ordering flags change speed only.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from .graphs import Family, Graph, _bits, build_family
from .position import Outcome, Player, Position, initial_position

DEFAULT_NODE_CAP = 500_000_000
DEFAULT_MEMO_CAP = 20_000_000

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


class ResourceBudgetError(RuntimeError):
    """Search exceeded its node or memo budget; no partial answer is returned."""


@dataclass
class SolveStats:
    nodes_expanded: int = 0
    memo_hits: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "memo_hits": self.memo_hits,
            "elapsed_s": round(self.elapsed, 6),
        }


class Solver:
    """Memoized solver bound to one graph.

    order: "index" tries moves by ascending vertex index (the normative
    baseline); "greedy" tries moves reserving the most new vertices first.
    Both give identical answers.
    """

    def __init__(
        self,
        graph: Graph,
        *,
        order: str = "index",
        node_cap: int = DEFAULT_NODE_CAP,
        memo_cap: int = DEFAULT_MEMO_CAP,
    ):
        if order not in ("index", "greedy"):
            raise ValueError(f"unknown move order {order!r}")
        self.graph = graph
        self.order = order
        self.node_cap = node_cap
        self.memo_cap = memo_cap
        self.nodes_expanded = 0
        self.memo_hits = 0
        self.elapsed = 0.0
        self._memo: dict[int, bool] = {}
        self._nbr = graph.nbr_masks

    @property
    def stats(self) -> SolveStats:
        return SolveStats(self.nodes_expanded, self.memo_hits, self.elapsed)

    def _check(self, position: Position) -> None:
        if position.graph is not self.graph:
            raise ValueError("position belongs to a different graph")

    def wins_moving(self, position: Position, mover: Player) -> bool:
        """True iff the mover can force the last move from this position."""
        self._check(position)
        own = position.tint_mask(mover)
        enemy = position.tint_mask(mover.opponent())
        t0 = time.perf_counter()
        try:
            return self._wins(position.alive, own, enemy)
        finally:
            self.elapsed += time.perf_counter() - t0

    def outcome(self, position: Position) -> Outcome:
        wl = self.wins_moving(position, Player.LEFT)
        wr = self.wins_moving(position, Player.RIGHT)
        if wl and wr:
            return Outcome.N
        if not wl and not wr:
            return Outcome.P
        return Outcome.L if wl else Outcome.R

    def best_moves(self, position: Position, mover: Player) -> list[int]:
        """Legal moves after which the opponent cannot win, ascending by index."""
        self._check(position)
        own = position.tint_mask(mover)
        enemy = position.tint_mask(mover.opponent())
        t0 = time.perf_counter()
        out = []
        try:
            for v in _bits(position.alive & ~enemy):
                a1, f1, e1 = _child(self._nbr, position.alive, own, enemy, v)
                if not self._wins(a1, e1, f1):
                    out.append(v)
        finally:
            self.elapsed += time.perf_counter() - t0
        return out

    def _wins(self, alive: int, own: int, enemy: int) -> bool:
        moves = alive & ~enemy
        if not moves:
            return False
        key = (alive << 128) | (own << 64) | enemy
        cached = self._memo.get(key)
        if cached is not None:
            self.memo_hits += 1
            return cached
        self.nodes_expanded += 1
        if self.nodes_expanded > self.node_cap:
            raise ResourceBudgetError(f"node budget {self.node_cap} exceeded")
        if len(self._memo) >= self.memo_cap:
            raise ResourceBudgetError(f"memo budget {self.memo_cap} exceeded")
        nbr = self._nbr
        res = False
        if self.order == "index":
            m = moves
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length() - 1
                a1 = alive ^ low
                add = nbr[v] & a1
                f1 = (own | add) & a1
                e1 = enemy & a1
                dead = f1 & e1
                if dead:
                    a1 &= ~dead
                    f1 &= ~dead
                    e1 &= ~dead
                if not self._wins(a1, e1, f1):
                    res = True
                    break
        else:
            ranked = sorted(
                _bits(moves),
                key=lambda v: -(nbr[v] & alive & ~own & ~(1 << v)).bit_count(),
            )
            for v in ranked:
                a1, f1, e1 = _child(nbr, alive, own, enemy, v)
                if not self._wins(a1, e1, f1):
                    res = True
                    break
        self._memo[key] = res
        return res


def _child(nbr, alive: int, own: int, enemy: int, v: int) -> tuple[int, int, int]:
    bit = 1 << v
    a1 = alive ^ bit
    add = nbr[v] & a1
    f1 = (own | add) & a1
    e1 = enemy & a1
    dead = f1 & e1
    if dead:
        a1 &= ~dead
        f1 &= ~dead
        e1 &= ~dead
    return a1, f1, e1


def wins_moving(position: Position, mover: Player, **cfg) -> bool:
    return Solver(position.graph, **cfg).wins_moving(position, mover)


def outcome(position: Position, **cfg) -> Outcome:
    return Solver(position.graph, **cfg).outcome(position)


def best_moves(position: Position, mover: Player, **cfg) -> list[int]:
    return Solver(position.graph, **cfg).best_moves(position, mover)


def solve_family(family: Family, n: int, **cfg) -> tuple[Outcome, SolveStats]:
    """Outcome class of the empty board of a family instance."""
    graph = build_family(family, n)
    solver = Solver(graph, **cfg)
    result = solver.outcome(initial_position(graph))
    return result, solver.stats


def brute_force_wins(
    position: Position, mover: Player, *, node_budget: int | None = None
) -> bool:
    """Plain memo-free recursion over vertex sets; the oracle the fast path is checked against."""
    graph = position.graph
    adj = {v: graph.neighbors(v) for v in range(graph.num_vertices)}
    counter = [0]

    def rec(alive: set[int], blue: set[int], red: set[int], player: Player) -> bool:
        counter[0] += 1
        if node_budget is not None and counter[0] > node_budget:
            raise ResourceBudgetError(f"brute-force budget {node_budget} exceeded")
        blocked = red if player is Player.LEFT else blue
        options = sorted(alive - blocked)
        if not options:
            return False
        nxt = player.opponent()
        for v in options:
            a = alive - {v}
            reserved = adj[v] & a
            if player is Player.LEFT:
                b, r = (blue | reserved) & a, red & a
            else:
                b, r = blue & a, (red | reserved) & a
            dead = b & r
            if dead:
                a, b, r = a - dead, b - dead, r - dead
            if not rec(a, b, r, nxt):
                return True
        return False

    return rec(
        position.alive_set(),
        set(_bits(position.blue)),
        set(_bits(position.red)),
        mover,
    )


def brute_force_outcome(position: Position, *, node_budget: int | None = None) -> Outcome:
    wl = brute_force_wins(position, Player.LEFT, node_budget=node_budget)
    wr = brute_force_wins(position, Player.RIGHT, node_budget=node_budget)
    if wl and wr:
        return Outcome.N
    if not wl and not wr:
        return Outcome.P
    return Outcome.L if wl else Outcome.R
