"""Immutable game state: alive vertices plus per-colour reservation tints.

Claiming a vertex deletes it and tints every alive neighbour in the
claimer's colour; a vertex holding both tints is unplayable for either
side and is deleted on the spot.  A vertex tinted in one colour stays
playable for that colour's owner.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable

from .graphs import Graph, _bits


class Player(Enum):
    LEFT = "Left"   # colours blue
    RIGHT = "Right"  # colours red

    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class Outcome(Enum):
    N = "N"  # first player wins
    P = "P"  # second player wins
    L = "L"  # Left wins regardless of who starts
    R = "R"  # Right wins regardless of who starts

    def swapped(self) -> "Outcome":
        if self is Outcome.L:
            return Outcome.R
        if self is Outcome.R:
            return Outcome.L
        return self


class IllegalMoveError(ValueError):
    """Move on a dead or opponent-reserved vertex.  ``reason`` says which."""

    def __init__(self, v: int, reason: str):
        super().__init__(f"illegal move at vertex {v}: {reason}")
        self.vertex = v
        self.reason = reason  # "dead" | "opponent_tint"


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Position:
    """Value-semantics game state over a fixed graph.

    Invariants: blue and red are disjoint subsets of alive.
    """

    graph: Graph
    alive: int
    blue: int
    red: int

    def alive_set(self) -> set[int]:
        return set(_bits(self.alive))

    def tint_mask(self, player: Player) -> int:
        return self.blue if player is Player.LEFT else self.red

    def legal_mask(self, player: Player) -> int:
        return self.alive & ~self.tint_mask(player.opponent())

    def legal_moves(self, player: Player) -> list[int]:
        return list(_bits(self.legal_mask(player)))

    def is_legal(self, player: Player, v: int) -> bool:
        return bool(self.legal_mask(player) & (1 << v))

    def apply_move(self, player: Player, v: int) -> "Position":
        """Claim v for player; returns the reduced successor position."""
        bit = 1 << v
        if not (0 <= v < self.graph.num_vertices) or not self.alive & bit:
            raise IllegalMoveError(v, "dead")
        if self.tint_mask(player.opponent()) & bit:
            raise IllegalMoveError(v, "opponent_tint")
        alive = self.alive ^ bit
        added = self.graph.nbr_masks[v] & alive
        blue, red = self.blue & alive, self.red & alive
        if player is Player.LEFT:
            blue |= added
        else:
            red |= added
        dead = blue & red
        if dead:
            alive &= ~dead
            blue &= ~dead
            red &= ~dead
        return replace(self, alive=alive, blue=blue, red=red)

    def apply_tint(self, player: Player, vertices: Iterable[int]) -> "Position":
        """Add reservation tints; double-tinted vertices are deleted."""
        m = mask_of(vertices)
        if m & ~self.alive:
            raise ValueError("tint target is not an alive vertex")
        blue, red = self.blue, self.red
        if player is Player.LEFT:
            blue |= m
        else:
            red |= m
        dead = blue & red
        return replace(
            self,
            alive=self.alive & ~dead,
            blue=blue & ~dead,
            red=red & ~dead,
        )

    def swapped(self) -> "Position":
        """The same state with the colours exchanged."""
        return replace(self, blue=self.red, red=self.blue)

    def components(self) -> list[set[int]]:
        """Connected components of the alive-induced subgraph, ordered by least member."""
        masks = self.graph.nbr_masks
        remaining = self.alive
        out: list[set[int]] = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                grown = 0
                for v in _bits(frontier):
                    grown |= masks[v]
                frontier = grown & self.alive & ~comp
                comp |= frontier
            remaining &= ~comp
            out.append(set(_bits(comp)))
        return out

    def canonical_key(self, mover: Player) -> int:
        """Mover-relative state key: colour-swapped states with swapped movers collide."""
        own = self.tint_mask(mover)
        enemy = self.tint_mask(mover.opponent())
        return (self.alive << 128) | (own << 64) | enemy

    def to_json(self) -> dict:
        return {
            "alive": list(_bits(self.alive)),
            "blue": list(_bits(self.blue)),
            "red": list(_bits(self.red)),
        }


def initial_position(graph: Graph) -> Position:
    """All vertices alive, no tints."""
    return Position(graph, graph.full_mask, 0, 0)
