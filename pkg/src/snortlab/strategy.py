"""First-move split strategies and their mechanical verification.

Each supported family carries a prescribed opening move for the first
player and a split: vertices and edges the strategist voluntarily ignores
afterwards.  Discarding them must leave two halves that are isomorphic
once the strategist's own tints are disregarded; the strategist then
answers every opponent move with its image under that isomorphism and is
guaranteed the last move.  ``verify_copycat`` replays this against every
opponent line on the real board (ignored edges stay in force for rules
purposes), so a transcription mistake in the tables cannot hide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graphs import (
    Family,
    Graph,
    GraphSizeError,
    VertexLabel,
    _bits,
    build_family,
    disjoint_union,
    label_at,
)
from .position import Player, Position, initial_position, mask_of
from .solver import DEFAULT_NODE_CAP, ResourceBudgetError, Solver, wins_moving

Coord = tuple[int, int]


class NoStrategyError(ValueError):
    """The family/size has no verified split strategy."""


class SmallCaseError(LookupError):
    """n is below the family's generic-split threshold; use the small-n opening."""


class StrategyBreachError(RuntimeError):
    """Opponent move fell outside both halves of the pairing."""


class SplitTableError(RuntimeError):
    """The stored split does not produce pairable isomorphic halves."""


@dataclass(frozen=True)
class SplitSpec:
    """One family instance's opening move and the items ignored afterwards."""

    family: Family
    n: int
    parity: str  # "odd" | "even"
    prescribed_move: VertexLabel
    ignored_vertices: tuple[VertexLabel, ...]
    ignored_edges: tuple[tuple[VertexLabel, VertexLabel], ...]
    small_n_overrides: dict[int, VertexLabel] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "parity": self.parity,
            "prescribed_move": str(self.prescribed_move),
            "ignored_vertices": [str(v) for v in self.ignored_vertices],
            "ignored_edges": [[str(a), str(b)] for a, b in self.ignored_edges],
        }


@dataclass(frozen=True)
class MirrorMap:
    """Involution pairing the two halves; a graph isomorphism between them."""

    pairing: dict[int, int]
    halves: tuple[frozenset[int], frozenset[int]]

    def respond(self, v: int) -> int:
        try:
            return self.pairing[v]
        except KeyError:
            raise StrategyBreachError(f"vertex {v} is outside both halves") from None


@dataclass
class VerificationReport:
    family: Family
    n: int
    lines_explored: int
    max_depth: int
    verdict: str  # "win" | "fail"
    failure_trace: list[str] | None = None
    method: str = "copycat"  # "copycat" | "solver-check"

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "lines_explored": self.lines_explored,
            "max_depth": self.max_depth,
            "verdict": self.verdict,
            "failure_trace": self.failure_trace,
            "method": self.method,
        }


@dataclass(frozen=True)
class _Rule:
    threshold: int
    smalls: dict[int, Coord]
    parities: tuple[str, ...] = ("odd", "even")


# Generic splits apply at n >= threshold; smaller boards use the listed
# opening, checked directly against the solver.
_RULES: dict[Family, _Rule] = {
    Family.T2: _Rule(3, {1: (1, 1), 2: (2, 2)}),
    Family.ONESLANT2: _Rule(3, {1: (1, 1), 2: (2, 2)}),
    Family.T3: _Rule(2, {1: (1, 2)}),
    Family.ONESLANT3: _Rule(2, {1: (1, 2)}),
    Family.LEFTADDONEBOTH3: _Rule(3, {1: (1, 2), 2: (2, 2)}),
    Family.BOTHADDONE3: _Rule(2, {1: (1, 2)}),
    Family.RIGHTADDONLY3: _Rule(3, {1: (1, 2), 2: (2, 2)}),
    Family.RIGHTMINUSONLY3: _Rule(2, {}, parities=("even",)),
    Family.BOTHMINUSONE3: _Rule(2, {1: (1, 2)}),
}


def _generic_split(family: Family, n: int) -> tuple[Coord, list[Coord], list[tuple[Coord, Coord]]]:
    """(move, ignored vertex coords, ignored edge coords) for n at/above threshold."""
    c = (n + 1) // 2  # centre column, rounded up
    h = n // 2
    odd = n % 2 == 1
    if family is Family.T2:
        if odd:
            return (c, 1), [(c, 1), (c, 2)], []
        return (h + 1, 2), [(h, 1), (h, 2), (h + 1, 1), (h + 1, 2)], []
    if family is Family.ONESLANT2:
        if odd:
            return (c, 1), [(c, 1)], [((c, 2), (c + 1, 2))]
        return (h + 1, 2), [(h + 1, 2)], [((h, 1), (h + 1, 1))]
    if family is Family.T3:
        if odd:
            return (c, 2), [(c, 1), (c, 2), (c, 3)], []
        return (h + 1, 2), [(h, 1), (h, 2), (h + 1, 2), (h + 1, 3)], []
    if family is Family.ONESLANT3:
        if odd:
            # centre column plus the off-centre pair next to the slanted end
            return (c, 2), [(c, 1), (c, 2), (c + 1, 2), (c + 1, 3)], []
        return (
            (h + 1, 2),
            [(h + 1, 2)],
            [((h, 1), (h + 1, 1)), ((h + 1, 3), (h + 2, 3))],
        )
    if family is Family.LEFTADDONEBOTH3:
        if odd:
            return (
                (c, 2),
                [(c - 1, 1), (c, 1), (c, 2), (c + 1, 2), (c, 3), (c + 1, 3)],
                [],
            )
        return (h + 1, 2), [(h, 1), (h + 1, 2), (h + 1, 3)], []
    if family in (Family.BOTHADDONE3, Family.BOTHMINUSONE3):
        if odd:
            return (c, 2), [(c, 2)], [((c - 1, 1), (c, 1)), ((c, 3), (c + 1, 3))]
        return (h + 1, 2), [(h, 1), (h, 2), (h + 1, 2), (h + 1, 3)], []
    if family is Family.RIGHTADDONLY3:
        if odd:
            return (c, 2), [(c, 1), (c, 2)], [((c, 3), (c + 1, 3))]
        return (
            (h + 1, 2),
            [(h, 1), (h, 2), (h + 1, 1), (h + 1, 2), (h + 1, 3)],
            [],
        )
    if family is Family.RIGHTMINUSONLY3:
        return (h + 1, 2), [(h, 1), (h + 1, 1), (h + 1, 2), (h + 1, 3)], []
    raise NoStrategyError(f"family {family.value} has no strategy table")


def _rule(family: Family, n: int) -> _Rule:
    if family not in _RULES:
        raise NoStrategyError(f"family {family.value} has no verified opening strategy")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rule = _RULES[family]
    parity = "odd" if n % 2 else "even"
    if parity not in rule.parities:
        raise NoStrategyError(
            f"{family.value} with {parity} n has no verified split strategy; exhaustive "
            f"search still finds first-player wins, but only {rule.parities[0]} n carries "
            f"a pairing proof"
        )
    return rule


def has_strategy(family: Family, n: int) -> bool:
    try:
        _rule(family, n)
        return True
    except (NoStrategyError, ValueError):
        return False


def prescribed_move(family: Family, n: int) -> VertexLabel:
    """The opening the strategy tables tell the first player to claim."""
    rule = _rule(family, n)
    if n < rule.threshold:
        col, row = rule.smalls[n]
    else:
        col, row = _generic_split(family, n)[0]
    return label_at(n, col, row)


def prescribed_alternatives(family: Family, n: int) -> list[VertexLabel]:
    """Every stored optimal opening (the tables name two for odd two-row grids)."""
    first = prescribed_move(family, n)
    if family is Family.T2 and n % 2 == 1 and n >= _RULES[family].threshold:
        c = (n + 1) // 2
        return [first, label_at(n, c, 2)]
    return [first]


def split_spec(family: Family, n: int) -> SplitSpec:
    """The generic split for (family, n); SmallCaseError below the threshold."""
    rule = _rule(family, n)
    if n < rule.threshold:
        raise SmallCaseError(
            f"{family.value} n={n} is below the generic-split threshold "
            f"{rule.threshold}; use the small-n opening with a direct solver check"
        )
    move, ign_v, ign_e = _generic_split(family, n)
    lab = lambda cr: label_at(n, cr[0], cr[1])
    return SplitSpec(
        family=family,
        n=n,
        parity="odd" if n % 2 else "even",
        prescribed_move=lab(move),
        ignored_vertices=tuple(lab(v) for v in ign_v),
        ignored_edges=tuple((lab(a), lab(b)) for a, b in ign_e),
        small_n_overrides={k: lab(v) for k, v in rule.smalls.items()},
    )


def _filtered_adjacency(
    graph: Graph, live: int, ignored_edges: set[frozenset[int]]
) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for v in _bits(live):
        nbrs = set(_bits(graph.nbr_masks[v] & live))
        if ignored_edges:
            nbrs = {w for w in nbrs if frozenset((v, w)) not in ignored_edges}
        adj[v] = nbrs
    return adj


def _components_of(adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def _find_isomorphism(
    adj: dict[int, set[int]], a: list[int], b: list[int]
) -> dict[int, int] | None:
    """First structure-only isomorphism a -> b in lexicographic search order."""
    if len(a) != len(b):
        return None
    deg = {v: len(adj[v]) for v in a + b}
    if sorted(deg[v] for v in a) != sorted(deg[v] for v in b):
        return None
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(a):
            return True
        u = a[k]
        for v in b:
            if v in used or deg[v] != deg[u]:
                continue
            ok = True
            for w, mw in mapping.items():
                if (w in adj[u]) != (mw in adj[v]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = v
            used.add(v)
            if extend(k + 1):
                return True
            del mapping[u]
            used.remove(v)
        return False

    return mapping if extend(0) else None


def derive_mirror(position: Position, spec: SplitSpec) -> MirrorMap:
    """Pair the two halves left by the split into a structure-only isomorphism.

    The position must be the one right after the strategist (Left) claimed
    the prescribed move: no red tints anywhere, and every ignored vertex
    already claimed or blue-tinted.  More than two components are allowed
    as long as they pair up into isomorphic halves (the smallest boards
    splinter into single vertices).
    """
    graph = position.graph
    move = graph.index_of(spec.prescribed_move)
    if position.red:
        raise ValueError("adversary tint present; mirror derivation needs a clean split")
    if position.alive & (1 << move):
        raise ValueError("prescribed move has not been claimed yet")
    ign_v = {graph.index_of(v) for v in spec.ignored_vertices}
    ign_e = {
        frozenset((graph.index_of(a), graph.index_of(b))) for a, b in spec.ignored_edges
    }
    for v in ign_v:
        bit = 1 << v
        if position.alive & bit and not position.blue & bit:
            raise ValueError(
                f"ignored vertex {graph.label_of(v)} is neither claimed nor "
                f"reserved by the strategist"
            )
    live = position.alive & ~mask_of(ign_v)
    adj = _filtered_adjacency(graph, live, ign_e)
    comps = _components_of(adj)
    if len(comps) % 2:
        raise SplitTableError(
            f"{spec.family.value} n={spec.n}: split left {len(comps)} components"
        )
    pairing: dict[int, int] = {}
    half_a: set[int] = set()
    half_b: set[int] = set()
    unpaired = list(comps)
    while unpaired:
        first = unpaired.pop(0)
        match = None
        for k, cand in enumerate(unpaired):
            iso = _find_isomorphism(adj, first, cand)
            if iso is not None:
                match = k
                break
        if match is None:
            raise SplitTableError(
                f"{spec.family.value} n={spec.n}: component {first} has no isomorphic partner"
            )
        unpaired.pop(match)
        for u, v in iso.items():
            pairing[u] = v
            pairing[v] = u
        half_a |= set(first)
        half_b |= set(iso.values())
    return MirrorMap(pairing=pairing, halves=(frozenset(half_a), frozenset(half_b)))


def copycat_response(mirror: MirrorMap, opponent_move: int) -> int:
    """The paired vertex; StrategyBreachError if the move is outside both halves."""
    return mirror.respond(opponent_move)


def verify_copycat(
    family: Family, n: int, *, line_cap: int = DEFAULT_NODE_CAP
) -> VerificationReport:
    """Play the prescribed opening, then answer every adversary line by mirror.

    verdict "win" means: in every line each mirrored answer was legal on the
    real board and every terminal position left the adversary to move with
    nothing to play.  Small boards below the split threshold are instead
    checked by asking the solver whether the prescribed opening wins.
    """
    rule = _rule(family, n)
    graph = build_family(family, n)
    move_lab = prescribed_move(family, n)
    move = graph.index_of(move_lab)
    start = initial_position(graph)

    if n < rule.threshold:
        ok = move in Solver(graph).best_moves(start, Player.LEFT)
        return VerificationReport(
            family, n, 0, 0,
            "win" if ok else "fail",
            None if ok else [f"Left:{move_lab} (not a winning opening)"],
            method="solver-check",
        )

    spec = split_spec(family, n)
    after_open = start.apply_move(Player.LEFT, move)
    mirror = derive_mirror(after_open, spec)

    lines = 0
    max_depth = 1
    visited: set[tuple[int, int, int]] = set()

    def explore(pos: Position, depth: int) -> list[str] | None:
        nonlocal lines, max_depth
        max_depth = max(max_depth, depth)
        for v in pos.legal_moves(Player.RIGHT):
            lines += 1
            if lines > line_cap:
                raise ResourceBudgetError(f"line budget {line_cap} exceeded")
            step = f"Right:{graph.label_of(v)}"
            reply = mirror.pairing.get(v)
            if reply is None:
                return [step, "<no paired response>"]
            after_adv = pos.apply_move(Player.RIGHT, v)
            if not after_adv.is_legal(Player.LEFT, reply):
                return [step, f"Left:{graph.label_of(reply)} <illegal response>"]
            nxt = after_adv.apply_move(Player.LEFT, reply)
            key = (nxt.alive, nxt.blue, nxt.red)
            if key in visited:
                continue
            visited.add(key)
            fail = explore(nxt, depth + 2)
            if fail is not None:
                return [step, f"Left:{graph.label_of(reply)}"] + fail
        return None

    failure = explore(after_open, 1)
    trace = None if failure is None else [f"Left:{move_lab}"] + failure
    return VerificationReport(
        family, n, lines, max_depth,
        "win" if failure is None else "fail",
        trace,
    )


def check_symmetric_union(
    graph: Graph, tint_vertices: Iterable[int], tint_colour: Player
) -> bool:
    """Whether the tint colour's opponent wins moving first on the doubled board.

    Builds the disjoint union of the board with an untinted copy of itself,
    tints the first copy's listed vertices, and asks whether the opponent of
    the tinted colour wins moving first.  The copycat argument says they do
    not, so False is the expected answer.
    """
    if graph.num_vertices > 8:
        raise GraphSizeError("symmetric-union check is desk-scale only (<= 8 vertices)")
    doubled = disjoint_union(graph, graph)
    tints = list(tint_vertices)
    if any(not 0 <= v < graph.num_vertices for v in tints):
        raise ValueError("tint vertex outside the original board")
    pos = initial_position(doubled).apply_tint(tint_colour, tints)
    return wins_moving(pos, tint_colour.opponent())
