"""Board graphs: paths, triangulated grids, and their end-extended variants.

Every board is a plain undirected graph with a deterministic vertex order
(grid vertices row-major, then L/R/R' extras), adjacency stored as one
bitmask per vertex.  Graphs are immutable after construction and capped at
64 vertices so game state fits in machine-word masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from .position import Position

MAX_VERTICES = 64

_KIND_ORDER = {"grid": 0, "L": 1, "R": 2, "Rp": 3}


class GraphSizeError(ValueError):
    """Requested board is empty or exceeds the 64-vertex mask budget."""


class Family(str, Enum):
    """Board family tags.  Values double as the CLI/JSON names."""

    PATH = "path"
    T2 = "t2"
    ONESLANT2 = "oneslant2"
    T3 = "t3"
    ONESLANT3 = "oneslant3"
    LEFTADDONEBOTH3 = "leftaddoneboth3"
    BOTHADDONE3 = "bothaddone3"
    RIGHTADDONLY3 = "rightaddonly3"
    RIGHTMINUSONLY3 = "rightminusonly3"
    BOTHMINUSONE3 = "bothminusone3"

    @property
    def rows(self) -> int:
        if self is Family.PATH:
            return 1
        if self in (Family.T2, Family.ONESLANT2):
            return 2
        return 3


@dataclass(frozen=True)
class VertexLabel:
    """A vertex name: either an (i, j) grid cell or an L/R/R' end extra.

    For grid cells ``i`` is the column (1..n) and ``j`` the row (1..m).
    For end extras ``i`` is the row index and ``j`` is unused.
    """

    kind: str  # "grid" | "L" | "R" | "Rp"
    i: int
    j: int = 0

    @classmethod
    def grid(cls, i: int, j: int) -> "VertexLabel":
        return cls("grid", i, j)

    @classmethod
    def left(cls, i: int) -> "VertexLabel":
        return cls("L", i)

    @classmethod
    def right(cls, i: int) -> "VertexLabel":
        return cls("R", i)

    @classmethod
    def right_prime(cls, i: int) -> "VertexLabel":
        return cls("Rp", i)

    def __str__(self) -> str:
        if self.kind == "grid":
            return f"g{self.i}_{self.j}"
        if self.kind == "Rp":
            return f"R{self.i}p"
        return f"{self.kind}{self.i}"

    def coords(self, n: int) -> tuple[int, int]:
        """(column, row) with extras at columns 0, n+1 and n+2."""
        if self.kind == "grid":
            return (self.i, self.j)
        col = {"L": 0, "R": n + 1, "Rp": n + 2}[self.kind]
        return (col, self.i)

    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], self.j, self.i)


def label_at(n: int, col: int, row: int) -> VertexLabel:
    """Resolve an extended coordinate (columns 0..n+2) to its label."""
    if col == 0:
        return VertexLabel.left(row)
    if col == n + 1:
        return VertexLabel.right(row)
    if col == n + 2:
        return VertexLabel.right_prime(row)
    return VertexLabel.grid(col, row)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable board graph with a fixed vertex order and mask adjacency."""

    family: Family | None
    n: int
    vertices: tuple[VertexLabel, ...]
    nbr_masks: tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @cached_property
    def _index(self) -> dict[VertexLabel, int]:
        return {lab: k for k, lab in enumerate(self.vertices)}

    @cached_property
    def _by_name(self) -> dict[str, int]:
        return {str(lab): k for k, lab in enumerate(self.vertices)}

    def index_of(self, label: VertexLabel) -> int:
        return self._index[label]

    def index_of_name(self, name: str) -> int:
        return self._by_name[name]

    def label_of(self, v: int) -> VertexLabel:
        return self.vertices[v]

    def at_coords(self, col: int, row: int) -> int:
        """Vertex index at an extended coordinate; KeyError if absent."""
        return self._index[label_at(self.n, col, row)]

    def neighbors(self, v: int) -> set[int]:
        return set(_bits(self.nbr_masks[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(len(self.vertices)):
            m = self.nbr_masks[u] >> (u + 1)
            w = u + 1
            while m:
                if m & 1:
                    out.append((u, w))
                m >>= 1
                w += 1
        return out

    def to_json(self) -> dict:
        return {
            "family": self.family.value if self.family else None,
            "n": self.n,
            "vertices": [str(lab) for lab in self.vertices],
            "coords": [list(lab.coords(self.n)) for lab in self.vertices],
            "edges": [list(e) for e in self.edges()],
        }


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _assemble(
    family: Family | None,
    n: int,
    labels: list[VertexLabel],
    edges: Iterable[tuple[VertexLabel, VertexLabel]],
) -> Graph:
    if len(labels) > MAX_VERTICES:
        raise GraphSizeError(f"{len(labels)} vertices exceeds the {MAX_VERTICES}-vertex budget")
    ordered = sorted(labels, key=VertexLabel.sort_key)
    index = {lab: k for k, lab in enumerate(ordered)}
    masks = [0] * len(ordered)
    for a, b in edges:
        u, v = index[a], index[b]
        if u == v:
            raise ValueError(f"self-loop at {a}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(family, n, tuple(ordered), tuple(masks))


def _grid_cells(n: int, m: int) -> list[VertexLabel]:
    return [VertexLabel.grid(i, j) for j in range(1, m + 1) for i in range(1, n + 1)]


def _grid_edges(n: int, m: int) -> list[tuple[VertexLabel, VertexLabel]]:
    g = VertexLabel.grid
    edges: list[tuple[VertexLabel, VertexLabel]] = []
    edges += [(g(i, j), g(i + 1, j)) for j in range(1, m + 1) for i in range(1, n)]
    edges += [(g(i, j), g(i, j + 1)) for i in range(1, n + 1) for j in range(1, m)]
    # one diagonal per unit square, all oriented the same way
    edges += [(g(i, j), g(i + 1, j + 1)) for i in range(1, n) for j in range(1, m)]
    return edges


def build_path(n: int) -> Graph:
    """Path on n vertices labelled g1_1 .. gn_1."""
    _check_size(n, 1)
    return _assemble(Family.PATH, n, _grid_cells(n, 1), _grid_edges(n, 1))


def build_grid(n: int, m: int) -> Graph:
    """Triangulated n-column, m-row grid: Cartesian grid plus aligned diagonals."""
    _check_size(n, m)
    family = {1: Family.PATH, 2: Family.T2, 3: Family.T3}.get(m)
    return _assemble(family, n, _grid_cells(n, m), _grid_edges(n, m))


def _check_size(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise GraphSizeError(f"board sizes must be positive, got n={n}, m={m}")
    if n * m > MAX_VERTICES:
        raise GraphSizeError(f"{n}x{m} board exceeds the {MAX_VERTICES}-vertex budget")


def _variant_extras(
    family: Family, n: int
) -> tuple[list[VertexLabel], list[tuple[VertexLabel, VertexLabel]]]:
    g = VertexLabel.grid
    L1, L2 = VertexLabel.left(1), VertexLabel.left(2)
    R2, R3 = VertexLabel.right(2), VertexLabel.right(3)
    R3p = VertexLabel.right_prime(3)
    if family is Family.ONESLANT2:
        return [R2], [(g(n, 1), R2), (g(n, 2), R2)]
    if family is Family.ONESLANT3:
        return [R2, R3, R3p], [
            (g(n, 1), R2), (g(n, 2), R2), (g(n, 2), R3), (g(n, 3), R3),
            (R2, R3), (R2, R3p), (R3, R3p),
        ]
    if family is Family.LEFTADDONEBOTH3:
        return [L1, R2, R3], [
            (L1, g(1, 1)), (L1, g(1, 2)),
            (g(n, 1), R2), (g(n, 2), R2), (g(n, 2), R3), (g(n, 3), R3), (R2, R3),
        ]
    if family is Family.BOTHADDONE3:
        return [L1, R3], [(L1, g(1, 1)), (L1, g(1, 2)), (g(n, 2), R3), (g(n, 3), R3)]
    if family is Family.RIGHTADDONLY3:
        return [R3], [(g(n, 2), R3), (g(n, 3), R3)]
    if family is Family.RIGHTMINUSONLY3:
        return [R2, R3], [
            (g(n, 1), R2), (g(n, 2), R2), (g(n, 2), R3), (g(n, 3), R3), (R2, R3),
        ]
    if family is Family.BOTHMINUSONE3:
        return [L1, L2, R2, R3], [
            (L1, g(1, 1)), (L1, g(1, 2)), (L2, g(1, 2)), (L2, g(1, 3)), (L1, L2),
            (g(n, 1), R2), (g(n, 2), R2), (g(n, 2), R3), (g(n, 3), R3), (R2, R3),
        ]
    raise ValueError(f"no variant construction for family {family}")


def build_variant(family: Family, n: int) -> Graph:
    """Board for any non-path family: the base grid plus the family's end extras."""
    if family is Family.PATH:
        raise ValueError("paths are built with build_path")
    m = family.rows
    _check_size(n, m)
    labels = _grid_cells(n, m)
    edges = _grid_edges(n, m)
    if family not in (Family.T2, Family.T3):
        extra_v, extra_e = _variant_extras(family, n)
        labels += extra_v
        edges += extra_e
    if len(labels) > MAX_VERTICES:
        raise GraphSizeError(f"variant exceeds the {MAX_VERTICES}-vertex budget")
    return _assemble(family, n, labels, edges)


def build_family(family: Family, n: int) -> Graph:
    """Board for any family tag, paths included."""
    if family is Family.PATH:
        return build_path(n)
    return build_variant(family, n)


def max_n_for(family: Family) -> int:
    """Largest n whose board fits the vertex budget."""
    extras = 0
    if family not in (Family.PATH, Family.T2, Family.T3):
        extras = len(_variant_extras(family, 1)[0])
    return (MAX_VERTICES - extras) // family.rows


def _from_edges(num_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
    # Internal constructor for ad hoc test graphs; labels are synthetic.
    if num_vertices > MAX_VERTICES:
        raise GraphSizeError(f"{num_vertices} vertices exceeds the {MAX_VERTICES}-vertex budget")
    masks = [0] * num_vertices
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise ValueError(f"edge ({u},{v}) out of range")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    labels = tuple(VertexLabel.grid(k + 1, 1) for k in range(num_vertices))
    return Graph(None, num_vertices, labels, tuple(masks))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Side-by-side union of two boards (fresh synthetic labels)."""
    na = a.num_vertices
    edges = a.edges() + [(u + na, v + na) for u, v in b.edges()]
    return _from_edges(na + b.num_vertices, edges)


def is_connected(graph: Graph) -> bool:
    nv = graph.num_vertices
    if nv == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= graph.nbr_masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == graph.full_mask


_DOT_DEAD = "gray80"
_DOT_BLUE = "lightblue"
_DOT_RED = "lightpink"


def export_dot(graph: Graph, position: "Position | None" = None) -> str:
    """Graphviz text for a board, optionally shaded by a game position."""
    lines = ["graph board {", "  node [shape=circle];"]
    for v, lab in enumerate(graph.vertices):
        attrs = ""
        if position is not None:
            bit = 1 << v
            if not position.alive & bit:
                attrs = f' [style=filled, fillcolor={_DOT_DEAD}]'
            elif position.blue & bit:
                attrs = f' [style=filled, fillcolor={_DOT_BLUE}]'
            elif position.red & bit:
                attrs = f' [style=filled, fillcolor={_DOT_RED}]'
        lines.append(f"  {lab}{attrs};")
    for u, v in graph.edges():
        lines.append(f"  {graph.vertices[u]} -- {graph.vertices[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
