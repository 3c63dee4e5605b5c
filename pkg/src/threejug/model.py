"""The directed graph model of a quadruple.

Edges are decided purely from arithmetic on the coordinates; nothing here
simulates pouring.  :mod:`threejug.oracle` does that independently.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import Distribution, Quadruple, check_vertex


class EdgeKind(enum.Enum):
    B_LEVEL_CHANGE = "B-LEVEL-CHANGE"  # j' = j: pour between A and B
    C_LEVEL_CHANGE = "C-LEVEL-CHANGE"  # i' = i: pour between A and C
    A_PRESERVED = "A-PRESERVED"  # i + j = i' + j': pour between B and C

    def __str__(self) -> str:
        return self.value


def _matching_kinds(q: Quadruple, u: Distribution, v: Distribution) -> list[EdgeKind]:
    a, b, c, d = q.a, q.b, q.c, q.d
    kinds = []
    if v.j == u.j and v.i in (0, b, d - u.j, d - a - u.j):
        kinds.append(EdgeKind.B_LEVEL_CHANGE)
    if v.i == u.i and v.j in (0, c, d - u.i, d - a - u.i):
        kinds.append(EdgeKind.C_LEVEL_CHANGE)
    if u.i + u.j == v.i + v.j and (v.i in (0, b) or v.j in (0, c)):
        kinds.append(EdgeKind.A_PRESERVED)
    return kinds


def _valid(q: Quadruple, v: Distribution) -> bool:
    return 0 <= q.d - v.i - v.j <= q.a


def _edge(q: Quadruple, u: Distribution, v: Distribution) -> bool:
    # both arguments already known to lie on the grid
    if u == v or not (_valid(q, u) and _valid(q, v)):
        return False
    return bool(_matching_kinds(q, u, v))


def edge_exists(q: Quadruple, u: Distribution, v: Distribution) -> bool:
    return _edge(q, check_vertex(q, u), check_vertex(q, v))


def classify_edge(q: Quadruple, u: Distribution, v: Distribution) -> EdgeKind:
    """Which of the three edge conditions produced ``u -> v``."""
    if not edge_exists(q, u, v):
        raise ValueError(f"no edge {u} -> {v} in the graph of {q}")
    kinds = _matching_kinds(q, Distribution(*u), Distribution(*v))
    if len(kinds) != 1:
        raise AssertionError(f"edge {u} -> {v} matches several conditions: {kinds}")
    return kinds[0]


def _candidates(q: Quadruple, u: Distribution) -> set[Distribution]:
    a, b, c, d = q.a, q.b, q.c, q.d
    i, j = u
    s = i + j
    out = {Distribution(x, j) for x in (0, b, d - j, d - a - j)}
    out |= {Distribution(i, y) for y in (0, c, d - i, d - a - i)}
    out |= {Distribution(x, s - x) for x in (0, b)}
    out |= {Distribution(s - y, y) for y in (0, c)}
    return {v for v in out if 0 <= v.i <= b and 0 <= v.j <= c}


def model_successors(q: Quadruple, u: Distribution) -> set[Distribution]:
    """Out-neighbours of ``u``.

    Only the handful of coordinates named by the edge conditions are
    tested, so this is O(1) per vertex rather than a scan of the grid.
    """
    u = check_vertex(q, u)
    if not _valid(q, u):
        return set()
    return {v for v in _candidates(q, u) if _edge(q, u, v)}


@dataclass(frozen=True)
class ModelGraph:
    quadruple: Quadruple
    vertices: tuple[Distribution, ...]
    adjacency: dict[Distribution, tuple[Distribution, ...]] = field(compare=True)

    def edges(self) -> list[tuple[Distribution, Distribution]]:
        return [(u, v) for u in self.vertices for v in self.adjacency[u]]

    @property
    def edge_count(self) -> int:
        return sum(len(vs) for vs in self.adjacency.values())

    def isolated(self) -> set[Distribution]:
        """Vertices with neither in- nor out-edges."""
        touched = {u for u, v in self.edges()} | {v for u, v in self.edges()}
        return set(self.vertices) - touched


def build_graph(q: Quadruple) -> ModelGraph:
    vertices = tuple(q.vertices())
    adjacency = {u: tuple(sorted(model_successors(q, u))) for u in vertices}
    return ModelGraph(q, vertices, adjacency)
