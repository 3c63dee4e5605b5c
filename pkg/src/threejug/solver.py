"""Reachability and shortest pour sequences over the directed model graph."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Literal

from .core import Distribution, Jug, Pour, PuzzleInstance, Quadruple, require_valid_state
from .model import EdgeKind, classify_edge, model_successors
from .oracle import oracle_successors, pour

SuccessorSource = Literal["model", "oracle"]

_SUCCESSORS: dict[str, Callable[[Quadruple, Distribution], set[Distribution]]] = {
    "model": model_successors,
    "oracle": oracle_successors,
}

_PAIR_FOR_KIND = {
    EdgeKind.B_LEVEL_CHANGE: (Jug.A, Jug.B),
    EdgeKind.C_LEVEL_CHANGE: (Jug.A, Jug.C),
    EdgeKind.A_PRESERVED: (Jug.C, Jug.B),
}


class ModelOracleMismatch(AssertionError):
    """A decorated edge did not replay through the pour simulator."""


@dataclass(frozen=True)
class SolveResult:
    instance: PuzzleInstance
    solvable: bool
    path: tuple[Distribution, ...] = ()
    pours: tuple[Pour, ...] = ()

    @property
    def pour_count(self) -> int | None:
        return len(self.pours) if self.solvable else None


def _successor_fn(source: str) -> Callable[[Quadruple, Distribution], set[Distribution]]:
    try:
        return _SUCCESSORS[source]
    except KeyError:
        raise ValueError(f"unknown successor source {source!r}; use 'model' or 'oracle'") from None


def decorate_edge(q: Quadruple, u: Distribution, v: Distribution) -> Pour:
    """The physical pour realising the model edge ``u -> v``.

    The jug pair comes from the edge's kind and the direction from the sign
    of the change in the second jug's level.  The result is then replayed
    through the simulator and must land on ``v``.
    """
    kind = classify_edge(q, u, v)
    low, high = _PAIR_FOR_KIND[kind]
    # `high` is B for the first and third kinds, C for the second
    delta = (v.j - u.j) if high is Jug.C else (v.i - u.i)
    source, destination = (low, high) if delta > 0 else (high, low)
    decorated = Pour(source, destination, abs(delta), v)

    replay = pour(q, u, source, destination)
    if replay != decorated:
        raise ModelOracleMismatch(f"edge {u} -> {v} decorated as {decorated}, simulator gives {replay}")
    return decorated


def _bfs(q: Quadruple, start: Distribution, successors, stop: Distribution | None = None):
    parent: dict[Distribution, Distribution | None] = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u == stop:
            break
        # row-major expansion + FIFO order makes the first-found parent chain
        # the lexicographically least among shortest paths
        for v in sorted(successors(q, u)):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return parent


def reachable_set(
    q: Quadruple, start: Distribution, successor_source: SuccessorSource = "model"
) -> set[Distribution]:
    start = require_valid_state(q, start, "start")
    return set(_bfs(q, start, _successor_fn(successor_source)))


def shortest_path(p: PuzzleInstance, successor_source: SuccessorSource = "model") -> SolveResult:
    q = p.quadruple
    parent = _bfs(q, p.start, _successor_fn(successor_source), stop=p.target)
    if p.target not in parent:
        return SolveResult(p, False)

    path = [p.target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    pours = tuple(decorate_edge(q, u, v) for u, v in zip(path, path[1:]))
    return SolveResult(p, True, tuple(path), pours)


def is_solvable(p: PuzzleInstance, successor_source: SuccessorSource = "model") -> bool:
    return p.target in reachable_set(p.quadruple, p.start, successor_source)
