"""Pour simulator: successors computed from jug physics alone.

This module must not import :mod:`threejug.model`; it is the reference the
graph model is checked against.
"""
from __future__ import annotations

from itertools import permutations

from .core import Distribution, InvalidStateError, Jug, Pour, Quadruple, check_vertex, is_valid_state


JUG_PAIRS = tuple(permutations(Jug, 2))


def pour(q: Quadruple, state: Distribution, source: Jug, destination: Jug) -> Pour | None:
    """Pour from ``source`` into ``destination`` until one is empty or the other full.

    Returns ``None`` when nothing would move.
    """
    state = check_vertex(q, state)
    if not is_valid_state(q, state):
        raise InvalidStateError(f"{state} is not a valid state for {q}")
    if source == destination:
        raise ValueError("cannot pour a jug into itself")

    level = q.contents(state)
    amount = min(level[source], q.capacity(destination) - level[destination])
    if amount == 0:
        return None
    level[source] -= amount
    level[destination] += amount
    assert level[source] == 0 or level[destination] == q.capacity(destination)
    return Pour(source, destination, amount, Distribution(level[Jug.B], level[Jug.C]))


def oracle_successors(q: Quadruple, state: Distribution) -> set[Distribution]:
    state = check_vertex(q, state)
    if not is_valid_state(q, state):
        return set()
    results = (pour(q, state, x, y) for x, y in JUG_PAIRS)
    return {p.result for p in results if p is not None}
