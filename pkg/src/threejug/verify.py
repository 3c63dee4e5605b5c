"""Empirical checks: model vs. simulator sweeps and the classic gcd criterion."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .core import Distribution, PuzzleInstance, Quadruple
from .model import model_successors
from .oracle import oracle_successors
from .solver import is_solvable

Edge = tuple[Distribution, Distribution]


@dataclass(frozen=True)
class DiscrepancyReport:
    quadruple: Quadruple
    missing_in_model: tuple[Edge, ...] = field(default=())
    extra_in_model: tuple[Edge, ...] = field(default=())

    def __bool__(self) -> bool:
        return bool(self.missing_in_model or self.extra_in_model)

    @property
    def is_empty(self) -> bool:
        return not self


def check_theorem1(q: Quadruple) -> DiscrepancyReport:
    """Compare model and simulator successor sets at every vertex of ``q``."""
    missing: list[Edge] = []
    extra: list[Edge] = []
    for u in q.vertices():
        by_model = model_successors(q, u)
        by_pour = oracle_successors(q, u)
        missing += [(u, v) for v in sorted(by_pour - by_model)]
        extra += [(u, v) for v in sorted(by_model - by_pour)]
    return DiscrepancyReport(q, tuple(missing), tuple(extra))


def iter_quadruples(max_a: int, min_a: int = 3) -> Iterator[Quadruple]:
    """Every admissible quadruple with ``min_a <= a <= max_a``, in sorted order."""
    for a in range(min_a, max_a + 1):
        for b in range(2, a):
            for c in range(1, b):
                for d in range(2, min(2 * b, a + b + c) + 1, 2):
                    yield Quadruple(a, b, c, d)


def sweep_theorem1(max_a: int, workers: int | None = None) -> list[DiscrepancyReport]:
    """Non-empty discrepancy reports over all quadruples with ``a <= max_a``.

    ``workers > 1`` fans the quadruples out over processes; the result is
    sorted by quadruple either way.
    """
    quads = list(iter_quadruples(max_a))
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(check_theorem1, quads, chunksize=64))
    else:
        reports = [check_theorem1(q) for q in quads]
    return sorted((r for r in reports if r), key=lambda r: r.quadruple)


def gcd_criterion(q: Quadruple) -> bool | None:
    """Classic criterion for ``a = b + c`` with jug A initially full.

    Returns ``None`` when those hypotheses do not hold.
    """
    if q.a != q.b + q.c or q.d != q.a:
        return None
    return q.a % (2 * math.gcd(q.b, q.c)) == 0


def classic_quadruples(max_a: int) -> Iterator[Quadruple]:
    """Quadruples ``(b+c, b, c, b+c)`` with ``b+c <= max_a``.

    Odd ``a`` is skipped: the total must be even to form a quadruple at all.
    """
    for a in range(4, max_a + 1, 2):
        for c in range(1, a):
            b = a - c
            if b > c:
                yield Quadruple(a, b, c, a)


def gcd_crosscheck(max_a: int) -> list[tuple[Quadruple, bool, bool]]:
    """Classic instances where BFS solvability disagrees with the gcd criterion.

    Each mismatch is ``(quadruple, bfs_verdict, gcd_verdict)``.
    """
    mismatches = []
    for q in classic_quadruples(max_a):
        by_search = is_solvable(PuzzleInstance.create(q, (0, 0)))
        by_gcd = gcd_criterion(q)
        if by_search != by_gcd:
            mismatches.append((q, by_search, by_gcd))
    return mismatches
