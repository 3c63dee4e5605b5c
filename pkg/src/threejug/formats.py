"""Serialisation: instance parsing, structured JSON documents and DOT export.

The JSON layouts are documented in ``docs/FORMAT.md``.
"""
from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

from .core import Distribution, JugError, PuzzleInstance, Quadruple, validate_quadruple
from .model import ModelGraph
from .solver import SolveResult
from .verify import DiscrepancyReport

FORMAT_VERSION = 1


class InputError(JugError):
    code = "parse"


def parse_triple(text: str | Sequence[int], what: str) -> tuple[int, int, int]:
    return _parse_ints(text, 3, what)


def parse_pair(text: str | Sequence[int], what: str) -> tuple[int, int]:
    return _parse_ints(text, 2, what)


def _parse_ints(text, n: int, what: str) -> tuple[int, ...]:
    if isinstance(text, str):
        parts = [p.strip() for p in text.split(",")]
    elif isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        raise InputError(f"{what} must be a list of {n} integers, got {text!r}")
    if len(parts) != n:
        raise InputError(f"{what} needs {n} comma-separated integers, got {text!r}")
    try:
        values = tuple(p if type(p) is int else int(p, 10) for p in parts)
    except (TypeError, ValueError):
        raise InputError(f"{what} must be integers, got {text!r}") from None
    if any(v < 0 for v in values):
        raise InputError(f"{what} must be non-negative, got {text!r}")
    return values


def parse_instance(
    capacities: str | Sequence[int],
    start: str | Sequence[int],
    target: str | Sequence[int] | None = None,
) -> PuzzleInstance:
    """Build an instance from jug capacities and the three starting contents.

    The total ``d`` is the sum of the starting contents.  ``target`` is a
    ``(B, C)`` pair and defaults to ``(d/2, 0)``.
    """
    a, b, c = parse_triple(capacities, "capacities")
    a0, b0, c0 = parse_triple(start, "start contents")
    q = validate_quadruple(a, b, c, a0 + b0 + c0)
    for jug, level, cap in (("A", a0, a), ("B", b0, b), ("C", c0, c)):
        if level > cap:
            raise InputError(f"start contents of jug {jug} ({level}) exceed its capacity {cap}")
    tgt = parse_pair(target, "target") if target is not None else None
    return PuzzleInstance.create(q, (b0, c0), tgt)


def parse_instance_text(text: str) -> PuzzleInstance:
    """Parse a JSON puzzle file: ``{"capacities": [..], "start": [..], "target": [..]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"puzzle file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("puzzle file must hold a JSON object")
    unknown = set(doc) - {"capacities", "start", "target"}
    if unknown:
        raise InputError(f"unknown keys in puzzle file: {sorted(unknown)}")
    for key in ("capacities", "start"):
        if key not in doc:
            raise InputError(f"puzzle file lacks required key {key!r}")
    return parse_instance(doc["capacities"], doc["start"], doc.get("target"))


def _quad_dict(q: Quadruple) -> dict[str, int]:
    return {"a": q.a, "b": q.b, "c": q.c, "d": q.d}


def _pair(v: Distribution) -> list[int]:
    return [v.i, v.j]


def result_to_dict(result: SolveResult, with_path: bool = True) -> dict[str, Any]:
    p = result.instance
    doc: dict[str, Any] = {
        "format": "threejug/solve" if with_path else "threejug/check",
        "version": FORMAT_VERSION,
        "quadruple": _quad_dict(p.quadruple),
        "start": _pair(p.start),
        "target": _pair(p.target),
        "verdict": "solvable" if result.solvable else "unsolvable",
    }
    if with_path and result.solvable:
        doc["pour_count"] = result.pour_count
        doc["path"] = [_pair(v) for v in result.path]
        doc["pours"] = [
            {"source": str(s.source), "destination": str(s.destination), "amount": s.amount}
            for s in result.pours
        ]
    return doc


def graph_to_dict(graph: ModelGraph, hide_isolated: bool = False) -> dict[str, Any]:
    hidden = graph.isolated() if hide_isolated else set()
    return {
        "format": "threejug/graph",
        "version": FORMAT_VERSION,
        "quadruple": _quad_dict(graph.quadruple),
        "vertices": [_pair(v) for v in graph.vertices if v not in hidden],
        "edges": [[_pair(u), _pair(v)] for u, v in graph.edges()],
    }


def graph_from_dict(doc: dict[str, Any]) -> ModelGraph:
    """Inverse of :func:`graph_to_dict` (for documents written without hiding)."""
    if doc.get("format") != "threejug/graph":
        raise InputError(f"not a graph document: format={doc.get('format')!r}")
    qd = doc["quadruple"]
    q = validate_quadruple(qd["a"], qd["b"], qd["c"], qd["d"])
    vertices = tuple(Distribution(*v) for v in doc["vertices"])
    adjacency: dict[Distribution, list[Distribution]] = {v: [] for v in vertices}
    for u, v in doc["edges"]:
        adjacency.setdefault(Distribution(*u), []).append(Distribution(*v))
    return ModelGraph(q, vertices, {u: tuple(vs) for u, vs in adjacency.items()})


def verify_to_dict(
    max_a: int,
    checked: int,
    reports: Iterable[DiscrepancyReport],
    gcd_max_a: int,
    gcd_checked: int,
    gcd_mismatches: Iterable[tuple[Quadruple, bool, bool]],
) -> dict[str, Any]:
    return {
        "format": "threejug/verify",
        "version": FORMAT_VERSION,
        "max_a": max_a,
        "quadruples_checked": checked,
        "discrepancies": [
            {
                "quadruple": _quad_dict(r.quadruple),
                "missing_in_model": [[_pair(u), _pair(v)] for u, v in r.missing_in_model],
                "extra_in_model": [[_pair(u), _pair(v)] for u, v in r.extra_in_model],
            }
            for r in reports
        ],
        "gcd_max_a": gcd_max_a,
        "gcd_checked": gcd_checked,
        "gcd_mismatches": [
            {"quadruple": _quad_dict(q), "search": s, "criterion": g} for q, s, g in gcd_mismatches
        ],
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2)


def node_id(v: Distribution) -> str:
    return f"v_{v.i}_{v.j}"


def graph_to_dot(graph: ModelGraph, hide_isolated: bool = False) -> str:
    hidden = graph.isolated() if hide_isolated else set()
    q = graph.quadruple
    lines = [f'digraph "G_{q.a}_{q.b}_{q.c}_{q.d}" {{']
    for v in graph.vertices:
        if v not in hidden:
            lines.append(f'  {node_id(v)} [label="({v.i},{v.j})"];')
    for u, v in graph.edges():
        lines.append(f"  {node_id(u)} -> {node_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
