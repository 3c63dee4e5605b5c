"""Value types shared by the model, oracle and solver.

A puzzle is described by the quadruple ``(a, b, c, d)``: the capacities of
jugs A > B > C and the total amount of wine ``d``.  A distribution is the
pair ``(i, j)`` of gallons held in jugs B and C; jug A holds ``d - i - j``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple


class JugError(ValueError):
    """Base class for every validation failure in this package."""

    code = "invalid"


class NotPositiveError(JugError):
    code = "not-positive"


class OrderingError(JugError):
    code = "ordering"


class OddTotalError(JugError):
    code = "odd-total"


class OverfullError(JugError):
    code = "total-exceeds-capacity"


class HalfExceedsBError(JugError):
    code = "half-exceeds-b"


class VertexBoundsError(JugError):
    code = "out-of-bounds"


class InvalidStateError(JugError):
    code = "invalid-state"


class Jug(enum.Enum):
    A = "A"
    B = "B"
    C = "C"

    def __str__(self) -> str:
        return self.value


class Distribution(NamedTuple):
    """Contents of jugs B (``i``) and C (``j``).

    Tuple ordering is row-major, which is the canonical vertex order
    everywhere in the package.
    """

    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class Quadruple:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        _check_quadruple(self.a, self.b, self.c, self.d)

    @property
    def half(self) -> int:
        return self.d // 2

    @property
    def default_target(self) -> Distribution:
        return Distribution(self.half, 0)

    def capacity(self, jug: Jug) -> int:
        return {Jug.A: self.a, Jug.B: self.b, Jug.C: self.c}[jug]

    def contents(self, v: Distribution) -> dict[Jug, int]:
        """Three-jug contents implied by ``v``."""
        return {Jug.A: self.d - v.i - v.j, Jug.B: v.i, Jug.C: v.j}

    def vertices(self) -> list[Distribution]:
        """All vertices in row-major order, valid or not."""
        return [Distribution(i, j) for i in range(self.b + 1) for j in range(self.c + 1)]

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c},{self.d})"


def _check_quadruple(a: int, b: int, c: int, d: int) -> None:
    for name, value in zip("abcd", (a, b, c, d)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise NotPositiveError(f"{name}={value!r} must be a positive integer")
    if not a > b > c:
        raise OrderingError(f"capacities must satisfy a > b > c, got {a}, {b}, {c}")
    if d % 2:
        raise OddTotalError(f"total d={d} is odd; it cannot be split into two equal halves")
    # checked before b >= d/2, which would otherwise mask it (2b < a+b+c always)
    if d > a + b + c:
        raise OverfullError(f"total d={d} exceeds combined capacity a+b+c={a + b + c}")
    if 2 * b < d:
        raise HalfExceedsBError(f"half of the total d/2={d // 2} exceeds capacity b={b}")


def validate_quadruple(a: int, b: int, c: int, d: int) -> Quadruple:
    """Return the quadruple, raising a :class:`JugError` subclass on violation."""
    return Quadruple(a, b, c, d)


def check_vertex(q: Quadruple, v: Distribution) -> Distribution:
    if not (0 <= v.i <= q.b and 0 <= v.j <= q.c):
        raise VertexBoundsError(
            f"{v} lies outside the vertex grid 0<=i<={q.b}, 0<=j<={q.c}"
        )
    return Distribution(*v)


def is_valid_state(q: Quadruple, v: Distribution) -> bool:
    """True iff jug A's implied content ``d - i - j`` lies in ``[0, a]``."""
    check_vertex(q, v)
    return 0 <= q.d - v.i - v.j <= q.a


def require_valid_state(q: Quadruple, v: Distribution, what: str = "state") -> Distribution:
    v = check_vertex(q, v)
    if not is_valid_state(q, v):
        raise InvalidStateError(
            f"{what} {v} is not a valid state: jug A would hold {q.d - v.i - v.j} "
            f"gallons (capacity {q.a})"
        )
    return v


@dataclass(frozen=True)
class PuzzleInstance:
    quadruple: Quadruple
    start: Distribution
    target: Distribution

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", require_valid_state(self.quadruple, self.start, "start"))
        object.__setattr__(self, "target", require_valid_state(self.quadruple, self.target, "target"))

    @classmethod
    def create(
        cls, q: Quadruple, start: tuple[int, int], target: tuple[int, int] | None = None
    ) -> PuzzleInstance:
        return cls(q, Distribution(*start), Distribution(*(target or q.default_target)))


@dataclass(frozen=True)
class Pour:
    source: Jug
    destination: Jug
    amount: int
    result: Distribution

    def __post_init__(self) -> None:
        if self.source == self.destination:
            raise ValueError("source and destination must differ")
        if self.amount < 1:
            raise ValueError(f"pour amount must be positive, got {self.amount}")
