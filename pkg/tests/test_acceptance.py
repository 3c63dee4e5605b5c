"""Exit criteria.  Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL
line per criterion in the terminal summary."""
import random
import time

import pytest

from threejug.core import (
    Distribution as D,
    HalfExceedsBError,
    Jug,
    OddTotalError,
    OrderingError,
    OverfullError,
    PuzzleInstance,
    Quadruple,
    is_valid_state,
    validate_quadruple,
)
from threejug.model import build_graph, edge_exists, model_successors
from threejug.oracle import pour
from threejug.solver import is_solvable, shortest_path
from threejug.verify import classic_quadruples, gcd_criterion, iter_quadruples, sweep_theorem1

SWEEP_MAX_A = 12
SWEEP_TIME_LIMIT = 60.0
GCD_MAX_A = 30
RANDOM_INSTANCES = 100
RANDOM_MAX_A = 20
RANDOM_SEED = 20261018
FIGURE1_PATH = [D(0, 0), D(7, 0), D(4, 3), D(4, 0), D(1, 3), D(1, 0), D(0, 1), D(7, 1), D(5, 3), D(5, 0)]
FIGURE1_SHORTEST = 9  # frozen from BFS; the drawn path is not claimed minimal


@pytest.mark.criterion("AC1 model/simulator equivalence over all quadruples a<=12, under 60 s")
def test_ac1_theorem_sweep():
    t0 = time.perf_counter()
    reports = sweep_theorem1(SWEEP_MAX_A)
    elapsed = time.perf_counter() - t0
    assert reports == []
    assert elapsed < SWEEP_TIME_LIMIT, f"sweep took {elapsed:.1f}s"


@pytest.mark.criterion("AC2 Q=(7,4,2,6) out-neighbours of (1,1) and full edge list match the figure")
def test_ac2_figure2(figure2_edges):
    q = Quadruple(7, 4, 2, 6)
    assert model_successors(q, D(1, 1)) == {D(0, 1), D(0, 2), D(1, 0), D(1, 2), D(2, 0), D(4, 1)}
    assert sorted(build_graph(q).edges()) == sorted(figure2_edges)


@pytest.mark.criterion("AC3 Q=(10,7,3,10) drawn 9-pour path is valid; BFS path <= 9 ends at (5,0)")
def test_ac3_figure1():
    q = Quadruple(10, 7, 3, 10)
    assert all(edge_exists(q, u, v) for u, v in zip(FIGURE1_PATH, FIGURE1_PATH[1:]))
    r = shortest_path(PuzzleInstance.create(q, (0, 0), (5, 0)))
    assert r.solvable and r.path[-1] == (5, 0)
    assert r.pour_count <= 9
    assert r.pour_count == FIGURE1_SHORTEST


@pytest.mark.criterion("AC4 BFS solvability equals gcd criterion for a=b+c=d<=30")
def test_ac4_gcd_crosscheck():
    mismatches = []
    checked = 0
    for q in classic_quadruples(GCD_MAX_A):
        checked += 1
        by_search = is_solvable(PuzzleInstance.create(q, (0, 0), q.default_target))
        if by_search != gcd_criterion(q):
            mismatches.append(q)
    assert checked > 0
    assert mismatches == []


@pytest.mark.criterion("AC5 model and simulator BFS agree on verdict and length, a<=12, every start")
def test_ac5_solver_agreement():
    mismatches = []
    for q in iter_quadruples(SWEEP_MAX_A):
        for s in q.vertices():
            if not is_valid_state(q, s):
                continue
            p = PuzzleInstance.create(q, s)
            m, o = shortest_path(p, "model"), shortest_path(p, "oracle")
            if (m.solvable, m.pour_count) != (o.solvable, o.pour_count):
                mismatches.append((q, s))
    assert mismatches == []


def _random_solvable_instances(n, max_a, seed):
    rng = random.Random(seed)
    found = []
    while len(found) < n:
        a = rng.randint(3, max_a)
        b = rng.randint(2, a - 1)
        c = rng.randint(1, b - 1)
        d = 2 * rng.randint(1, b)
        q = Quadruple(a, b, c, d)
        starts = [v for v in q.vertices() if is_valid_state(q, v)]
        p = PuzzleInstance.create(q, rng.choice(starts))
        if is_solvable(p):
            found.append(p)
    return found


@pytest.mark.criterion("AC6 100 random solvable instances (a<=20) replay through the simulator")
def test_ac6_pour_replay():
    failures = []
    for p in _random_solvable_instances(RANDOM_INSTANCES, RANDOM_MAX_A, RANDOM_SEED):
        q = p.quadruple
        r = shortest_path(p)
        state = p.start
        for step, expected in zip(r.pours, r.path[1:]):
            replayed = pour(q, state, step.source, step.destination)
            if replayed is None or replayed.result != expected or replayed.amount != step.amount:
                failures.append((p, state, step))
                break
            state = replayed.result
        final = q.contents(state)
        if (final[Jug.A], final[Jug.B], final[Jug.C]) != (q.half, q.half, 0):
            failures.append((p, "final", final))
    assert failures == []


@pytest.mark.criterion("AC7 start=target gives 0 pours; each validation failure has its own error")
def test_ac7_degenerate():
    q = Quadruple(10, 7, 3, 10)
    r = shortest_path(PuzzleInstance.create(q, (5, 0)))
    assert r.solvable and r.pour_count == 0

    cases = {
        OddTotalError: (7, 4, 2, 7),
        HalfExceedsBError: (7, 3, 2, 8),
        OrderingError: (4, 4, 2, 6),
        OverfullError: (7, 3, 2, 14),
    }
    for error, args in cases.items():
        with pytest.raises(error):
            validate_quadruple(*args)
    assert len({e.code for e in cases}) == len(cases)
