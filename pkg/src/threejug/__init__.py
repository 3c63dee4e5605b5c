"""Directed-graph solver for the generic three-jug decanting puzzle."""
from .core import (
    Distribution,
    Jug,
    JugError,
    Pour,
    PuzzleInstance,
    Quadruple,
    is_valid_state,
    validate_quadruple,
)
from .model import EdgeKind, ModelGraph, build_graph, classify_edge, edge_exists, model_successors
from .oracle import oracle_successors, pour
from .solver import SolveResult, is_solvable, reachable_set, shortest_path
from .verify import DiscrepancyReport, check_theorem1, gcd_criterion, sweep_theorem1

__version__ = "0.1.0"
