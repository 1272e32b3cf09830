"""Exact solvers for interval vertex deletion and interval completion.

Single-exponential branching solvers built on obstruction structure (short
holes, small asteroidal triples, and the two big-AT families), together with
independent brute-force oracles for desk-scale verification.
"""

from .graph import Graph, find_chordless_cycle, minimum_vertex_separator
from .recognition import ATWitness, PeoResult, find_at, is_chordal, is_interval
from .obstructions import (
    BigAT,
    Obstruction,
    find_minimum_big_at,
    find_small_obstruction,
    shrink_to_minimal,
)
from .structure import ATContext, RipeAT, build_context, find_ripe_at
from .cycles import CleanCycle, CycleStructure, classify_cycle, find_clean_cycle, \
    min_cycle_separator
from .deletion import SearchStats, SolveResult, chordal_interval, interval_deletion, \
    minimum_deletion
from .completion import (
    CompletionResult,
    FillClass,
    classify_fill,
    enumerate_cycle_triangulations,
    interval_completion,
    minimum_completion,
)
from .oracle import (
    OracleReport,
    brute_force_min_completion,
    brute_force_min_deletion,
    oracle_is_interval,
)
from .instances import load_instance, parse_instance, serialize_instance

__version__ = "0.1.0"

__all__ = [
    "ATContext", "ATWitness", "BigAT", "CleanCycle", "CompletionResult",
    "CycleStructure", "FillClass", "Graph", "Obstruction", "OracleReport",
    "PeoResult", "RipeAT", "SearchStats", "SolveResult",
    "brute_force_min_completion", "brute_force_min_deletion",
    "build_context", "chordal_interval", "classify_cycle", "classify_fill",
    "enumerate_cycle_triangulations", "find_at", "find_chordless_cycle",
    "find_clean_cycle", "find_minimum_big_at", "find_ripe_at",
    "find_small_obstruction", "interval_completion", "interval_deletion",
    "is_chordal", "is_interval", "load_instance", "min_cycle_separator",
    "minimum_completion", "minimum_deletion", "minimum_vertex_separator",
    "oracle_is_interval", "parse_instance", "serialize_instance",
    "shrink_to_minimal",
]
