"""Brute-force ground truth for recognition and both editing problems.

The interval test here arranges maximal cliques consecutively instead of
going through chordality and asteroidal triples, so a bug in the production
recognizer cannot silently vouch for itself.  The optimization oracles
enumerate candidate solutions in increasing size under explicit work bounds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .errors import SizeGuardExceeded, WorkBoundExceeded
from . import recognition
from .graph import Graph

ORACLE_SIZE_GUARD = 10
DEFAULT_WORK_BOUND = 5_000_000


@dataclass(frozen=True)
class OracleReport:
    problem: str                      # "deletion" | "completion" | "recognition"
    optimum: Optional[int]            # None when nothing within kmax
    witness: Optional[frozenset]      # vertex set or edge set achieving the optimum
    elapsed: float
    kmax: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.optimum is not None


def _maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as position bitsets (pivotless Bron-Kerbosch)."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        rest = p
        while rest:
            bit = rest & -rest
            v = bit.bit_length() - 1
            nb = g.adj_mask_pos(v)
            expand(r | bit, p & nb, x & nb)
            p &= ~bit
            x |= bit
            rest &= ~bit
    expand(0, g.full_mask, 0)
    return out


def oracle_is_interval(g: Graph) -> bool:
    """Consecutive-arrangement interval test, guarded to small graphs.

    Searches for an order of the maximal cliques in which every vertex's
    cliques are contiguous, backtracking as soon as a placed vertex would
    have to reappear after a gap.
    """
    if g.n > ORACLE_SIZE_GUARD:
        raise SizeGuardExceeded(f"oracle interval test guarded to n <= {ORACLE_SIZE_GUARD}")
    if g.n == 0:
        return True
    cliques = _maximal_cliques(g)
    k = len(cliques)

    def place(order: list[int], used: int, seen: int) -> bool:
        if len(order) == k:
            return True
        prev = cliques[order[-1]] if order else 0
        for i in range(k):
            if used >> i & 1:
                continue
            q = cliques[i]
            # a vertex already seen but absent from the previous clique may not return
            if q & seen & ~prev:
                continue
            if place(order + [i], used | (1 << i), seen | q):
                return True
        return False

    return place([], 0, 0)


def _check_interval(g: Graph) -> bool:
    # enumeration workhorse: the fast recognizer; its agreement with
    # oracle_is_interval is established separately by the acceptance suite
    return recognition.is_interval(g)


def brute_force_min_deletion(g: Graph, kmax: int,
                             work_bound: int = DEFAULT_WORK_BOUND) -> OracleReport:
    """Smallest vertex set (size <= kmax) whose removal leaves an interval graph.

    Subsets are tried in increasing size and lexicographic order within a
    size, so the witness is canonical.
    """
    start = time.perf_counter()
    total = sum(comb(g.n, s) for s in range(min(kmax, g.n) + 1))
    if total > work_bound:
        raise WorkBoundExceeded(
            f"deletion oracle needs {total} subsets, bound is {work_bound}")
    verts = g.vertices
    for size in range(min(kmax, g.n) + 1):
        for cand in combinations(verts, size):
            if _check_interval(g.remove_vertices(cand)):
                report = OracleReport(
                    problem="deletion", optimum=size, witness=frozenset(cand),
                    elapsed=time.perf_counter() - start, kmax=kmax)
                _verify_witness(g, report)
                return report
    return OracleReport(problem="deletion", optimum=None, witness=None,
                        elapsed=time.perf_counter() - start, kmax=kmax)


def brute_force_min_completion(g: Graph, kmax: int,
                               work_bound: int = DEFAULT_WORK_BOUND) -> OracleReport:
    """Smallest fill set (size <= kmax) whose addition makes the graph interval."""
    start = time.perf_counter()
    non_edges = [(u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)]
    total = sum(comb(len(non_edges), s) for s in range(min(kmax, len(non_edges)) + 1))
    if total > work_bound:
        raise WorkBoundExceeded(
            f"completion oracle needs {total} subsets, bound is {work_bound}")
    for size in range(min(kmax, len(non_edges)) + 1):
        for cand in combinations(non_edges, size):
            if _check_interval(g.add_edges(cand)):
                report = OracleReport(
                    problem="completion", optimum=size, witness=frozenset(cand),
                    elapsed=time.perf_counter() - start, kmax=kmax)
                _verify_witness(g, report)
                return report
    return OracleReport(problem="completion", optimum=None, witness=None,
                        elapsed=time.perf_counter() - start, kmax=kmax)


def completion_hole_packing_bound(g: Graph) -> int:
    """Sound lower bound on the completion optimum via disjoint holes.

    Every hole needs length-3 fills inside its own vertex set, so
    vertex-disjoint holes contribute additively.  Greedy packing by shortest
    hole; the bound is valid regardless of packing quality.
    """
    from .graph import find_chordless_cycle

    bound = 0
    work = g
    while True:
        hole = find_chordless_cycle(work, 4)
        if hole is None:
            return bound
        bound += len(hole) - 3
        work = work.remove_vertices(hole)


def _verify_witness(g: Graph, report: OracleReport) -> None:
    if report.problem == "deletion":
        edited = g.remove_vertices(report.witness)
    else:
        edited = g.add_edges(report.witness)
    assert recognition.is_interval(edited)
    if edited.n <= ORACLE_SIZE_GUARD:
        assert oracle_is_interval(edited)
