"""Bounded-search-tree solver for k-interval vertex deletion.

Small obstructions (short holes and small ATs) are branched exhaustively.
On chordal, small-obstruction-free graphs the solver branches around a ripe
big AT: sixteen/seventeen single-vertex deletions, one neighborhood batch,
and one minimum-separator batch.  Non-chordal graphs go through the clean
cycle machinery: delete the whole cycle or a minimum cycle-separator, or
first "ripen" the cycle by solving the chordal problem inside a three-vertex
neighborhood window.  First success in branch order wins, so runs are
reproducible.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .cycles import find_clean_cycle, min_cycle_separator
from .errors import StructureViolation
from .graph import Graph, minimum_vertex_separator
from .obstructions import find_small_at, find_small_obstruction
from .recognition import find_at, is_chordal, is_interval
from .structure import find_ripe_at

BATCH_MIN_PATH = 13  # below this the single-vertex list covers the whole witness


@dataclass
class SearchStats:
    """Search-tree bookkeeping threaded through one solve."""

    nodes: int = 0
    max_depth: int = 0
    max_branch_degree: int = 0
    degree_by_kind: dict = field(default_factory=dict)
    histogram: Counter = field(default_factory=Counter)
    node_records: list = field(default_factory=list)
    elapsed: float = 0.0

    def enter(self, depth: int) -> None:
        self.nodes += 1
        self.max_depth = max(self.max_depth, depth)

    def record(self, depth: int, kind: str, degree: int) -> None:
        self.max_branch_degree = max(self.max_branch_degree, degree)
        prev = self.degree_by_kind.get(kind, 0)
        self.degree_by_kind[kind] = max(prev, degree)
        self.histogram[degree] += 1
        self.node_records.append((depth, kind, degree))


@dataclass(frozen=True)
class SolveResult:
    found: bool
    vertices: Optional[frozenset]
    stats: SearchStats

    @property
    def outcome(self) -> str:
        return "yes" if self.found else "no"


def _small_at_of(g: Graph, witness) -> Optional[frozenset]:
    """Minimal witness from an AT, when it lands inside the small bound."""
    minimal = shrink_to_minimal(g, witness.vertex_set())
    if len(minimal) > SMALL_AT_BOUND or _induces_cycle(g, minimal):
        return None
    return minimal


def _branch_vertex_list(at) -> list[int]:
    """Single-vertex deletion candidates in printed order, duplicates dropped."""
    p = at.p
    path = at.path
    head = [at.a, at.b, at.c, at.u] if at.w is None \
        else [at.a, at.b, at.c, at.u, at.w]
    tail = [path[i] for i in range(6)]
    tail += [path[p - 1 - i] for i in range(6)]
    out = []
    for v in head + tail:
        if v not in out:
            out.append(v)
    return out


def _neighborhood_batch(g: Graph, at) -> frozenset:
    """Everything near the middle of the path but off the shallow side:
    closed neighborhoods of v_5..v_{p-4} minus the shallow vertex's
    neighborhood."""
    shallow_nbrs = g.mask_of(g.neighborhood(at.c))
    mask = 0
    for j in range(5, at.p - 3):          # positions 5..p-4, 1-indexed
        v = at.path[j - 1]
        mask |= g.adj_mask(v) | g.mask_of([v])
    mask &= ~shallow_nbrs
    return frozenset(g.ids_of(mask))


def _middle_separator(g: Graph, at) -> frozenset:
    """Minimum separator between v_6 and v_{p-5} avoiding the shallow side."""
    s = at.path[5]
    t = at.path[at.p - 6]
    return frozenset(minimum_vertex_separator(g, s, t, g.neighborhood(at.c)))


def _solve_chordal(g: Graph, k: int, depth: int, stats: SearchStats,
                   at_hint=None) -> Optional[frozenset]:
    stats.enter(depth)
    witness = at_hint if at_hint is not None else find_at(g)
    if witness is None:
        stats.record(depth, "leaf", 0)
        return frozenset()
    if k <= 0:
        stats.record(depth, "leaf", 0)
        return None
    small = _small_at_of(g, witness)
    if small is not None:
        raise StructureViolation(
            "small obstruction reached the chordal branching phase",
            witness=small)
    ripe = find_ripe_at(g, k)
    if ripe is None:
        stats.record(depth, "big_at", 0)
        return None
    at = ripe.at
    singles = _branch_vertex_list(at)
    batches = []
    if at.p >= BATCH_MIN_PATH:
        batch = _neighborhood_batch(g, at)
        if 0 < len(batch) <= k:
            batches.append(batch)
        separator = _middle_separator(g, at)
        if 0 < len(separator) <= k:
            batches.append(separator)
    # fanout is the number of live alternatives, recorded before the walk so
    # early successes still measure the true branching factor
    stats.record(depth, "big_at", len(singles) + len(batches))
    for v in singles:
        sub = _solve_chordal(g.remove_vertices([v]), k - 1, depth + 1, stats)
        if sub is not None:
            return sub | {v}
    for batch in batches:
        sub = _solve_chordal(g.remove_vertices(batch), k - len(batch),
                             depth + 1, stats)
        if sub is not None:
            return sub | batch
    return None


def _solve_general(g: Graph, k: int, depth: int, stats: SearchStats) -> Optional[frozenset]:
    stats.enter(depth)
    peo = is_chordal(g)
    if peo.is_perfect:
        witness = find_at(g)
        if witness is None:
            stats.record(depth, "leaf", 0)
            return frozenset()
        if k <= 0:
            stats.record(depth, "leaf", 0)
            return None
        small = _small_at_of(g, witness)
        if small is not None:
            return _branch_small(g, k, depth, stats, sorted(small))
        stats.nodes -= 1  # hand the same node over to the chordal solver
        return _solve_chordal(g, k, depth, stats, at_hint=witness)

    if k <= 0:
        stats.record(depth, "leaf", 0)
        return None
    hole = list(peo.failure_witness)
    if len(hole) <= 8:
        return _branch_small(g, k, depth, stats, hole)
    witness = find_at(g)
    if witness is not None:
        small = _small_at_of(g, witness)
        if small is not None:
            return _branch_small(g, k, depth, stats, sorted(small))

    clean = find_clean_cycle(g)
    if clean is None:
        raise StructureViolation("non-chordal graph without a clean cycle")
    if clean.ripe:
        cycle = list(clean.cycle)
        separator = min_cycle_separator(g, clean)
        batches = []
        if len(cycle) <= k:
            batches.append(frozenset(cycle))
        if 0 < len(separator) <= k:
            batches.append(separator)
        stats.record(depth, "cycle", len(batches))
        for batch in batches:
            sub = _solve_general(g.remove_vertices(batch), k - len(batch),
                                 depth + 1, stats)
            if sub is not None:
                return sub | batch
        return None

    # clean but not ripe: solve the chordal problem inside the three-vertex
    # window that contains the offending big AT, then recurse
    region_at = clean.region_big_at
    window = _window_containing(g, clean, region_at.vertex_set())
    stats.record(depth, "ripen", 1)
    ripen = chordal_interval(g.induced_subgraph(window), k, stats=stats,
                             _depth=depth + 1)
    if not ripen.found:
        return None
    fix = ripen.vertices
    sub = _solve_general(g.remove_vertices(fix), k - len(fix), depth + 1, stats)
    if sub is None:
        return None
    return sub | fix


def _branch_small(g: Graph, k: int, depth: int, stats: SearchStats,
                  vertices) -> Optional[frozenset]:
    stats.record(depth, "small", len(vertices))
    for v in vertices:
        sub = _solve_general(g.remove_vertices([v]), k - 1, depth + 1, stats)
        if sub is not None:
            return sub | {v}
    return None


def _window_containing(g: Graph, clean, needed: frozenset) -> set[int]:
    struct = clean.structure
    cycle = struct.cycle
    p = len(cycle)
    for i in range(p):
        window = set()
        for j in (i - 1, i, i + 1):
            window |= g.closed_neighborhood(cycle[j % p])
        window -= struct.dominating
        if needed <= window:
            return window
    raise StructureViolation(
        "big AT near a clean cycle does not fit any three-vertex window",
        witness=tuple(sorted(needed)))


def chordal_interval(g: Graph, k: int, stats: Optional[SearchStats] = None,
                     _depth: int = 0) -> SolveResult:
    """Deletion solver for chordal graphs without small obstructions.

    Preconditions are checked on entry and violations raise
    StructureViolation; the recursion itself only ever deletes vertices,
    which preserves them.
    """
    own_stats = stats is None
    if own_stats:
        stats = SearchStats()
    start = time.perf_counter()
    peo = is_chordal(g)
    if not peo.is_perfect:
        raise StructureViolation(
            "chordal deletion solver fed a non-chordal graph",
            witness=peo.failure_witness)
    obstruction = find_small_obstruction(g)
    if obstruction is not None:
        raise StructureViolation(
            "chordal deletion solver fed a graph with a small obstruction",
            witness=obstruction)
    found = _solve_chordal(g, k, _depth, stats)
    if own_stats:
        stats.elapsed = time.perf_counter() - start
    result = SolveResult(found=found is not None, vertices=found, stats=stats)
    _assert_sound(g, k, result)
    return result


def interval_deletion(g: Graph, k: int,
                      stats: Optional[SearchStats] = None) -> SolveResult:
    """Decide whether deleting at most k vertices can make g interval."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    own_stats = stats is None
    if own_stats:
        stats = SearchStats()
    start = time.perf_counter()
    found = _solve_general(g, k, 0, stats)
    if own_stats:
        stats.elapsed = time.perf_counter() - start
    result = SolveResult(found=found is not None, vertices=found, stats=stats)
    _assert_sound(g, k, result)
    return result


def _assert_sound(g: Graph, k: int, result: SolveResult) -> None:
    if not result.found:
        return
    assert len(result.vertices) <= k
    assert is_interval(g.remove_vertices(result.vertices))


def minimum_deletion(g: Graph, kmax: Optional[int] = None) -> tuple[int, SolveResult]:
    """Smallest k with a yes answer, by increasing-budget driver."""
    limit = g.n if kmax is None else kmax
    stats = SearchStats()
    start = time.perf_counter()
    for k in range(limit + 1):
        result = interval_deletion(g, k, stats=stats)
        if result.found:
            stats.elapsed = time.perf_counter() - start
            return k, result
    stats.elapsed = time.perf_counter() - start
    return limit + 1, SolveResult(found=False, vertices=None, stats=stats)
