"""Bounded-search-tree solver for k-interval completion.

Holes are branched over all minimal triangulations (each spends length-3
fills).  Small ATs branch over single fill edges inside the witness that
break its asteroidal triple.  Around a ripe big AT the solver tries the two
cross fills, the long fills from the shallow vertex to the near ends of the
path, the two whole-side batches, and finally the batch connecting the
shallow component to a minimum middle separator.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .deletion import SearchStats
from .errors import ContractViolation
from .graph import Graph, minimum_vertex_separator
from .obstructions import (
    SMALL_AT_BOUND,
    BigAT,
    _induces_cycle,
    shrink_to_minimal,
)
from .recognition import find_at, is_chordal, is_interval
from .structure import find_ripe_at

BATCH_MIN_PATH = 13

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -- fill-edge taxonomy -----------------------------------------------------------


@dataclass(frozen=True)
class FillClass:
    """Classification of a non-edge relative to a big AT.

    ``long``: shallow vertex to any path vertex (including both ends; for a
    type-2 witness the shallow vertex misses a and b too, so those count).
    ``cross``: end vertex to the opposite center.  ``bottom``: chords among
    the extended path a,v_1..v_p,b, including the span a-b.
    """

    category: str           # "long" | "cross" | "bottom"
    edge: Edge


def classify_fill(at: BigAT, u: int, v: int) -> Optional[FillClass]:
    edge = _norm(u, v)
    chain = at.full_path()
    chain_set = set(chain)
    if at.c in edge:
        other = edge[0] if edge[1] == at.c else edge[1]
        if other in chain_set:
            return FillClass(category="long", edge=edge)
        return None
    if at.kind == 1:
        cross = {_norm(at.a, at.u), _norm(at.b, at.u)}
    else:
        cross = {_norm(at.a, at.w), _norm(at.b, at.u)}
    if edge in cross:
        return FillClass(category="cross", edge=edge)
    if edge[0] in chain_set and edge[1] in chain_set:
        return FillClass(category="bottom", edge=edge)
    return None


# -- minimal triangulations of a chordless cycle -----------------------------------


def enumerate_cycle_triangulations(cycle: Iterable[int]) -> list[frozenset]:
    """All minimal triangulations (polygon triangulations) of a chordless cycle.

    Each has exactly len-3 chords; recursion anchors a triangle on the edge
    closing the cycle and walks apexes in ascending position, so the order
    is deterministic.
    """
    cyc = list(cycle)
    n = len(cyc)
    if n < 4:
        raise ContractViolation("triangulation needs a cycle of length at least 4")

    def poly(i: int, j: int) -> list[list[Edge]]:
        # sub-polygon cyc[i..j] closed by the (possibly virtual) edge (i, j)
        if j - i < 2:
            return [[]]
        out = []
        for m in range(i + 1, j):
            left_chord = [] if m == i + 1 else [_norm(cyc[i], cyc[m])]
            right_chord = [] if m == j - 1 else [_norm(cyc[m], cyc[j])]
            for left in poly(i, m):
                for right in poly(m, j):
                    out.append(left_chord + right_chord + left + right)
        return out

    return [frozenset(chords) for chords in poly(0, n - 1)]


# -- solver -------------------------------------------------------------------------


@dataclass(frozen=True)
class CompletionResult:
    found: bool
    fills: Optional[frozenset]
    stats: SearchStats

    @property
    def outcome(self) -> str:
        return "yes" if self.found else "no"


def _small_at_fill_candidates(g: Graph, witness: frozenset) -> list[Edge]:
    """Non-edges inside a small AT witness whose addition kills its triple.

    Candidates that leave an asteroidal triple in the witness are filtered
    out; if that filters everything (no single edge settles the witness) the
    unfiltered list is used so the branching stays exhaustive.
    """
    inside = sorted(witness)
    non_edges = [(u, v) for u, v in combinations(inside, 2) if not g.has_edge(u, v)]
    sub = g.induced_subgraph(witness)
    good = [e for e in non_edges if find_at(sub.add_edges([e])) is None]
    return good if good else non_edges


def _long_fill_targets(at: BigAT) -> list[int]:
    p = at.p
    near = [at.path[i] for i in range(min(6, p))]
    far = [at.path[i] for i in range(max(p - 6, 0), p)]
    out = []
    for v in near + far:
        if v not in out:
            out.append(v)
    if at.kind == 2:
        return [at.a] + out + [at.b]
    return out


def _shallow_component(g: Graph, at: BigAT) -> set[int]:
    """Component of the shallow vertex among center-neighbors with no path contact."""
    chain = at.full_path()
    bad = 0
    for v in chain:
        bad |= g.adj_mask(v) | g.mask_of([v])
    pool_mask = g.adj_mask(at.u) & ~bad
    pool_mask |= g.mask_of([at.c])
    comp = g.component_mask(g.pos_of(at.c), pool_mask)
    return set(g.ids_of(comp & pool_mask))


def _solve(g: Graph, k: int, depth: int, stats: SearchStats) -> Optional[frozenset]:
    stats.enter(depth)
    peo = is_chordal(g)
    if not peo.is_perfect:
        if k <= 0:
            stats.record(depth, "leaf", 0)
            return None
        hole = list(peo.failure_witness)
        spend = len(hole) - 3
        families = enumerate_cycle_triangulations(hole) if spend <= k else []
        stats.record(depth, "triangulation", len(families))
        for chords in families:
            sub = _solve(g.add_edges(chords), k - spend, depth + 1, stats)
            if sub is not None:
                return sub | chords
        return None

    witness = find_at(g)
    if witness is None:
        stats.record(depth, "leaf", 0)
        return frozenset()
    if k <= 0:
        stats.record(depth, "leaf", 0)
        return None

    minimal = shrink_to_minimal(g, witness.vertex_set())
    if len(minimal) <= SMALL_AT_BOUND and not _induces_cycle(g, minimal):
        candidates = _small_at_fill_candidates(g, minimal)
        stats.record(depth, "small", len(candidates))
        for edge in candidates:
            sub = _solve(g.add_edges([edge]), k - 1, depth + 1, stats)
            if sub is not None:
                return sub | {edge}
        return None

    ripe = find_ripe_at(g, k)
    if ripe is None:
        stats.record(depth, "big_at", 0)
        return None
    at = ripe.at

    cross = [_norm(at.a, at.u), _norm(at.b, at.u)] if at.kind == 1 \
        else [_norm(at.a, at.w), _norm(at.b, at.u)]
    singles = cross + [_norm(at.c, target) for target in _long_fill_targets(at)]

    side_a = frozenset({_norm(at.a, v) for v in at.path[1:]} | {_norm(at.a, at.b)})
    side_b = frozenset({_norm(at.b, v) for v in at.path[:-1]} | {_norm(at.a, at.b)})
    batches = [batch for batch in (side_a, side_b) if len(batch) <= k]
    if at.p >= BATCH_MIN_PATH:
        separator = minimum_vertex_separator(
            g, at.path[5], at.path[at.p - 6], g.neighborhood(at.c))
        component = _shallow_component(g, at)
        connect = frozenset(
            _norm(c2, x) for c2 in component for x in separator
            if not g.has_edge(c2, x))
        if 0 < len(connect) <= k:
            batches.append(connect)

    stats.record(depth, "big_at", len(singles) + len(batches))
    for edge in singles:
        sub = _solve(g.add_edges([edge]), k - 1, depth + 1, stats)
        if sub is not None:
            return sub | {edge}
    for batch in batches:
        sub = _solve(g.add_edges(batch), k - len(batch), depth + 1, stats)
        if sub is not None:
            return sub | batch
    return None


def interval_completion(g: Graph, k: int,
                        stats: Optional[SearchStats] = None) -> CompletionResult:
    """Decide whether adding at most k edges can make g interval."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    own_stats = stats is None
    if own_stats:
        stats = SearchStats()
    start = time.perf_counter()
    found = _solve(g, k, 0, stats)
    if own_stats:
        stats.elapsed = time.perf_counter() - start
    result = CompletionResult(found=found is not None, fills=found, stats=stats)
    if result.found:
        assert len(result.fills) <= k
        for u, v in result.fills:
            assert not g.has_edge(u, v)
        assert is_interval(g.add_edges(result.fills))
    return result


def minimum_completion(g: Graph, kmax: Optional[int] = None) -> tuple[int, CompletionResult]:
    """Smallest k with a yes answer, by increasing-budget driver."""
    limit = (g.n * (g.n - 1)) // 2 if kmax is None else kmax
    stats = SearchStats()
    start = time.perf_counter()
    for k in range(limit + 1):
        result = interval_completion(g, k, stats=stats)
        if result.found:
            stats.elapsed = time.perf_counter() - start
            return k, result
    stats.elapsed = time.perf_counter() - start
    return limit + 1, CompletionResult(found=False, fills=None, stats=stats)
