"""Long-cycle machinery for the non-chordal case.

A shortest long hole, its neighborhood classification (dominating vertices
and the at-most-three-consecutive families), the descent to a clean cycle,
and the exact minimum cycle-separator used by the deletion branching.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from .errors import StructureViolation, WorkBoundExceeded
from .graph import Graph, find_chordless_cycle, is_cycle_chordless
from .obstructions import find_minimum_big_at

MIN_LONG_CYCLE = 9
HITTING_SET_WORK_BOUND = 2_000_000


@dataclass(frozen=True)
class CycleStructure:
    """A long chordless cycle with its neighborhood classification.

    ``single[i]`` are vertices adjacent to cycle position i only,
    ``double[i]`` to positions i,i+1 only, ``triple[i]`` to i,i+1,i+2 only
    (indices mod the cycle length).  ``dominating`` are adjacent to every
    cycle vertex.
    """

    host: Graph
    cycle: tuple[int, ...]
    dominating: frozenset
    single: dict = field(compare=False)
    double: dict = field(compare=False)
    triple: dict = field(compare=False)

    def closed_neighborhood(self) -> set[int]:
        return self.host.closed_neighborhood_of_set(self.cycle)

    def region_without_dominating(self) -> set[int]:
        return self.closed_neighborhood() - self.dominating


@dataclass(frozen=True)
class CleanCycle:
    """A clean cycle; ripe when its neighborhood region hides no big AT.

    The long cycle itself is an asteroidal triple in the generic sense, so
    ripeness is decided against the big-AT templates: holes in the region are
    the separator's job, template ATs force the ripening step instead.
    """

    structure: CycleStructure
    region_big_at: object = None     # Optional[BigAT]

    @property
    def ripe(self) -> bool:
        return self.region_big_at is None

    @property
    def cycle(self) -> tuple[int, ...]:
        return self.structure.cycle


def classify_cycle(g: Graph, cycle) -> CycleStructure:
    """Partition the cycle's neighbors; violations mean small obstructions remain."""
    cycle = tuple(cycle)
    p = len(cycle)
    if p < MIN_LONG_CYCLE:
        raise StructureViolation(f"cycle of length {p} is below the supported minimum")
    if not is_cycle_chordless(g, list(cycle)):
        raise StructureViolation("classification needs a chordless cycle")
    on_cycle = set(cycle)
    dominating = set()
    single: dict[int, set[int]] = {i: set() for i in range(p)}
    double: dict[int, set[int]] = {i: set() for i in range(p)}
    triple: dict[int, set[int]] = {i: set() for i in range(p)}
    for x in g.vertices:
        if x in on_cycle:
            continue
        hits = [i for i, v in enumerate(cycle) if g.has_edge(x, v)]
        if not hits:
            continue
        if len(hits) == p:
            dominating.add(x)
            continue
        if len(hits) > 3:
            raise StructureViolation(
                f"vertex {x} touches {len(hits)} cycle vertices; expected all or "
                "at most three consecutive", witness=x)
        if not _cyclically_consecutive(hits, p):
            raise StructureViolation(
                f"vertex {x} touches non-consecutive cycle positions {hits}",
                witness=x)
        start = _cyclic_start(hits, p)
        if len(hits) == 1:
            single[start].add(x)
        elif len(hits) == 2:
            double[start].add(x)
        else:
            triple[start].add(x)

    struct = CycleStructure(
        host=g, cycle=cycle, dominating=frozenset(dominating),
        single={k: frozenset(v) for k, v in single.items()},
        double={k: frozenset(v) for k, v in double.items()},
        triple={k: frozenset(v) for k, v in triple.items()})
    closed = struct.closed_neighborhood()
    for x in dominating:
        for y in closed:
            if y != x and not g.has_edge(x, y):
                raise StructureViolation(
                    f"dominating vertex {x} misses {y} inside the cycle's "
                    "closed neighborhood", witness=(x, y))
    return struct


def _cyclically_consecutive(hits: list[int], p: int) -> bool:
    if len(hits) == 1:
        return True
    gaps = sorted(hits)
    # consecutive on a cycle: all gaps 1 except possibly one wrap gap
    diffs = [(gaps[(i + 1) % len(gaps)] - gaps[i]) % p for i in range(len(gaps))]
    return sorted(diffs)[:-1] == [1] * (len(gaps) - 1)


def _cyclic_start(hits: list[int], p: int) -> int:
    if len(hits) == 1:
        return hits[0]
    hit_set = set(hits)
    for i in hits:
        if (i - 1) % p not in hit_set:
            return i
    return min(hits)


def _dirty_position(struct: CycleStructure) -> Optional[int]:
    """First cycle position whose open neighborhood (off the cycle) hides a hole."""
    g = struct.host
    on_cycle = set(struct.cycle)
    for i, v in enumerate(struct.cycle):
        region = [x for x in g.neighborhood(v) if x not in on_cycle]
        if len(region) >= 4:
            sub = g.induced_subgraph(region)
            if find_chordless_cycle(sub, 4) is not None:
                return i
    return None


def find_clean_cycle(g: Graph) -> Optional[CleanCycle]:
    """Shortest hole, descended until no cycle-vertex neighborhood hides a hole.

    When the current candidate is dirty, a shortest hole inside one of its
    single/double families replaces it.  Bounded by n iterations.
    """
    current = find_chordless_cycle(g, 4)
    if current is None:
        return None
    if len(current) < MIN_LONG_CYCLE:
        raise StructureViolation(
            f"shortest hole has length {len(current)}; short holes must be "
            "branched away before cycle machinery runs")
    for _ in range(g.n + 1):
        struct = classify_cycle(g, current)
        if _dirty_position(struct) is None:
            region = struct.region_without_dominating()
            region_at = find_minimum_big_at(g.induced_subgraph(region))
            return CleanCycle(structure=struct, region_big_at=region_at)
        nxt = None
        p = len(struct.cycle)
        for j in range(p):
            for family in (struct.single[j], struct.double[j]):
                if len(family) < 4:
                    continue
                hole = find_chordless_cycle(g.induced_subgraph(family), 4)
                if hole is not None and (nxt is None or len(hole) < len(nxt)):
                    nxt = hole
        if nxt is None:
            raise StructureViolation(
                "dirty cycle but no hole inside any single/double family",
                witness=tuple(current))
        current = nxt
    raise StructureViolation("clean-cycle descent failed to terminate")


def min_cycle_separator(g: Graph, clean: CleanCycle,
                        work_bound: int = HITTING_SET_WORK_BOUND) -> frozenset:
    """Minimum vertex set whose removal (with the dominating set) leaves the
    cycle's closed neighborhood hole-free.

    Exact lazy hitting set: holes of the region are generated as violated
    constraints; candidate sets are enumerated by size and lexicographic
    order, so the result is the lexicographically smallest minimum separator.
    """
    if not clean.ripe:
        raise StructureViolation("cycle separators are only defined for ripe cycles")
    struct = clean.structure
    region = sorted(struct.region_without_dominating())
    region_graph = g.induced_subgraph(region)
    constraints: list[frozenset] = []

    def violated(candidate: frozenset) -> Optional[frozenset]:
        rest = region_graph.remove_vertices(candidate)
        hole = find_chordless_cycle(rest, 4)
        return None if hole is None else frozenset(hole)

    candidate: frozenset = frozenset()
    while True:
        hole = violated(candidate)
        if hole is None:
            return candidate
        constraints.append(hole)
        candidate = _min_hitting_set(constraints, work_bound)


def _min_hitting_set(constraints: list[frozenset], work_bound: int) -> frozenset:
    universe = sorted(set().union(*constraints))
    explored = 0
    for size in range(len(universe) + 1):
        explored += comb(len(universe), size)
        if explored > work_bound:
            raise WorkBoundExceeded(
                f"hitting-set enumeration exceeds {work_bound} candidates")
        for cand in combinations(universe, size):
            cset = set(cand)
            if all(c & cset for c in constraints):
                return frozenset(cand)
    raise AssertionError("the whole universe always hits every constraint")
