"""Interval-graph recognition: chordality via LexBFS and asteroidal-triple search.

A graph is interval exactly when it is chordal and has no asteroidal triple,
so the two checks here are the production-side recognizer.  The oracle module
re-decides intervalness through maximal-clique arrangements so the two paths
stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import ContractViolation
from .graph import Graph, find_chordless_cycle, is_cycle_chordless


@dataclass(frozen=True)
class PeoResult:
    """Outcome of the chordality test.

    ``order`` is the LexBFS visit order.  When the graph is not chordal,
    ``failure_witness`` holds a verified chordless cycle of length >= 4.
    """

    order: tuple[int, ...]
    is_perfect: bool
    failure_witness: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class ATWitness:
    """Three pairwise nonadjacent vertices with mutually avoiding connecting paths.

    ``paths`` maps each pair to a path that stays outside the closed
    neighborhood of the remaining vertex.  Validity is asserted on creation.
    """

    a: int
    b: int
    c: int
    paths: dict = field(compare=False)

    def verify(self, g: Graph) -> None:
        trio = (self.a, self.b, self.c)
        if len(set(trio)) != 3:
            raise ContractViolation("asteroidal triple must have three distinct vertices")
        for u, v in combinations(trio, 2):
            if g.has_edge(u, v):
                raise ContractViolation(f"triple vertices {u},{v} are adjacent")
        for (u, v), path in self.paths.items():
            other = (set(trio) - {u, v}).pop()
            banned = g.closed_neighborhood(other)
            if path[0] != u or path[-1] != v:
                raise ContractViolation("witness path endpoints do not match its pair")
            for x, y in zip(path, path[1:]):
                if not g.has_edge(x, y):
                    raise ContractViolation(f"witness path edge ({x},{y}) missing")
            if any(x in banned for x in path):
                raise ContractViolation(
                    f"witness path for ({u},{v}) enters the neighborhood of {other}")

    def vertex_set(self) -> set[int]:
        out = {self.a, self.b, self.c}
        for path in self.paths.values():
            out.update(path)
        return out


def lexbfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order; ties broken toward the smallest id."""
    order = []
    labels: dict[int, list[int]] = {v: [] for v in g.vertices}
    remaining = set(g.vertices)
    step = g.n
    while remaining:
        v = max(remaining, key=lambda u: (labels[u], -u))
        remaining.discard(v)
        order.append(v)
        for u in g.neighborhood(v):
            if u in remaining:
                labels[u].append(step)
        step -= 1
    return order


def is_chordal(g: Graph) -> PeoResult:
    """Chordality test; extracts a canonical chordless cycle on failure."""
    order = lexbfs_order(g)
    index = {v: i for i, v in enumerate(order)}
    ok = True
    for v in order:
        earlier = [u for u in g.neighborhood(v) if index[u] < index[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: index[u])
        parent_nbrs = g.neighborhood(parent)
        for u in earlier:
            if u != parent and u not in parent_nbrs:
                ok = False
                break
        if not ok:
            break
    if ok:
        return PeoResult(order=tuple(order), is_perfect=True)
    witness = find_chordless_cycle(g, 4)
    assert witness is not None and is_cycle_chordless(g, witness)
    return PeoResult(order=tuple(order), is_perfect=False,
                     failure_witness=tuple(witness))


def _avoidance_masks(g: Graph) -> list[int]:
    """For each position z: bitset of vertices outside N[z]."""
    full = g.full_mask
    return [full & ~(g.adj_mask_pos(p) | (1 << p)) for p in range(g.n)]


def iter_at_witnesses(g: Graph):
    """Yield asteroidal-triple witnesses in lexicographic order of original ids.

    For each candidate third vertex the components of the graph minus its
    closed neighborhood are labeled once, so the triple scan itself is cheap;
    witness paths are only extracted for triples that actually qualify.
    """
    n = g.n
    if n < 3:
        return
    avoid = _avoidance_masks(g)
    comp_label: list[dict[int, int]] = []
    for z in range(n):
        labels: dict[int, int] = {}
        for idx, comp in enumerate(g.components(avoid[z])):
            for p in g.positions(comp):
                labels[p] = idx
        comp_label.append(labels)

    ids = g.vertices
    for pa, pb, pc in combinations(range(n), 3):
        if (g.adj_mask_pos(pa) >> pb & 1) or (g.adj_mask_pos(pa) >> pc & 1) \
                or (g.adj_mask_pos(pb) >> pc & 1):
            continue
        lc = comp_label[pc]
        if lc.get(pa, -1) != lc.get(pb, -2):
            continue
        lb = comp_label[pb]
        if lb.get(pa, -1) != lb.get(pc, -2):
            continue
        la = comp_label[pa]
        if la.get(pb, -1) != la.get(pc, -2):
            continue
        a, b, c = ids[pa], ids[pb], ids[pc]
        paths = {
            (a, b): g.shortest_path(a, b, avoid[pc]),
            (a, c): g.shortest_path(a, c, avoid[pb]),
            (b, c): g.shortest_path(b, c, avoid[pa]),
        }
        witness = ATWitness(a=a, b=b, c=c, paths=paths)
        witness.verify(g)
        yield witness


def find_at(g: Graph) -> Optional[ATWitness]:
    """First asteroidal triple in lexicographic order of original ids, or None."""
    return next(iter_at_witnesses(g), None)


def is_interval(g: Graph) -> bool:
    """Interval = chordal and asteroidal-triple-free."""
    peo = is_chordal(g)
    if not peo.is_perfect:
        return False
    at = find_at(g)
    if at is None:
        return True
    return False
