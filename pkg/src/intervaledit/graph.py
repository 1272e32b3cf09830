"""Immutable undirected graph with stable vertex labels and bitset adjacency.

Vertices keep their original integer ids across induced-subgraph and
edge-addition operations, so solutions computed on shrunken graphs report
in the caller's id space.  Internally each vertex maps to a dense position
and neighborhoods are Python ints used as bitsets, which keeps the hot
set-intersection loops cheap.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import ContractViolation, NoSeparator


class Graph:
    """Simple undirected graph; immutable after construction."""

    __slots__ = ("_ids", "_pos", "_adj", "_full")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        ids = tuple(sorted(set(int(v) for v in vertices)))
        self._ids = ids
        self._pos = {v: i for i, v in enumerate(ids)}
        adj = [0] * len(ids)
        for u, v in edges:
            if u == v:
                raise ContractViolation(f"self-loop at vertex {u}")
            iu = self._pos.get(u)
            iv = self._pos.get(v)
            if iu is None or iv is None:
                raise ContractViolation(f"edge ({u},{v}) uses unknown vertex")
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
        self._adj = adj
        self._full = (1 << len(ids)) - 1

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on vertices 0..n-1 with the given edge list."""
        return cls(range(n), edges)

    # -- basic accessors -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._ids)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._ids

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, v in enumerate(self._ids):
            mask = self._adj[i] >> (i + 1)
            j = i + 1
            while mask:
                if mask & 1:
                    yield (v, self._ids[j])
                mask >>= 1
                j += 1

    def has_edge(self, u: int, v: int) -> bool:
        iu = self._require(u)
        return bool(self._adj[iu] >> self._require(v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[self._require(v)].bit_count()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._ids == other._ids and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._ids, tuple(self._adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def _require(self, v: int) -> int:
        pos = self._pos.get(v)
        if pos is None:
            raise ContractViolation(f"unknown vertex {v}")
        return pos

    # -- bitset plumbing (used by the algorithm modules) -----------------------

    @property
    def full_mask(self) -> int:
        return self._full

    def adj_mask(self, v: int) -> int:
        """Open neighborhood of v as a position bitset."""
        return self._adj[self._require(v)]

    def adj_mask_pos(self, pos: int) -> int:
        return self._adj[pos]

    def mask_of(self, ids: Iterable[int]) -> int:
        mask = 0
        for v in ids:
            mask |= 1 << self._require(v)
        return mask

    def ids_of(self, mask: int) -> list[int]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(self._ids[i])
            mask >>= 1
            i += 1
        return out

    def positions(self, mask: int) -> Iterator[int]:
        i = 0
        while mask:
            if mask & 1:
                yield i
            mask >>= 1
            i += 1

    def id_at(self, pos: int) -> int:
        return self._ids[pos]

    def pos_of(self, v: int) -> int:
        return self._require(v)

    # -- neighborhoods ----------------------------------------------------------

    def neighborhood(self, v: int) -> set[int]:
        """N(v): open neighborhood in original ids."""
        return set(self.ids_of(self.adj_mask(v)))

    def closed_neighborhood(self, v: int) -> set[int]:
        """N[v] = N(v) plus v itself."""
        out = self.neighborhood(v)
        out.add(v)
        return out

    def closed_neighborhood_of_set(self, vs: Iterable[int]) -> set[int]:
        """N[S]: union of closed neighborhoods."""
        mask = 0
        for v in vs:
            pos = self._require(v)
            mask |= self._adj[pos] | (1 << pos)
        return set(self.ids_of(mask))

    # -- derived graphs ----------------------------------------------------------

    def induced_subgraph(self, keep: Iterable[int]) -> "Graph":
        """Subgraph induced by ``keep``; original ids survive."""
        keep_ids = sorted(set(keep))
        keep_mask = self.mask_of(keep_ids)
        sub = Graph.__new__(Graph)
        sub._ids = tuple(keep_ids)
        sub._pos = {v: i for i, v in enumerate(keep_ids)}
        adj = []
        for v in keep_ids:
            restricted = self._adj[self._pos[v]] & keep_mask
            # repack positions into the dense indexing of the subgraph
            packed = 0
            for j, u in enumerate(keep_ids):
                if restricted >> self._pos[u] & 1:
                    packed |= 1 << j
            adj.append(packed)
        sub._adj = adj
        sub._full = (1 << len(keep_ids)) - 1
        return sub

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        drop_set = set(drop)
        for v in drop_set:
            self._require(v)
        return self.induced_subgraph(v for v in self._ids if v not in drop_set)

    def add_edges(self, fills: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the fill edges added; raises if a fill already exists."""
        new_edges = list(self.edges())
        seen = set()
        for u, v in fills:
            if self.has_edge(u, v):
                raise ContractViolation(f"fill ({u},{v}) is already an edge")
            if u == v:
                raise ContractViolation(f"fill ({u},{v}) is a self-loop")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ContractViolation(f"duplicate fill ({u},{v})")
            seen.add(key)
            new_edges.append(key)
        return Graph(self._ids, new_edges)

    # -- traversal helpers --------------------------------------------------------

    def component_mask(self, start_pos: int, allowed: int) -> int:
        """Positions reachable from start_pos inside the ``allowed`` bitset."""
        seen = 1 << start_pos
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            i = 0
            while m:
                if m & 1:
                    nxt |= self._adj[i]
                m >>= 1
                i += 1
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def components(self, allowed: Optional[int] = None) -> list[int]:
        """Connected components (as position bitsets) of the induced bitset."""
        if allowed is None:
            allowed = self._full
        out = []
        rest = allowed
        while rest:
            start = (rest & -rest).bit_length() - 1
            comp = self.component_mask(start, allowed)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected_between(self, u: int, v: int, allowed: int) -> bool:
        pu, pv = self._require(u), self._require(v)
        if not (allowed >> pu & 1) or not (allowed >> pv & 1):
            return False
        return bool(self.component_mask(pu, allowed) >> pv & 1)

    def shortest_path(self, u: int, v: int, allowed: int) -> Optional[list[int]]:
        """Shortest u-v path by BFS restricted to the ``allowed`` position bitset.

        Deterministic: the parent of each vertex is the smallest-position
        vertex that first reaches it.  Returns original ids, or None.
        """
        pu, pv = self._require(u), self._require(v)
        if not (allowed >> pu & 1) or not (allowed >> pv & 1):
            return None
        if pu == pv:
            return [u]
        parent = {pu: -1}
        queue = deque([pu])
        while queue:
            cur = queue.popleft()
            mask = self._adj[cur] & allowed
            i = 0
            while mask:
                if mask & 1 and i not in parent:
                    parent[i] = cur
                    if i == pv:
                        path = [i]
                        while path[-1] != pu:
                            path.append(parent[path[-1]])
                        return [self._ids[p] for p in reversed(path)]
                    queue.append(i)
                mask >>= 1
                i += 1
        return None


# -- minimum vertex separator ----------------------------------------------------


def minimum_vertex_separator(g: Graph, s: int, t: int, forbidden: Iterable[int] = ()) -> set[int]:
    """Minimum set of vertices (outside forbidden, s and t) disconnecting s from t.

    Unit-vertex-capacity max-flow with vertex splitting; the returned cut is
    the one closest to s (vertices whose in-copy is residual-reachable from s
    but whose out-copy is not), which makes the answer deterministic.
    """
    forbidden_set = set(forbidden)
    if s == t:
        raise ContractViolation("separator endpoints must differ")
    if s in forbidden_set or t in forbidden_set:
        raise ContractViolation("separator endpoints may not be forbidden")
    g._require(s)
    g._require(t)
    alive = [v for v in g.vertices if v not in forbidden_set]
    h = g.induced_subgraph(alive)
    if h.has_edge(s, t):
        raise NoSeparator(f"{s} and {t} are adjacent; no vertex separator exists")

    # node 2i = in-copy, 2i+1 = out-copy of position i; s/t are not split
    pos_s, pos_t = h._pos[s], h._pos[t]

    def node_in(p):
        return 2 * p

    def node_out(p):
        return 2 * p + 1 if p not in (pos_s, pos_t) else 2 * p

    residual: dict[int, dict[int, int]] = {}

    def add_arc(a, b, c):
        residual.setdefault(a, {})[b] = residual.get(a, {}).get(b, 0) + c
        residual.setdefault(b, {}).setdefault(a, 0)

    big = h.n + 1
    for p in range(h.n):
        if p not in (pos_s, pos_t):
            add_arc(node_in(p), node_out(p), 1)
        mask = h._adj[p]
        q = 0
        while mask:
            if mask & 1:
                add_arc(node_out(p), node_in(q), big)
            mask >>= 1
            q += 1

    src, dst = node_out(pos_s), node_in(pos_t)

    def bfs_reach():
        parent = {src: None}
        queue = deque([src])
        while queue:
            cur = queue.popleft()
            for nxt in sorted(residual.get(cur, ())):
                if nxt not in parent and residual[cur][nxt] > 0:
                    parent[nxt] = cur
                    if nxt == dst:
                        return parent
                    queue.append(nxt)
        return parent

    while True:
        parent = bfs_reach()
        if dst not in parent:
            break
        node = dst
        while parent[node] is not None:
            prev = parent[node]
            residual[prev][node] -= 1
            residual[node][prev] += 1
            node = prev

    reach = set(bfs_reach())
    cut = set()
    for p in range(h.n):
        if p in (pos_s, pos_t):
            continue
        if 2 * p in reach and 2 * p + 1 not in reach:
            cut.add(h._ids[p])
    return cut


# -- chordless cycles --------------------------------------------------------------


def _shortest_hole_length(g: Graph) -> Optional[int]:
    """Length of a shortest chordless cycle of length >= 4, or None.

    Every hole through a vertex u with cycle-neighbors x,y (nonadjacent) shows
    up as x,...,y shortest path avoiding N[u] \\ {x,y}; scanning all seeds and
    taking the minimum is exact.
    """
    best = None
    full = g.full_mask
    for pu in range(g.n):
        nbrs = list(g.positions(g._adj[pu]))
        if len(nbrs) < 2:
            continue
        closed_u = g._adj[pu] | (1 << pu)
        for px, py in combinations(nbrs, 2):
            if g._adj[px] >> py & 1:
                continue
            allowed = (full & ~closed_u) | (1 << px) | (1 << py)
            length = _bfs_dist(g, px, py, allowed, None if best is None else best - 2)
            if length is not None:
                cand = length + 2
                if best is None or cand < best:
                    best = cand
                    if best == 4:
                        return 4
    return best


def _bfs_dist(g: Graph, src: int, dst: int, allowed: int, limit: Optional[int]) -> Optional[int]:
    if src == dst:
        return 0
    seen = 1 << src
    frontier = seen
    dist = 0
    while frontier:
        dist += 1
        if limit is not None and dist > limit:
            return None
        nxt = 0
        m = frontier
        i = 0
        while m:
            if m & 1:
                nxt |= g._adj[i]
            m >>= 1
            i += 1
        frontier = nxt & allowed & ~seen
        if frontier >> dst & 1:
            return dist
        seen |= frontier
    return None


def _canonical_cycle_of_length(g: Graph, length: int) -> Optional[list[int]]:
    """Lexicographically smallest chordless cycle of exactly ``length`` vertices.

    DFS over induced paths rooted at each vertex in ascending id order; the
    first completed cycle under ascending extension is the canonical one
    (sequence starts at its minimum vertex).
    """
    n = g.n
    if length > n:
        return None
    for root in range(n):
        root_bit = 1 << root
        below = root_bit - 1  # positions smaller than root are excluded
        root_adj = g._adj[root]

        # path holds positions; forbid holds N[path[:-1]] plus vertices <= root
        def extend(path: list[int], forbid: int, visited: int) -> Optional[list[int]]:
            last = path[-1]
            depth = len(path)
            cand = g._adj[last] & ~forbid & ~visited & ~below & ~root_bit
            if depth < length - 1:
                # interior vertices must stay off the root's neighborhood
                cand &= ~root_adj
            else:
                cand &= root_adj
            i = 0
            m = cand
            while m:
                if m & 1:
                    if depth == length - 1:
                        return path + [i]
                    res = extend(path + [i], forbid | g._adj[last] | (1 << last),
                                 visited | (1 << i))
                    if res is not None:
                        return res
                m >>= 1
                i += 1
            return None

        first = g._adj[root] & ~below
        i = 0
        m = first
        while m:
            if m & 1:
                res = extend([root, i], root_bit, root_bit | (1 << i))
                if res is not None:
                    return [g._ids[p] for p in res]
            m >>= 1
            i += 1
    return None


def find_chordless_cycle(g: Graph, min_len: int = 4) -> Optional[list[int]]:
    """Shortest chordless cycle with at least ``min_len`` vertices, canonical form.

    Among shortest such cycles the lexicographically smallest vertex sequence
    (starting at its minimum vertex) is returned.  None if no induced cycle of
    the requested length exists.
    """
    if min_len < 4:
        raise ContractViolation("min_len must be at least 4")
    shortest = _shortest_hole_length(g)
    if shortest is None:
        return None
    if shortest >= min_len:
        cycle = _canonical_cycle_of_length(g, shortest)
        assert cycle is not None
        return cycle
    for length in range(min_len, g.n + 1):
        cycle = _canonical_cycle_of_length(g, length)
        if cycle is not None:
            return cycle
    return None


def is_cycle_chordless(g: Graph, cycle: list[int]) -> bool:
    """Check that the sequence is a cycle of g and induces no chord."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i, v in enumerate(cycle):
        for j in range(i + 1, k):
            u = cycle[j]
            adjacent_on_cycle = (j == i + 1) or (i == 0 and j == k - 1)
            if g.has_edge(v, u) != adjacent_on_cycle:
                return False
    return True
