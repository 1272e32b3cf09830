"""Shared brute-force oracles and little builders used across the test suite.

Everything here is deliberately naive: these are the independent references
the fast implementations are checked against.
"""

from itertools import combinations, permutations
import random

from intervaledit.graph import Graph


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def long_claw():
    """Star with each edge subdivided once: center 0, middles 1-3, tips 4-6."""
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def net_graph():
    """Triangle 0,1,2 with a pendant on each corner."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def brute_force_separator_size(g, s, t, forbidden=()):
    """Smallest vertex set (outside forbidden, s, t) disconnecting s and t.

    Exhaustive over subsets by increasing size; None if s,t adjacent.
    """
    forbidden = set(forbidden)
    rest = [v for v in g.vertices if v not in forbidden | {s, t}]
    base = g.remove_vertices(forbidden)
    if base.has_edge(s, t):
        return None
    for size in range(len(rest) + 1):
        for cand in combinations(rest, size):
            h = base.remove_vertices(cand)
            allowed = h.full_mask
            if not h.is_connected_between(s, t, allowed):
                return size
    return None


def enumerate_induced_cycles(g, min_len=4):
    """All chordless cycles with >= min_len vertices, as canonical tuples."""
    found = set()
    verts = list(g.vertices)
    n = len(verts)

    def canonical(seq):
        k = len(seq)
        i = seq.index(min(seq))
        fwd = tuple(seq[(i + d) % k] for d in range(k))
        bwd = tuple(seq[(i - d) % k] for d in range(k))
        return min(fwd, bwd)

    def extend(path):
        last = path[-1]
        root = path[0]
        for v in verts:
            if v in path:
                continue
            if not g.has_edge(last, v):
                continue
            # keep the path induced apart from the possible closing edge
            if any(g.has_edge(v, w) for w in path[1:-1]):
                continue
            if g.has_edge(v, root):
                if len(path) + 1 >= min_len:
                    found.add(canonical(path + [v]))
                # adjacent to the root: closing is the only chordless option
            else:
                extend(path + [v])

    for a in verts:
        for b in verts:
            if b > a and g.has_edge(a, b):
                extend([a, b])
    return sorted(found, key=lambda c: (len(c), c))


def brute_force_is_interval(g):
    """Interval test by maximal-clique consecutive arrangement, tiny graphs only."""
    cliques = list(_maximal_cliques(g))
    for order in permutations(range(len(cliques))):
        if _consecutive(cliques, order, g.vertices):
            return True
    return False


def _maximal_cliques(g):
    verts = list(g.vertices)
    n = len(verts)
    if n == 0:
        return
    for size in range(n, 0, -1):
        for cand in combinations(verts, size):
            if all(g.has_edge(u, v) for u, v in combinations(cand, 2)):
                others = [v for v in verts if v not in cand]
                if not any(all(g.has_edge(o, c) for c in cand) for o in others):
                    yield frozenset(cand)


def _consecutive(cliques, order, vertices):
    for v in vertices:
        hits = [i for i, idx in enumerate(order) if v in cliques[idx]]
        if hits and hits != list(range(hits[0], hits[-1] + 1)):
            return False
    return True
