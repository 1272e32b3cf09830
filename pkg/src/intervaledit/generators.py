"""Deterministic instance families: obstruction gadgets and random graphs.

The two gadget families realize the templates the big-AT machinery branches
on; the nested family chains them so that the ripe-AT descent has real work
to do.  Everything takes an explicit seed where randomness is involved and is
reproducible byte-for-byte.
"""

from __future__ import annotations

import random

from .errors import ContractViolation
from .graph import Graph


def gadget_type1(p: int) -> Graph:
    """Long path a,v1..vp,b with a center u adjacent to every v_i and a pendant c on u.

    Vertex layout: a=0, v_i=i (1..p), b=p+1, u=p+2, c=p+3.
    """
    if p < 7:
        raise ContractViolation("type-1 gadget needs a path with at least 7 interior vertices")
    a, b, u, c = 0, p + 1, p + 2, p + 3
    edges = [(a, 1), (p, b), (u, c)]
    edges += [(i, i + 1) for i in range(1, p)]
    edges += [(u, i) for i in range(1, p + 1)]
    return Graph(range(p + 4), edges)


def gadget_type2(p: int) -> Graph:
    """Two-center variant: u carries side a, w carries side b, c hangs on both.

    Vertex layout: a=0, v_i=i (1..p), b=p+1, u=p+2, w=p+3, c=p+4.
    The centers are adjacent to each other; without that edge the four
    vertices c,u,v1,w would induce a 4-cycle and the gadget would not be
    chordal.
    """
    if p < 7:
        raise ContractViolation("type-2 gadget needs a path with at least 7 interior vertices")
    a, b, u, w, c = 0, p + 1, p + 2, p + 3, p + 4
    edges = [(a, u), (b, w), (c, u), (c, w), (u, w), (a, 1), (p, b)]
    edges += [(i, i + 1) for i in range(1, p)]
    edges += [(u, i) for i in range(1, p + 1)]
    edges += [(w, i) for i in range(1, p + 1)]
    return Graph(range(p + 5), edges)


def type1_roles(p: int) -> dict:
    """Vertex roles for the type-1 layout above."""
    return {"a": 0, "b": p + 1, "u": p + 2, "c": p + 3,
            "path": list(range(1, p + 1))}


def type2_roles(p: int) -> dict:
    return {"a": 0, "b": p + 1, "u": p + 2, "w": p + 3, "c": p + 4,
            "path": list(range(1, p + 1))}


def long_cycle(length: int) -> Graph:
    if length < 3:
        raise ContractViolation("cycle length must be at least 3")
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def nested_gadget(p: int, depth: int) -> Graph:
    """Chain of ``depth`` type-1 gadgets, each planted inside the previous one's
    inner region.

    Level l uses interior length p+l, so the outermost gadget is the unique
    minimum and the ripe-AT descent walks the chain.  Every vertex of level
    l+1 is adjacent to the level-l anchor pair (the middle path vertex and the
    center) and transitively to all earlier anchors; those adjacencies are
    forced by the structure theory, and dropping any of them would plant a
    small obstruction.
    """
    if depth < 1:
        raise ContractViolation("depth must be at least 1")
    if p < 7:
        raise ContractViolation("p must be at least 7")
    edges: list[tuple[int, int]] = []
    anchors: list[int] = []
    offset = 0
    for level in range(depth):
        pl = p + level
        a, b, u, c = offset, offset + pl + 1, offset + pl + 2, offset + pl + 3
        path = [offset + i for i in range(1, pl + 1)]
        edges += [(a, path[0]), (path[-1], b), (u, c)]
        edges += [(x, y) for x, y in zip(path, path[1:])]
        edges += [(u, v) for v in path]
        level_vertices = [a, b, u, c] + path
        for anchor in anchors:
            edges += [(anchor, v) for v in level_vertices]
        mid = path[len(path) // 2]
        anchors = anchors + [mid, u]
        offset += pl + 4
    return Graph(range(offset), edges)


def random_chordal(n: int, seed: int, clique_bias: float = 0.6) -> Graph:
    """Random chordal graph built along a construction order.

    Each new vertex attaches to a clique grown greedily inside the
    neighborhood of a random existing vertex, so it is simplicial at
    insertion time.
    """
    if n < 1:
        raise ContractViolation("n must be positive")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    adj: dict[int, set[int]] = {0: set()}
    for v in range(1, n):
        anchor = rng.randrange(v)
        clique = [anchor]
        candidates = sorted(adj[anchor])
        rng.shuffle(candidates)
        for cand in candidates:
            if rng.random() < clique_bias and all(cand in adj[x] or cand == x for x in clique):
                clique.append(cand)
        attach = [x for x in clique if rng.random() < 0.8] or [clique[0]]
        adj[v] = set()
        for x in attach:
            edges.append((x, v))
            adj[v].add(x)
            adj[x].add(v)
    return Graph(range(n), edges)


def gnp(n: int, prob: float, seed: int) -> Graph:
    if not 0 <= prob <= 1:
        raise ContractViolation("edge probability must lie in [0,1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < prob]
    return Graph(range(n), edges)


def gadget_in_chordal_host(p: int, host_size: int) -> Graph:
    """Type-1 gadget with a chordal tail of ``host_size`` extra vertices hung off a.

    The tail is a path, which keeps the composite chordal while the solver
    still has to reason past the extra vertices.
    """
    g = gadget_type1(p)
    base = g.n
    edges = list(g.edges())
    prev = 0  # the gadget's a
    for i in range(host_size):
        edges.append((prev, base + i))
        prev = base + i
    return Graph(range(base + host_size), edges)
