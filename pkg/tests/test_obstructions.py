import random
import time

import pytest

from intervaledit.errors import ContractViolation
from intervaledit.generators import (
    gadget_in_chordal_host,
    gadget_type1,
    gadget_type2,
    type1_roles,
    type2_roles,
)
from intervaledit.graph import Graph
from intervaledit.obstructions import (
    BigAT,
    find_minimum_big_at,
    find_small_obstruction,
    shrink_to_minimal,
)
from intervaledit.recognition import is_interval

from helpers import cycle_graph, long_claw, path_graph, random_graph


def brute_force_min_big_p(g):
    """Exhaustively enumerate template embeddings, returning the minimum
    interior length (and whether type 1 attains it)."""
    best = None
    verts = list(g.vertices)

    def chordless_paths(a, b, interior_pool, limit):
        # DFS over induced paths from a to b with interior in interior_pool
        out = []

        def extend(path):
            if len(out) > 2000:
                return
            last = path[-1]
            if g.has_edge(last, b) and len(path) >= 2:
                if all(not g.has_edge(b, x) for x in path[:-1] if x != a) \
                        and not g.has_edge(a, b):
                    out.append(path[1:])
                # do not also extend past a closing vertex: chords would appear
            for v in interior_pool:
                if v in path or g.has_edge(v, a) and len(path) > 1 and v != path[1]:
                    continue
                if not g.has_edge(last, v):
                    continue
                if any(g.has_edge(v, x) for x in path[:-1]):
                    continue
                if len(path) < limit:
                    extend(path + [v])

        extend([a])
        return out

    for c in verts:
        for u in g.neighborhood(c):
            pool = [v for v in g.neighborhood(u)
                    if v not in g.closed_neighborhood(c)]
            ends = [v for v in verts
                    if v not in g.closed_neighborhood(u)
                    and v not in g.closed_neighborhood(c)]
            for a in ends:
                for b in ends:
                    if a == b or g.has_edge(a, b):
                        continue
                    for interior in chordless_paths(a, b, pool, 14):
                        cand = BigAT(kind=1, a=a, b=b, c=c, u=u, w=None,
                                     path=tuple(interior))
                        try:
                            cand.verify(g)
                        except ContractViolation:
                            continue
                        key = (cand.p, 1)
                        if best is None or key < best:
                            best = key
    for c in verts:
        for u in g.neighborhood(c):
            for w in g.neighborhood(c):
                if u == w or not g.has_edge(u, w):
                    continue
                pool = [v for v in g.neighborhood(u)
                        if v in g.neighborhood(w)
                        and v not in g.closed_neighborhood(c)]
                a_end = [v for v in g.neighborhood(u)
                         if v not in g.closed_neighborhood(w)
                         and v not in g.closed_neighborhood(c)]
                b_end = [v for v in g.neighborhood(w)
                         if v not in g.closed_neighborhood(u)
                         and v not in g.closed_neighborhood(c)]
                for a in a_end:
                    for b in b_end:
                        if a == b or g.has_edge(a, b):
                            continue
                        for interior in chordless_paths(a, b, pool, 14):
                            cand = BigAT(kind=2, a=a, b=b, c=c, u=u, w=w,
                                         path=tuple(interior))
                            try:
                                cand.verify(g)
                            except ContractViolation:
                                continue
                            key = (cand.p, 2)
                            if best is None or key < best:
                                best = key
    return best


class TestSmallObstruction:
    def test_c5_is_a_hole(self):
        obs = find_small_obstruction(cycle_graph(5))
        assert obs.kind == "hole" and len(obs.hole) == 5

    def test_long_claw_is_small_at(self):
        obs = find_small_obstruction(long_claw())
        assert obs.kind == "small_at"
        assert obs.small_at == frozenset(range(7))

    def test_c9_alone_is_not_small(self):
        assert find_small_obstruction(cycle_graph(9)) is None

    def test_interval_graph_has_none(self):
        assert find_small_obstruction(path_graph(6)) is None

    def test_big_gadget_is_not_small(self):
        assert find_small_obstruction(gadget_type1(7)) is None
        assert find_small_obstruction(gadget_type2(7)) is None


class TestShrink:
    def test_c4_with_isolates(self):
        g = Graph(range(7), [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert shrink_to_minimal(g, range(7)) == frozenset({0, 1, 2, 3})

    def test_long_claw_with_pendant(self):
        g = Graph(range(8), list(long_claw().edges()) + [(6, 7)])
        assert shrink_to_minimal(g, range(8)) == frozenset(range(7))

    def test_minimal_is_fixed_point(self):
        claw = long_claw()
        assert shrink_to_minimal(claw, range(7)) == frozenset(range(7))

    def test_requires_non_interval(self):
        with pytest.raises(ContractViolation):
            shrink_to_minimal(path_graph(4), range(4))

    def test_every_single_deletion_becomes_interval(self):
        rng = random.Random(11)
        found = 0
        while found < 25:
            g = random_graph(rng.randint(5, 9), rng.uniform(0.2, 0.5),
                             seed=rng.randrange(1 << 30))
            if is_interval(g):
                continue
            minimal = shrink_to_minimal(g, g.vertices)
            sub = g.induced_subgraph(minimal)
            assert not is_interval(sub)
            for v in minimal:
                assert is_interval(sub.remove_vertices([v]))
            found += 1


class TestMinimumBigAT:
    def test_type1_gadget(self):
        g = gadget_type1(7)
        roles = type1_roles(7)
        at = find_minimum_big_at(g)
        assert at is not None and at.kind == 1 and at.p == 7
        assert at.u == roles["u"] and at.c == roles["c"]
        assert {at.a, at.b} == {roles["a"], roles["b"]}

    def test_type2_gadget(self):
        g = gadget_type2(7)
        at = find_minimum_big_at(g)
        assert at is not None and at.kind == 2 and at.p == 7
        roles = type2_roles(7)
        assert {at.u, at.w} == {roles["u"], roles["w"]}

    def test_interval_graph_has_none(self):
        assert find_minimum_big_at(path_graph(8)) is None

    def test_prefers_type1_on_tie(self):
        t1 = gadget_type1(7)
        offset = t1.n
        t2 = gadget_type2(7)
        edges = list(t1.edges()) + [(u + offset, v + offset) for u, v in t2.edges()]
        g = Graph(range(offset + t2.n), edges)
        at = find_minimum_big_at(g)
        assert at.kind == 1

    def test_minimum_p_wins(self):
        t1_big = gadget_type1(9)
        t1_small = gadget_type1(7)
        combined = list(t1_big.edges()) + \
            [(u + t1_big.n, v + t1_big.n) for u, v in t1_small.edges()]
        g = Graph(range(t1_big.n + t1_small.n), combined)
        at = find_minimum_big_at(g)
        assert at.p == 7

    def test_matches_brute_force_on_gadgets(self):
        for g in [gadget_type1(7), gadget_type1(8), gadget_type2(7)]:
            expected = brute_force_min_big_p(g)
            got = find_minimum_big_at(g)
            assert expected is not None and got is not None
            assert (got.p, got.kind) == expected

    def test_decorated_gadget_still_minimum(self):
        # extra vertex dominating the whole path plus centers and shallow vertex
        g = gadget_type1(7)
        roles = type1_roles(7)
        extra = g.n
        new_edges = [(extra, v) for v in roles["path"]]
        new_edges += [(extra, roles["u"]), (extra, roles["c"])]
        g2 = Graph(range(g.n + 1), list(g.edges()) + new_edges)
        assert find_small_obstruction(g2) is None
        at = find_minimum_big_at(g2)
        assert at is not None and at.p == 7

    def test_host_instance_fast_enough(self):
        g = gadget_in_chordal_host(20, 36)
        start = time.perf_counter()
        at = find_minimum_big_at(g)
        elapsed = time.perf_counter() - start
        assert at is not None and at.p == 20 and at.kind == 1
        assert elapsed < 5.0
