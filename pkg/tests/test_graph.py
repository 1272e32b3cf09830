import random

import pytest
from hypothesis import given, settings, strategies as st

from intervaledit.errors import ContractViolation, NoSeparator
from intervaledit.graph import (
    Graph,
    find_chordless_cycle,
    is_cycle_chordless,
    minimum_vertex_separator,
)

from helpers import (
    brute_force_separator_size,
    complete_graph,
    cycle_graph,
    enumerate_induced_cycles,
    path_graph,
    random_graph,
)


def small_graphs():
    return st.integers(min_value=1, max_value=7).flatmap(
        lambda n: st.builds(
            lambda es: Graph.from_edges(n, es),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=n * (n - 1) // 2,
            ),
        )
    )


class TestBasics:
    def test_induced_identity(self):
        k3 = complete_graph(3)
        assert k3.induced_subgraph([0, 1, 2]) == k3

    def test_induced_of_c4_is_path(self):
        c4 = cycle_graph(4)
        sub = c4.induced_subgraph([0, 1, 2])
        assert sub == Graph.from_edges(3, [(0, 1), (1, 2)])

    def test_induced_empty(self):
        g = random_graph(10, 0.5, seed=1)
        assert g.induced_subgraph([]).n == 0

    def test_induced_preserves_ids(self):
        g = path_graph(5)
        sub = g.induced_subgraph([1, 3, 4])
        assert sub.vertices == (1, 3, 4)
        assert sub.has_edge(3, 4) and not sub.has_edge(1, 3)

    def test_unknown_vertex_rejected(self):
        g = path_graph(3)
        with pytest.raises(ContractViolation):
            g.induced_subgraph([0, 99])
        with pytest.raises(ContractViolation):
            g.neighborhood(99)

    def test_neighborhoods(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert star.neighborhood(0) == {1, 2, 3}
        assert star.closed_neighborhood(0) == {0, 1, 2, 3}
        lonely = Graph(range(2), [])
        assert lonely.neighborhood(0) == set()
        assert lonely.closed_neighborhood(0) == {0}
        p3 = path_graph(3)
        assert p3.closed_neighborhood_of_set([0, 2]) == {0, 1, 2}

    def test_add_edges(self):
        c4 = cycle_graph(4)
        diamond = c4.add_edges([(0, 2)])
        assert diamond.edge_count() == 5
        assert c4.add_edges([]) == c4
        p4 = path_graph(4)
        assert p4.add_edges([(0, 3)]) == cycle_graph(4)
        with pytest.raises(ContractViolation):
            c4.add_edges([(0, 1)])

    @given(small_graphs())
    @settings(max_examples=80)
    def test_neighborhood_symmetry_and_irreflexivity(self, g):
        for v in g.vertices:
            assert v not in g.neighborhood(v)
            for u in g.neighborhood(v):
                assert v in g.neighborhood(u)


class TestSeparator:
    def test_p3_middle(self):
        g = path_graph(3)
        assert minimum_vertex_separator(g, 0, 2) == {1}

    def test_two_disjoint_paths(self):
        # a=0, c=1 joined by two length-2 paths via 2 and 3
        g = Graph.from_edges(4, [(0, 2), (2, 1), (0, 3), (3, 1)])
        cut = minimum_vertex_separator(g, 0, 1)
        assert len(cut) == 2 == brute_force_separator_size(g, 0, 1)

    def test_c6_opposite(self):
        g = cycle_graph(6)
        cut = minimum_vertex_separator(g, 0, 3)
        assert len(cut) == 2
        assert len(cut & {1, 2}) == 1 and len(cut & {4, 5}) == 1

    def test_adjacent_raises(self):
        with pytest.raises(NoSeparator):
            minimum_vertex_separator(path_graph(2), 0, 1)

    def test_forbidden_opens_no_separator(self):
        # 0-1 plus 0-2-1: forbidding nothing needs {2}; removing 2 leaves 0-1 path via edge
        g = Graph.from_edges(3, [(0, 2), (2, 1)])
        assert minimum_vertex_separator(g, 0, 1) == {2}
        g2 = g.add_edges([(0, 1)])
        with pytest.raises(NoSeparator):
            minimum_vertex_separator(g2, 0, 1)

    def test_disconnected_gives_empty(self):
        g = Graph(range(4), [(0, 1), (2, 3)])
        assert minimum_vertex_separator(g, 0, 2) == set()

    def test_matches_brute_force_on_random_instances(self):
        rng = random.Random(20240811)
        checked = 0
        while checked < 200:
            n = rng.randint(3, 8)
            g = random_graph(n, rng.uniform(0.2, 0.7), seed=rng.randrange(1 << 30))
            s, t = rng.sample(range(n), 2)
            forbidden = [
                v for v in range(n) if v not in (s, t) and rng.random() < 0.15
            ]
            expected = brute_force_separator_size(g, s, t, forbidden)
            if expected is None:
                with pytest.raises(NoSeparator):
                    minimum_vertex_separator(g, s, t, forbidden)
                continue
            cut = minimum_vertex_separator(g, s, t, forbidden)
            assert len(cut) == expected
            rest = g.remove_vertices(set(forbidden) | cut)
            assert not rest.is_connected_between(s, t, rest.full_mask)
            checked += 1

    def test_deterministic(self):
        g = cycle_graph(8)
        cuts = {frozenset(minimum_vertex_separator(g, 0, 4)) for _ in range(5)}
        assert len(cuts) == 1


class TestChordlessCycle:
    def test_tree_has_none(self):
        g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
        assert find_chordless_cycle(g) is None

    def test_c5_is_itself(self):
        g = cycle_graph(5)
        cycle = find_chordless_cycle(g)
        assert cycle is not None and len(cycle) == 5
        assert is_cycle_chordless(g, cycle)

    def test_c6_with_chord_gives_c4(self):
        g = cycle_graph(6).add_edges([(0, 3)])
        cycle = find_chordless_cycle(g)
        assert cycle is not None and len(cycle) == 4
        assert is_cycle_chordless(g, cycle)

    def test_min_len_skips_short_holes(self):
        # C4 and C6 sharing nothing; asking for >= 5 must return the C6
        edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
        edges += [(4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 4)]
        g = Graph.from_edges(10, edges)
        assert len(find_chordless_cycle(g, 4)) == 4
        assert len(find_chordless_cycle(g, 5)) == 6
        assert find_chordless_cycle(g, 7) is None

    def test_triangles_never_count(self):
        assert find_chordless_cycle(complete_graph(5)) is None

    def test_matches_brute_force_enumeration(self):
        rng = random.Random(7)
        for _ in range(120):
            n = rng.randint(4, 9)
            g = random_graph(n, rng.uniform(0.2, 0.6), seed=rng.randrange(1 << 30))
            all_cycles = enumerate_induced_cycles(g, 4)
            got = find_chordless_cycle(g, 4)
            if not all_cycles:
                assert got is None
            else:
                shortest = min(len(c) for c in all_cycles)
                assert len(got) == shortest
                assert is_cycle_chordless(g, got)
                expected = min(c for c in all_cycles if len(c) == shortest)
                assert tuple(got) == expected

    def test_canonical_tie_break(self):
        # two C4s; the one with the smaller vertex set wins
        g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                                 (4, 5), (5, 6), (6, 7), (7, 4)])
        assert find_chordless_cycle(g) == [0, 1, 2, 3]
