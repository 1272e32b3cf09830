import random

import pytest

from intervaledit.deletion import chordal_interval, interval_deletion, minimum_deletion
from intervaledit.errors import StructureViolation
from intervaledit.generators import gadget_type1, gadget_type2, nested_gadget
from intervaledit.graph import Graph
from intervaledit.oracle import brute_force_min_deletion
from intervaledit.recognition import is_interval

from helpers import cycle_graph, long_claw, path_graph, random_graph


class TestChordalInterval:
    def test_interval_instance(self):
        res = chordal_interval(path_graph(6), 0)
        assert res.found and res.vertices == frozenset()

    def test_bare_gadget_budget_one(self):
        res = chordal_interval(gadget_type1(7), 1)
        assert res.found and len(res.vertices) == 1

    def test_bare_gadget_budget_zero(self):
        res = chordal_interval(gadget_type1(7), 0)
        assert not res.found

    def test_type2_gadget(self):
        res = chordal_interval(gadget_type2(7), 1)
        assert res.found and len(res.vertices) == 1

    def test_rejects_non_chordal(self):
        with pytest.raises(StructureViolation):
            chordal_interval(cycle_graph(5), 3)

    def test_rejects_small_obstruction(self):
        with pytest.raises(StructureViolation):
            chordal_interval(long_claw(), 3)

    def test_long_gadget_uses_batches(self):
        g = gadget_type1(14)
        res = chordal_interval(g, 1)
        assert res.found and len(res.vertices) == 1

    def test_nested_gadget(self):
        g = nested_gadget(7, 2)
        k, res = minimum_deletion(g)
        oracle = brute_force_min_deletion(g, 4)
        assert k == oracle.optimum


class TestIntervalDeletion:
    def test_c4_one_deletion(self):
        res = interval_deletion(cycle_graph(4), 1)
        assert res.found and len(res.vertices) == 1

    def test_c9_one_deletion(self):
        res = interval_deletion(cycle_graph(9), 1)
        assert res.found and len(res.vertices) == 1

    def test_two_c4s_need_two(self):
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
        g = Graph.from_edges(8, edges)
        assert not interval_deletion(g, 1).found
        assert interval_deletion(g, 2).found

    def test_long_claw(self):
        res = interval_deletion(long_claw(), 1)
        assert res.found and len(res.vertices) == 1

    def test_yes_monotone_in_budget(self):
        rng = random.Random(60)
        for _ in range(20):
            g = random_graph(rng.randint(5, 10), rng.uniform(0.2, 0.5),
                             seed=rng.randrange(1 << 30))
            for k in range(4):
                if interval_deletion(g, k).found:
                    assert interval_deletion(g, k + 1).found

    def test_depth_never_exceeds_budget(self):
        rng = random.Random(61)
        for _ in range(15):
            g = random_graph(rng.randint(6, 10), rng.uniform(0.25, 0.5),
                             seed=rng.randrange(1 << 30))
            res = interval_deletion(g, 3)
            assert res.stats.max_depth <= 3 + 1

    def test_optimum_matches_oracle_on_small_random(self):
        rng = random.Random(62)
        for _ in range(40):
            n = rng.randint(4, 9)
            g = random_graph(n, rng.uniform(0.2, 0.6), seed=rng.randrange(1 << 30))
            expected = brute_force_min_deletion(g, n).optimum
            got, res = minimum_deletion(g)
            assert got == expected
            if res.found:
                assert is_interval(g.remove_vertices(res.vertices))

    def test_optimum_on_cycles(self):
        for length, opt in [(4, 1), (6, 1), (9, 1), (12, 1)]:
            got, _ = minimum_deletion(cycle_graph(length))
            assert got == opt

    def test_stats_populated(self):
        res = interval_deletion(cycle_graph(9), 1)
        assert res.stats.nodes >= 2
        assert res.stats.max_branch_degree >= 1
