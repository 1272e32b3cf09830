"""Targeted instances for the solver paths random corpora rarely reach:
cycle ripening, separator batches on long gadgets, and twin-fortified
witnesses where single deletions are wasteful."""

import random

from intervaledit.completion import interval_completion, minimum_completion
from intervaledit.deletion import interval_deletion, minimum_deletion
from intervaledit.generators import gadget_type1, gadget_type2, long_cycle
from intervaledit.graph import Graph
from intervaledit.oracle import brute_force_min_deletion
from intervaledit.recognition import is_chordal, is_interval


def cycle_with_gadget_in_neighborhood(cycle_len=12, p=7):
    """Long cycle with a whole type-1 gadget hanging inside one vertex's
    neighborhood: clean but not ripe, so the solver must ripen first."""
    cycle = long_cycle(cycle_len)
    base = cycle.n
    gadget = gadget_type1(p)
    edges = list(cycle.edges())
    edges += [(u + base, v + base) for u, v in gadget.edges()]
    edges += [(x + base, 0) for x in gadget.vertices]
    return Graph(range(base + gadget.n), edges)


def twin_fortified_gadget(p=14):
    """Type-1 gadget whose a, b, c, u all have twins, plus a bypass vertex
    around the middle of the path; killing the obstruction cheaply requires
    cutting the path, and the minimum separator has two vertices."""
    g = gadget_type1(p)
    a, b, u, c = 0, p + 1, p + 2, p + 3
    n = g.n
    a2, b2, c2, u2, w = n, n + 1, n + 2, n + 3, n + 4
    edges = list(g.edges())
    edges += [(a2, 1)]                      # second far-left end
    edges += [(b2, p)]                      # second far-right end
    edges += [(c2, u)]                      # second shallow vertex
    # second center: dominates the path, carries both shallow vertices,
    # and sits inside the dominating clique
    edges += [(u2, i) for i in range(1, p + 1)]
    edges += [(u2, c), (u2, c2), (u2, u)]
    mid = p // 2
    # bypass around v_mid: alternate route the separator must also cut
    edges += [(w, mid - 1), (w, mid), (w, mid + 1), (w, u), (w, u2)]
    return Graph(range(n + 5), edges)


class TestRipeningPath:
    def test_instance_shape(self):
        g = cycle_with_gadget_in_neighborhood()
        assert not is_chordal(g).is_perfect
        from intervaledit.cycles import find_clean_cycle

        clean = find_clean_cycle(g)
        assert clean is not None and not clean.ripe

    def test_solver_matches_oracle(self):
        g = cycle_with_gadget_in_neighborhood()
        report = brute_force_min_deletion(g, 3)
        k, result = minimum_deletion(g, kmax=4)
        assert k == report.optimum
        assert is_interval(g.remove_vertices(result.vertices))

    def test_longer_cycle_variant(self):
        g = cycle_with_gadget_in_neighborhood(cycle_len=13, p=8)
        report = brute_force_min_deletion(g, 3)
        k, result = minimum_deletion(g, kmax=4)
        assert k == report.optimum

    def test_ripen_nodes_recorded(self):
        g = cycle_with_gadget_in_neighborhood()
        _, result = minimum_deletion(g, kmax=4)
        kinds = {kind for _, kind, _ in result.stats.node_records}
        assert "ripen" in kinds


class TestFortifiedGadget:
    def test_structure_is_supported(self):
        g = twin_fortified_gadget()
        assert is_chordal(g).is_perfect
        from intervaledit.obstructions import find_minimum_big_at, find_small_obstruction

        assert find_small_obstruction(g) is None
        at = find_minimum_big_at(g)
        assert at is not None and at.p == 14

    def test_deletion_matches_oracle(self):
        g = twin_fortified_gadget()
        report = brute_force_min_deletion(g, 3)
        k, result = minimum_deletion(g, kmax=3)
        assert k == report.optimum == len(result.vertices)
        assert is_interval(g.remove_vertices(result.vertices))

    def test_monotone_budgets(self):
        g = twin_fortified_gadget()
        k, _ = minimum_deletion(g, kmax=4)
        for budget in range(k, 5):
            assert interval_deletion(g, budget).found
        for budget in range(0, k):
            assert not interval_deletion(g, budget).found


class TestLongGadgetCompletion:
    def test_bare_long_gadget_sound(self):
        g = gadget_type1(13)
        k, result = minimum_completion(g, kmax=6)
        assert result.found
        assert is_interval(g.add_edges(result.fills))

    def test_companioned_gadget_sound(self):
        base = gadget_type1(13)
        c, u = 13 + 3, 13 + 2
        edges = list(base.edges())
        edges += [(base.n, c), (base.n, u)]
        edges += [(base.n + 1, c), (base.n + 1, u), (base.n + 1, base.n)]
        g = Graph(range(base.n + 2), edges)
        k, result = minimum_completion(g, kmax=8)
        assert result.found
        assert is_interval(g.add_edges(result.fills))
        for kk in range(k):
            assert not interval_completion(g, kk).found

    def test_type2_long_gadget(self):
        g = gadget_type2(13)
        k, result = minimum_completion(g, kmax=6)
        assert result.found
        assert is_interval(g.add_edges(result.fills))


class TestRandomizedCrossValidation:
    def test_extra_deletion_sweep(self):
        rng = random.Random(8888)
        checked = 0
        while checked < 60:
            n = rng.randint(6, 11)
            p = rng.uniform(0.15, 0.5)
            g = Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)
                                 if rng.random() < p])
            report = brute_force_min_deletion(g, n)
            k, _ = minimum_deletion(g)
            assert k == report.optimum
            checked += 1
