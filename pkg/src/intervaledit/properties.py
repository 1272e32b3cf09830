"""Structural property suites: every theorem the machinery leans on, asserted
on seeded generated instances.

Each suite yields PropertyResult rows; a failing row carries the instance
(minimized by greedy vertex deletion while the failure persists) so the
counterexample is small enough to read.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .cycles import classify_cycle, find_clean_cycle, min_cycle_separator
from .errors import StructureViolation
from .generators import gadget_type1, gadget_type2, long_cycle, nested_gadget, type1_roles
from .graph import Graph, find_chordless_cycle
from .obstructions import find_minimum_big_at, find_small_obstruction
from .recognition import find_at, is_chordal
from .structure import build_context, find_ripe_at


@dataclass
class PropertyResult:
    suite: str
    name: str
    passed: bool
    checked: int
    detail: Optional[str] = None
    instance: Optional[str] = None


def _minimize(g: Graph, failing: Callable[[Graph], Optional[str]]) -> Graph:
    """Greedy vertex deletion keeping the failure alive."""
    current = g
    changed = True
    while changed:
        changed = False
        for v in list(current.vertices):
            trial = current.remove_vertices([v])
            if failing(trial) is not None:
                current = trial
                changed = True
                break
    return current


# -- decorated instance generators -------------------------------------------------


def decorated_gadget(rng: random.Random) -> Graph:
    """A big-AT gadget with random safe decorations.

    Decoration closure rules keep the graph chordal and small-obstruction
    free: shallow-side vertices attach to every center and every dominating
    vertex, middle-path touchers attach to the centers and dominating
    vertices, and new dominating vertices pick up the whole shallow side.
    Candidates violating the invariants are rejected and redrawn.
    """
    for _ in range(60):
        kind = rng.choice((1, 2))
        p = rng.randint(7, 10)
        base = gadget_type1(p) if kind == 1 else gadget_type2(p)
        if kind == 1:
            a, b, u, c = 0, p + 1, p + 2, p + 3
            centers = [u]
        else:
            a, b, u, w, c = 0, p + 1, p + 2, p + 3, p + 4
            centers = [u, w]
        path = list(range(1, p + 1))
        edges = list(base.edges())
        nxt = base.n
        dominating_extra: list[int] = []
        shallow_side: list[int] = []
        middle_touchers: list[int] = []
        for _ in range(rng.randint(0, 4)):
            x = nxt
            nxt += 1
            move = rng.choice(("dom", "family", "shallow", "end"))
            if move == "dom":
                targets = path + [c] + centers + dominating_extra \
                    + shallow_side + middle_touchers
                dominating_extra.append(x)
            elif move == "shallow":
                targets = [c] + centers + dominating_extra
                shallow_side.append(x)
            elif move == "end":
                # touches only the path ends, exempt from center adjacency
                targets = rng.choice(([a, path[0]], [path[0]], [path[-1]],
                                      [path[-1], b]))
            else:
                i = rng.randint(1, p - 2)
                size = rng.choice((1, 2, 3))
                idx = list(range(i, min(i + size, p + 1)))
                targets = [path[j - 1] for j in idx]
                if any(2 <= j <= p - 1 for j in idx):
                    targets += centers + dominating_extra
                    middle_touchers.append(x)
            edges += [(x, t) for t in targets]
        g = Graph(range(nxt), edges)
        if not is_chordal(g).is_perfect:
            continue
        if find_small_obstruction(g) is not None:
            continue
        try:
            at = find_minimum_big_at(g)
        except StructureViolation:
            continue
        if at is None or at.p != p:
            continue
        return g
    return gadget_type1(7)


def decorated_long_cycle(rng: random.Random) -> Graph:
    """A long chordless cycle with dominating vertices, family members and at
    most one parallel inner cycle."""
    for _ in range(60):
        length = rng.randint(9, 12)
        edges = [(i, (i + 1) % length) for i in range(length)]
        nxt = length
        apexes: list[int] = []
        others: list[int] = []
        for _ in range(rng.randint(0, 3)):
            x = nxt
            nxt += 1
            move = rng.choice(("apex", "single", "double", "triple"))
            if move == "apex":
                targets = list(range(length)) + others + list(apexes)
                apexes.append(x)
            else:
                i = rng.randrange(length)
                span = {"single": 1, "double": 2, "triple": 3}[move]
                targets = [(i + d) % length for d in range(span)] + apexes
                others.append(x)
            edges += [(x, t) for t in targets]
        if rng.random() < 0.4:
            inner = list(range(nxt, nxt + 9))
            i = rng.randrange(length)
            for j, x in enumerate(inner):
                edges.append((x, inner[(j + 1) % 9]))
                edges += [(x, i), (x, (i + 1) % length)]
                edges += [(x, apex) for apex in apexes]
            others += inner
            nxt += 9
        g = Graph(range(nxt), edges)
        if find_small_obstruction(g) is not None:
            continue
        try:
            classify_cycle(g, list(range(length)))
        except StructureViolation:
            continue
        return g
    return long_cycle(9)


# -- structure suite -----------------------------------------------------------------


def _check_structure_laws(g: Graph) -> Optional[str]:
    at = find_minimum_big_at(g)
    if at is None:
        return "expected a big AT"
    try:
        ctx = build_context(g, at)
    except StructureViolation as exc:
        return f"context construction violated structure: {exc}"
    chain = at.full_path()
    witness = at.vertex_set()
    centers = {at.u} if at.w is None else {at.u, at.w}
    shallow_nbrs = g.neighborhood(at.c)
    for x in shallow_nbrs:
        for ctr in centers:
            if x != ctr and not g.has_edge(x, ctr):
                return f"shallow neighbor {x} misses a center"
        for d in ctx.dominating:
            if x != d and not g.has_edge(x, d):
                return f"shallow neighbor {x} misses dominating vertex {d}"
        if any(g.has_edge(x, v) for v in chain) and x not in ctx.dominating:
            return f"shallow neighbor {x} touches the path without dominating"
    for x, y in combinations(sorted(ctx.dominating), 2):
        if not g.has_edge(x, y):
            return f"dominating pair {x},{y} not adjacent"
    for x in ctx.dominating:
        if not g.has_edge(x, at.c):
            return f"dominating vertex {x} misses the shallow vertex"
    for x in g.vertices:
        if x in witness or x in shallow_nbrs:
            continue
        hits = [i for i, v in enumerate(chain) if g.has_edge(x, v)]
        if hits and (len(hits) > 3 or hits[-1] - hits[0] != len(hits) - 1):
            return f"vertex {x} touches path positions {hits}"
    for x in ctx.inner_vertices:
        for d in ctx.dominating:
            if x != d and not g.has_edge(x, d):
                return f"inner vertex {x} misses dominating {d}"
    wall = set(ctx.dominating) | set(ctx.boundary_a) | set(ctx.boundary_b)
    rest = set(g.vertices) - set(ctx.inner_vertices) - wall
    for x in rest:
        for y in ctx.inner_vertices:
            if x != y and g.has_edge(x, y):
                return f"wall breached: outside {x} adjacent to inner {y}"
    return None


def _check_inner_domination(g: Graph) -> Optional[str]:
    at = find_minimum_big_at(g)
    if at is None:
        return "expected a big AT"
    ctx = build_context(g, at)
    inner = ctx.inner_graph()
    try:
        inner_at = find_minimum_big_at(inner)
    except StructureViolation as exc:
        return f"inner region violated structure: {exc}"
    if inner_at is None:
        return None
    p = at.p
    for i in range(2, p):
        v = at.path[i - 1]
        if all(g.has_edge(v, x) for x in inner_at.path if x != v):
            return None
    return "no middle path vertex dominates the nested AT"


def _check_descent_terminates(g: Graph) -> Optional[str]:
    ripe = find_ripe_at(g, g.n)
    if ripe is None:
        return "descent failed with an unbounded budget"
    if find_at(ripe.context.inner_graph()) is not None:
        return "reported ripe AT has an AT in its inner region"
    return None


def _negative_control(rng: random.Random) -> Optional[str]:
    g = gadget_type1(7)
    roles = type1_roles(7)
    at = find_minimum_big_at(g)
    extra = g.n
    bad = Graph(range(g.n + 1), list(g.edges()) + [(extra, roles["c"])])
    try:
        build_context(bad, at)
    except StructureViolation:
        return None
    return "corrupted gadget did not raise StructureViolation"


def structure_suite(seed: int, count: int) -> list[PropertyResult]:
    rng = random.Random(seed)
    out = []
    out.append(_run_property("structure", "big-at-structure-laws",
                             _check_structure_laws,
                             lambda: decorated_gadget(rng), count))
    nested_pool = lambda: nested_gadget(rng.randint(7, 9), rng.randint(2, 3))
    out.append(_run_property("structure", "nested-at-dominated-by-path-vertex",
                             _check_inner_domination, nested_pool, max(1, count // 4)))
    out.append(_run_property("structure", "ripe-descent-terminates",
                             _check_descent_terminates, nested_pool,
                             max(1, count // 4)))
    control = _negative_control(rng)
    out.append(PropertyResult(suite="structure", name="corrupt-gadget-raises",
                              passed=control is None, checked=1, detail=control))
    return out


# -- cycles suite ---------------------------------------------------------------------


def _check_cycle_trichotomy(g: Graph) -> Optional[str]:
    cycle = find_chordless_cycle(g, 4)
    if cycle is None or len(cycle) < 9:
        return "expected a long hole"
    try:
        struct = classify_cycle(g, cycle)
    except StructureViolation as exc:
        return f"classification violated: {exc}"
    on_cycle = set(cycle)
    closed = struct.closed_neighborhood()
    for x in g.vertices:
        if x in on_cycle:
            continue
        hits = sum(1 for v in cycle if g.has_edge(x, v))
        if x in struct.dominating:
            continue
        if 0 < hits <= 3:
            continue
        if hits == 0 and x not in closed:
            allowed = g.mask_of(v for v in g.vertices if v not in struct.dominating)
            if any(g.is_connected_between(x, v, allowed) for v in cycle):
                return f"outside vertex {x} reaches the cycle off the dominating set"
            continue
        return f"vertex {x} fits no trichotomy case"
    return None


def _check_double_family_edges(g: Graph) -> Optional[str]:
    cycle = find_chordless_cycle(g, 4)
    if cycle is None or len(cycle) < 9:
        return "expected a long hole"
    struct = classify_cycle(g, cycle)
    p = len(cycle)
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            for x in struct.double[i]:
                for y in struct.double[j]:
                    if x != y and g.has_edge(x, y):
                        if (j - i) % p != 1 and (i - j) % p != 1:
                            return (f"double-family edge {x},{y} across "
                                    f"non-consecutive positions {i},{j}")
    return None


def _check_inner_cycle_shape(g: Graph) -> Optional[str]:
    cycle = find_chordless_cycle(g, 4)
    if cycle is None or len(cycle) < 9:
        return "expected a long hole"
    struct = classify_cycle(g, cycle)
    region = sorted(struct.closed_neighborhood() - set(cycle))
    sub = g.induced_subgraph(region)
    inner = find_chordless_cycle(sub, 4)
    if inner is None:
        return None
    if len(inner) < 9:
        return f"region hides a short hole {inner}"
    inner_set = set(inner)
    if inner_set & struct.dominating:
        return "inner cycle intersects the dominating set"
    meets_all = all(any(g.has_edge(x, v) for x in inner_set) for v in cycle)
    p = len(cycle)
    inside_family = any(
        inner_set <= struct.single[i] or inner_set <= struct.double[i]
        for i in range(p))
    if not (meets_all or inside_family):
        return "inner cycle neither meets every cycle neighborhood nor sits in one family"
    return None


def _check_separator_exact(g: Graph) -> Optional[str]:
    clean = find_clean_cycle(g)
    if clean is None:
        return "expected a clean cycle"
    if not clean.ripe:
        return None
    region = sorted(clean.structure.region_without_dominating())
    if len(region) > 20:
        return None
    sep = min_cycle_separator(g, clean)
    sub = g.induced_subgraph(region)
    if find_chordless_cycle(sub.remove_vertices(sep), 4) is not None:
        return "separator leaves a hole in the region"
    for size in range(len(sep)):
        for cand in combinations(region, size):
            if find_chordless_cycle(sub.remove_vertices(cand), 4) is None:
                return f"separator not minimum: {cand} suffices"
    return None


def cycles_suite(seed: int, count: int) -> list[PropertyResult]:
    rng = random.Random(seed)
    pool = lambda: decorated_long_cycle(rng)
    return [
        _run_property("cycles", "neighbor-trichotomy", _check_cycle_trichotomy,
                      pool, count),
        _run_property("cycles", "double-family-edges-consecutive",
                      _check_double_family_edges, pool, count),
        _run_property("cycles", "inner-cycle-shape", _check_inner_cycle_shape,
                      pool, count),
        _run_property("cycles", "cycle-separator-exact-and-minimum",
                      _check_separator_exact, pool, max(1, count // 2)),
    ]


# -- completion suite -----------------------------------------------------------------


def _check_triangulation_family(rng: random.Random) -> Optional[str]:
    from .completion import enumerate_cycle_triangulations

    length = rng.randint(4, 7)
    cyc = list(range(length))
    g = long_cycle(length)
    non_edges = [(x, y) for x, y in combinations(cyc, 2) if not g.has_edge(x, y)]
    brute = set()
    for cand in combinations(non_edges, length - 3):
        if is_chordal(g.add_edges(cand)).is_perfect:
            brute.add(frozenset(tuple(sorted(e)) for e in cand))
    got = set(enumerate_cycle_triangulations(cyc))
    if got != brute:
        return f"triangulation family mismatch for length {length}"
    return None


def _check_no_new_at_after_separator_batch(rng: random.Random) -> Optional[str]:
    from .graph import minimum_vertex_separator
    from .completion import _shallow_component

    p = rng.randint(13, 15)
    g = gadget_type1(p)
    roles = type1_roles(p)
    companions = rng.randint(0, 2)
    edges = list(g.edges())
    nxt = g.n
    for _ in range(companions):
        edges += [(nxt, roles["c"]), (nxt, roles["u"])]
        nxt += 1
    g = Graph(range(nxt), edges)
    at = find_minimum_big_at(g)
    separator = minimum_vertex_separator(
        g, at.path[5], at.path[at.p - 6], g.neighborhood(at.c))
    component = _shallow_component(g, at)
    batch = {tuple(sorted((c2, x))) for c2 in component for x in separator
             if not g.has_edge(c2, x)}
    enriched = g.add_edges(batch)
    try:
        new_at = find_minimum_big_at(enriched)
    except StructureViolation as exc:
        return f"separator batch created a structure violation: {exc}"
    if new_at is None:
        return None
    vs = sorted(new_at.vertex_set())
    for x, y in combinations(vs, 2):
        if tuple(sorted((x, y))) in batch and enriched.has_edge(x, y):
            return "minimum AT of the filled graph uses a batch edge"
    return None


def _check_center_path_shifts_at(rng: random.Random) -> Optional[str]:
    p = rng.randint(7, 9)
    g = gadget_type1(p)
    roles = type1_roles(p)
    a, u, v1 = roles["a"], roles["u"], roles["path"][0]
    x1, x2 = g.n, g.n + 1
    edges = list(g.edges())
    edges += [(x1, u), (x1, v1), (x1, x2), (x2, v1), (x2, a)]
    g2 = Graph(range(g.n + 2), edges)
    if not is_chordal(g2).is_perfect:
        return "shift construction should stay chordal"
    shifted = find_minimum_big_at(g2)
    if shifted is None:
        return "expected a big AT in the shifted instance"
    if shifted.p != p:
        return f"shifted instance changed the minimum path length to {shifted.p}"
    # the new far vertex heads an equivalent AT with the same interior path
    cand_path = tuple([v1] + roles["path"][1:])
    from .obstructions import BigAT
    from .errors import ContractViolation
    claim = BigAT(kind=1, a=x2, b=roles["b"], c=roles["c"], u=u, w=None,
                  path=cand_path)
    try:
        claim.verify(g2)
    except ContractViolation as exc:
        return f"shifted witness failed: {exc}"
    return None


def completion_suite(seed: int, count: int) -> list[PropertyResult]:
    rng = random.Random(seed)
    return [
        _run_direct("completion", "triangulations-match-brute-force",
                    lambda: _check_triangulation_family(rng), count),
        _run_direct("completion", "separator-batch-adds-no-minimum-at",
                    lambda: _check_no_new_at_after_separator_batch(rng),
                    max(1, count // 4)),
        _run_direct("completion", "center-path-shifts-the-at",
                    lambda: _check_center_path_shifts_at(rng),
                    max(1, count // 4)),
    ]


# -- runner ---------------------------------------------------------------------------


def _run_property(suite: str, name: str, check, make_instance,
                  count: int) -> PropertyResult:
    from .instances import serialize_instance

    for i in range(count):
        g = make_instance()
        detail = check(g)
        if detail is not None:
            small = _minimize(g, check)
            return PropertyResult(
                suite=suite, name=name, passed=False, checked=i + 1,
                detail=check(small), instance=serialize_instance(small))
    return PropertyResult(suite=suite, name=name, passed=True, checked=count)


def _run_direct(suite: str, name: str, attempt, count: int) -> PropertyResult:
    for i in range(count):
        detail = attempt()
        if detail is not None:
            return PropertyResult(suite=suite, name=name, passed=False,
                                  checked=i + 1, detail=detail)
    return PropertyResult(suite=suite, name=name, passed=True, checked=count)


SUITES = {
    "structure": structure_suite,
    "cycles": cycles_suite,
    "completion": completion_suite,
}


def run_suite(name: str, seed: int, count: int) -> list[PropertyResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](seed, count)
