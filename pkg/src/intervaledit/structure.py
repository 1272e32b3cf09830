"""Structural context around a minimum big AT and the ripe-AT descent.

Given a big AT in a chordal graph free of small obstructions, the rest of
the graph organizes itself rigidly: vertices adjacent to the whole interior
path form a clique around the shallow vertex, every other neighbor touches
at most three consecutive path vertices, and the "inner region" reachable
from the middle of the path is walled off by the two path ends.  Violations
of these facts mean the caller's graph is outside the supported domain and
surface as StructureViolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import StructureViolation
from .graph import Graph
from .obstructions import BigAT, find_minimum_big_at
from .recognition import find_at


@dataclass(frozen=True)
class ATContext:
    """All derived sets for one big AT inside its host graph.

    Position indices for the families run over the extended path
    v_0..v_{p+1} where v_0 = a and v_{p+1} = b.  Families classify vertices
    outside the witness and outside the shallow vertex's neighborhood:
    ``single[i]`` touches v_i only (1<=i<=p), ``double[i]`` touches
    v_i,v_{i+1} only (0<=i<=p), ``triple[i]`` touches v_i,v_{i+1},v_{i+2}
    only (0<=i<=p-1).
    """

    host: Graph
    at: BigAT
    dominating: frozenset
    inner_vertices: frozenset
    boundary_a: frozenset           # wall at the a end
    boundary_b: frozenset           # wall at the b end
    single: dict = field(compare=False)
    double: dict = field(compare=False)
    triple: dict = field(compare=False)

    def inner_graph(self) -> Graph:
        return self.host.induced_subgraph(self.inner_vertices)


@dataclass(frozen=True)
class RipeAT:
    """A big AT whose inner region is interval, plus where it was certified.

    ``level`` counts descent steps; ``scope`` is the graph in which the AT is
    a minimum AT and in which its context was built (a subgraph of the
    solver's current graph once the descent has moved inward).
    """

    context: ATContext
    level: int

    @property
    def at(self) -> BigAT:
        return self.context.at

    @property
    def scope(self) -> Graph:
        return self.context.host


def build_context(g: Graph, at: BigAT) -> ATContext:
    """Compute dominating set, position families, walls and inner region.

    Raises StructureViolation when a consequence of the no-small-obstruction
    assumption fails (non-clique dominating set, a non-neighbor of the
    shallow vertex touching four path vertices, ...).
    """
    at.verify(g)
    path = at.path
    p = at.p
    extended = at.full_path()          # v_0 .. v_{p+1}
    witness = at.vertex_set()

    path_masks = [g.adj_mask(v) for v in extended]
    dom_mask = g.full_mask
    for v in path:
        dom_mask &= g.adj_mask(v)
    dominating = frozenset(v for v in g.ids_of(dom_mask) if v not in path)

    shallow_nbrs = g.neighborhood(at.c)
    centers = {at.u} if at.w is None else {at.u, at.w}

    # consequences of the structure theory, checked up front
    for x in shallow_nbrs:
        for ctr in centers:
            if x != ctr and not g.has_edge(x, ctr):
                raise StructureViolation(
                    f"neighbor {x} of the shallow vertex misses center {ctr}",
                    witness=(x, ctr))
        if x not in dominating and any(g.has_edge(x, v) for v in extended):
            raise StructureViolation(
                f"shallow-side vertex {x} touches the path but does not dominate it",
                witness=x)
    for x in dominating:
        if x != at.c and not g.has_edge(x, at.c):
            raise StructureViolation(
                f"dominating vertex {x} is not adjacent to the shallow vertex",
                witness=x)
        for y in dominating:
            if x < y and not g.has_edge(x, y):
                raise StructureViolation(
                    f"dominating vertices {x},{y} are not adjacent", witness=(x, y))

    single: dict[int, set[int]] = {i: set() for i in range(1, p + 1)}
    double: dict[int, set[int]] = {i: set() for i in range(0, p + 1)}
    triple: dict[int, set[int]] = {i: set() for i in range(0, p)}
    outside = [x for x in g.vertices
               if x not in witness and x not in shallow_nbrs]
    for x in outside:
        hits = [i for i, v in enumerate(extended) if g.has_edge(x, v)]
        if not hits:
            continue
        if len(hits) > 3 or hits[-1] - hits[0] != len(hits) - 1:
            raise StructureViolation(
                f"vertex {x} touches path positions {hits}; expected at most "
                "three consecutive", witness=x)
        if len(hits) == 1 and 1 <= hits[0] <= p:
            single[hits[0]].add(x)
        elif len(hits) == 2:
            double[hits[0]].add(x)
        elif len(hits) == 3:
            triple[hits[0]].add(x)
        # a lone hit on v_0 or v_{p+1} belongs to no family

    boundary_a = frozenset(double[0] | triple[0] | double[1] | single[1]
                           | {path[0]} | single[2])
    boundary_b = frozenset(single[p - 1] | double[p - 1] | triple[p - 1]
                           | double[p] | single[p] | {path[-1]})

    inner_mask = 0
    for i in range(3, p - 1):          # closed neighborhoods of v_3 .. v_{p-2}
        v = path[i - 1]
        inner_mask |= g.adj_mask(v) | g.mask_of([v])
    inner_mask &= ~g.mask_of(shallow_nbrs)
    inner = frozenset(g.ids_of(inner_mask))

    ctx = ATContext(host=g, at=at, dominating=dominating,
                    inner_vertices=inner, boundary_a=boundary_a,
                    boundary_b=boundary_b,
                    single={k: frozenset(v) for k, v in single.items()},
                    double={k: frozenset(v) for k, v in double.items()},
                    triple={k: frozenset(v) for k, v in triple.items()})

    for x in inner:
        for d in dominating:
            if x != d and not g.has_edge(x, d):
                raise StructureViolation(
                    f"inner vertex {x} misses dominating vertex {d}", witness=(x, d))
    return ctx


def find_ripe_at(g: Graph, k: int) -> Optional[RipeAT]:
    """Descend through inner regions until one is asteroidal-triple-free.

    Starts from a minimum big AT of ``g`` and replaces the working graph by
    the inner region of the current AT until that region has no AT; the AT
    owning the region is then ripe.  More than ``k`` descents mean more than
    ``k`` disjoint repairs are needed, so None is returned (no solution
    within budget).
    """
    at = find_minimum_big_at(g)
    if at is None:
        raise StructureViolation(
            "non-interval chordal graph without small obstructions must contain "
            "a big AT, but none was found")
    scope = g
    level = 0
    while True:
        ctx = build_context(scope, at)
        inner = ctx.inner_graph()
        if find_at(inner) is None:
            return RipeAT(context=ctx, level=level)
        if level > k:
            return None
        at = find_minimum_big_at(inner)
        if at is None:
            raise StructureViolation(
                "inner region carries an asteroidal triple but no big AT")
        scope = inner
        level += 1
