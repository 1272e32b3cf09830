"""Finding and classifying minimal non-interval obstructions.

Three kinds matter to the solvers: short holes (length 4..8), small
asteroidal-triple witnesses on at most SMALL_AT_BOUND vertices, and the two
infinite big-AT families (a long path dominated by one or two centers, plus a
shallow vertex hanging off the centers).  Small obstructions get branched on
exhaustively; big ATs drive the structured branching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ContractViolation, StructureViolation
from .graph import Graph, find_chordless_cycle
from .recognition import find_at, is_interval, iter_at_witnesses

SMALL_AT_BOUND = 10
MIN_BIG_PATH = 7   # interior path length below which a template embedding is small
THOROUGH_WITNESS_CAP = 400   # AT triples examined by the thorough small-AT scan
THOROUGH_SHRINK_CAP = 40     # witness shrinks attempted by the thorough scan
THOROUGH_UNION_CAP = 13      # witnesses larger than this cannot hide a small AT cheaply


@dataclass(frozen=True)
class BigAT:
    """A classified embedding of one of the two big obstruction templates.

    ``path`` lists the interior vertices v_1..v_p; ``a`` and ``b`` extend it
    on each end.  ``u`` is the center adjacent to every interior vertex (type
    2 has a second center ``w``), and ``c`` is the shallow vertex hanging off
    the center(s).
    """

    kind: int                      # 1 or 2
    a: int
    b: int
    c: int
    u: int
    w: Optional[int]
    path: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.path)

    def vertex_set(self) -> frozenset:
        base = {self.a, self.b, self.c, self.u, *self.path}
        if self.w is not None:
            base.add(self.w)
        return frozenset(base)

    def full_path(self) -> tuple[int, ...]:
        """a, v_1..v_p, b."""
        return (self.a, *self.path, self.b)

    def verify(self, g: Graph) -> None:
        """Assert the witness induces its template edge set exactly."""
        if self.kind == 1 and self.w is not None:
            raise ContractViolation("type-1 witness must not carry a second center")
        if self.kind == 2 and self.w is None:
            raise ContractViolation("type-2 witness needs a second center")
        if self.p < MIN_BIG_PATH:
            raise ContractViolation(
                f"big AT needs an interior path of at least {MIN_BIG_PATH} vertices")
        expected = set()
        chain = self.full_path()
        for x, y in zip(chain, chain[1:]):
            expected.add(frozenset((x, y)))
        for v in self.path:
            expected.add(frozenset((self.u, v)))
        if self.kind == 1:
            expected.add(frozenset((self.u, self.c)))
        else:
            for v in self.path:
                expected.add(frozenset((self.w, v)))
            expected |= {frozenset((self.a, self.u)), frozenset((self.b, self.w)),
                         frozenset((self.c, self.u)), frozenset((self.c, self.w)),
                         frozenset((self.u, self.w))}
        vs = sorted(self.vertex_set())
        if len(vs) != self.p + (4 if self.kind == 1 else 5):
            raise ContractViolation("big-AT witness vertices are not distinct")
        actual = set()
        for i, x in enumerate(vs):
            for y in vs[i + 1:]:
                if g.has_edge(x, y):
                    actual.add(frozenset((x, y)))
        if actual != expected:
            raise ContractViolation(
                "witness does not induce the template "
                f"(extra={sorted(map(tuple, actual - expected))}, "
                f"missing={sorted(map(tuple, expected - actual))})")


@dataclass(frozen=True)
class Obstruction:
    """Tagged union: exactly one of hole / small_at / big is set."""

    hole: Optional[tuple[int, ...]] = None
    small_at: Optional[frozenset] = None
    big: Optional[BigAT] = None

    @property
    def kind(self) -> str:
        if self.hole is not None:
            return "hole"
        if self.small_at is not None:
            return "small_at"
        return "big"


def shrink_to_minimal(g: Graph, vertices) -> frozenset:
    """Vertex-minimal non-interval subset of ``vertices``.

    One greedy pass in ascending id order suffices: once a vertex cannot be
    dropped (dropping it would leave an interval graph), later deletions only
    shrink the remainder further and cannot make it droppable again.
    """
    current = sorted(set(vertices))
    if is_interval(g.induced_subgraph(current)):
        raise ContractViolation("shrink_to_minimal needs a non-interval vertex set")
    for v in list(current):
        trial = [x for x in current if x != v]
        if not is_interval(g.induced_subgraph(trial)):
            current = trial
    return frozenset(current)


def _induces_cycle(g: Graph, vertices: frozenset) -> bool:
    sub = g.induced_subgraph(vertices)
    return sub.n >= 4 and all(sub.degree(v) == 2 for v in sub.vertices) \
        and len(sub.components()) == 1


def find_small_at(g: Graph, thorough: bool = False,
                  witness_hint=None) -> Optional[frozenset]:
    """A small (at most SMALL_AT_BOUND vertices) minimal AT witness, or None.

    The cheap mode shrinks the first asteroidal-triple witness only; when the
    minimal set it lands on is a big-family embedding or a long hole, a small
    AT elsewhere would go unnoticed.  The thorough mode keeps scanning AT
    triples in lexicographic order and shrinks every witness whose path union
    is small enough to possibly hide one, under explicit caps.  Solvers run
    the thorough scan before committing to the structured machinery, whose
    correctness depends on small obstructions being gone.
    """
    shrinks = 0

    def settle(witness) -> Optional[frozenset]:
        nonlocal shrinks
        shrinks += 1
        minimal = shrink_to_minimal(g, witness.vertex_set())
        if len(minimal) <= SMALL_AT_BOUND and not _induces_cycle(g, minimal):
            return minimal
        return None

    if witness_hint is not None:
        found = settle(witness_hint)
        if found is not None:
            return found
        if not thorough:
            return None

    for idx, witness in enumerate(iter_at_witnesses(g)):
        if idx >= THOROUGH_WITNESS_CAP or shrinks >= THOROUGH_SHRINK_CAP:
            break
        if witness_hint is not None and idx == 0 \
                and {witness.a, witness.b, witness.c} == \
                    {witness_hint.a, witness_hint.b, witness_hint.c}:
            continue
        if shrinks > 0 and len(witness.vertex_set()) > THOROUGH_UNION_CAP:
            continue
        found = settle(witness)
        if found is not None:
            return found
        if not thorough:
            return None
    return None


def find_small_obstruction(g: Graph, hole=None, at_witness=None,
                           thorough: bool = False) -> Optional[Obstruction]:
    """A short hole (length 4..8) if one exists, else a small AT, else None.

    Callers that already know the shortest hole or an AT witness can pass
    them in to avoid recomputation; ``thorough`` widens the small-AT hunt
    beyond the first witness (see find_small_at).
    """
    if hole is None:
        hole = find_chordless_cycle(g, 4)
    if hole is not None and len(hole) <= 8:
        return Obstruction(hole=tuple(hole))
    small = find_small_at(g, thorough=thorough, witness_hint=at_witness)
    if small is None:
        return None
    return Obstruction(small_at=small)


# -- minimum big AT ------------------------------------------------------------


def find_minimum_big_at(g: Graph) -> Optional[BigAT]:
    """Smallest-interior-path big AT of either type, preferring type 1 on ties.

    The scan walks ordered (shallow, center) pairs.  Interior candidates are
    the center's neighbors outside the shallow vertex's closed neighborhood;
    end candidates sit outside both closed neighborhoods.  A shortest
    end-to-end path whose interior stays inside the candidate set is
    automatically chordless, so every hit is a valid induced embedding of the
    template.  An embedding with interior shorter than MIN_BIG_PATH would be
    an obstruction the small-obstruction pass ought to have removed, so it
    raises StructureViolation.
    """
    full = g.full_mask
    best: Optional[tuple] = None  # (p, kind, c_pos, u_pos, w_pos, a_pos, path_mask)

    def scan(kind: int, pc: int, pu: int, pw: Optional[int],
             path_mask: int, a_mask: int, b_mask: int) -> None:
        nonlocal best
        for pa in g.positions(a_mask):
            dist = _restricted_bfs(g, pa, path_mask)
            bm = b_mask
            pb = 0
            while bm:
                if bm & 1 and pb != pa and not (g.adj_mask_pos(pa) >> pb & 1):
                    p_here = None
                    reach = g.adj_mask_pos(pb) & path_mask
                    i = 0
                    while reach:
                        if reach & 1:
                            d = dist.get(i)
                            if d is not None and (p_here is None or d < p_here):
                                p_here = d
                        reach >>= 1
                        i += 1
                    if p_here is not None and p_here >= 2:
                        if p_here < MIN_BIG_PATH:
                            raise StructureViolation(
                                "template embedding with a short interior path; "
                                "the graph still carries an unhandled small obstruction",
                                witness=(g.id_at(pa), g.id_at(pb), g.id_at(pc)))
                        if best is None or (p_here, kind) < (best[0], best[1]):
                            best = (p_here, kind, pc, pu, pw, pa, pb, path_mask)
                bm >>= 1
                pb += 1

    # type 1: center u adjacent to the whole interior, shallow c on u only
    for pc in range(g.n):
        closed_c = g.adj_mask_pos(pc) | (1 << pc)
        for pu in g.positions(g.adj_mask_pos(pc)):
            path_mask = g.adj_mask_pos(pu) & ~closed_c
            if path_mask.bit_count() < MIN_BIG_PATH:
                continue
            closed_u = g.adj_mask_pos(pu) | (1 << pu)
            end_mask = full & ~closed_u & ~closed_c
            if end_mask.bit_count() >= 2:
                scan(1, pc, pu, None, path_mask, end_mask, end_mask)

    # type 2: adjacent centers u,w both on the shallow vertex; interior in the
    # common neighborhood, each end attached to exactly one center
    for pc in range(g.n):
        closed_c = g.adj_mask_pos(pc) | (1 << pc)
        centers = list(g.positions(g.adj_mask_pos(pc)))
        for pu in centers:
            for pw in centers:
                if pw == pu or not (g.adj_mask_pos(pu) >> pw & 1):
                    continue
                path_mask = g.adj_mask_pos(pu) & g.adj_mask_pos(pw) & ~closed_c
                if path_mask.bit_count() < MIN_BIG_PATH:
                    continue
                closed_u = g.adj_mask_pos(pu) | (1 << pu)
                closed_w = g.adj_mask_pos(pw) | (1 << pw)
                a_mask = g.adj_mask_pos(pu) & ~closed_w & ~closed_c
                b_mask = g.adj_mask_pos(pw) & ~closed_u & ~closed_c
                if a_mask and b_mask:
                    scan(2, pc, pu, pw, path_mask, a_mask, b_mask)

    if best is None:
        return None
    p_len, kind, pc, pu, pw, pa, pb, path_mask = best
    allowed = path_mask | (1 << pa) | (1 << pb)
    ids_path = g.shortest_path(g.id_at(pa), g.id_at(pb), allowed)
    assert ids_path is not None and len(ids_path) == p_len + 2
    at = BigAT(kind=kind, a=g.id_at(pa), b=g.id_at(pb), c=g.id_at(pc),
               u=g.id_at(pu), w=None if pw is None else g.id_at(pw),
               path=tuple(ids_path[1:-1]))
    at.verify(g)
    return at


def _restricted_bfs(g: Graph, source: int, interior_mask: int) -> dict[int, int]:
    """BFS distances from ``source`` where every non-source vertex must lie in
    ``interior_mask``."""
    dist = {source: 0}
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        m = frontier
        i = 0
        while m:
            if m & 1:
                nxt |= g.adj_mask_pos(i)
            m >>= 1
            i += 1
        frontier = nxt & interior_mask & ~seen
        mm = frontier
        i = 0
        while mm:
            if mm & 1:
                dist[i] = d
            mm >>= 1
            i += 1
        seen |= frontier
    return dist
