"""Quasi-edges, quasi-cliques and the counting inequality over common neighbourhoods.

All operations assume a 3_t-critical graph. The ``trusted`` flag skips the
(expensive) criticality check when the caller has already established it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bounds import constants
from .criticality import is_kt_critical
from .graph import Graph, VertexSet, members


@dataclass(frozen=True, order=True)
class QuasiEdge:
    """Edge ``{anchor, partner}`` associated with the nonadjacent pair ``{anchor, supplement}``.

    ``anchor`` and ``partner`` together dominate every vertex except ``supplement``.
    """

    anchor: int
    partner: int
    supplement: int

    @property
    def edge(self) -> frozenset[int]:
        return frozenset((self.anchor, self.partner))

    @property
    def pair(self) -> frozenset[int]:
        return frozenset((self.anchor, self.supplement))


@dataclass(frozen=True)
class QuasiEdgeFamily:
    """Members of the family with their associations.

    ``edges`` is the set reading; ``associations`` keeps one entry per
    (edge, associated pair), so the two counts differ exactly when an edge is
    shared by two pairs.
    """

    associations: tuple[QuasiEdge, ...]

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(q.edge for q in self.associations)

    @property
    def injective(self) -> bool:
        return len(self.edges) == len(self.associations)


def _require_ttc3(g: Graph, trusted: bool) -> None:
    if not trusted and not is_kt_critical(g, 3):
        raise ValueError("graph is not 3_t-critical")


def _closed(g: Graph, u: int) -> int:
    return g.adj[u] | (1 << u)


def find_quasi_edges(g: Graph, u: int, v: int) -> list[QuasiEdge]:
    """Quasi-edges of the nonadjacent pair ``{u, v}``, both orientations, sorted."""
    if u == v:
        raise ValueError("pair endpoints coincide")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent")
    out = []
    full = g.full
    for a, b in ((u, v), (v, u)):
        target = full & ~(1 << b)
        base = _closed(g, a)
        for w in members(g.adj[a] & ~g.adj[b]):
            if base | _closed(g, w) == target:
                out.append(QuasiEdge(a, w, b))
    out.sort()
    return out


def undominated(g: Graph, q: QuasiEdge) -> VertexSet:
    return g.full & ~(_closed(g, q.anchor) | _closed(g, q.partner))


def _pairs_inside(g: Graph, s: VertexSet) -> list[tuple[int, int]]:
    return [(x, y) for x, y in combinations(members(s), 2) if not g.has_edge(x, y)]


def is_quasi_clique(g: Graph, s: VertexSet, trusted: bool = False) -> bool:
    _require_ttc3(g, trusted)
    for x, y in _pairs_inside(g, s):
        qs = find_quasi_edges(g, x, y)
        if not qs:
            return False
        if any(s >> q.partner & 1 for q in qs):
            return False
    return True


def associated_edges(g: Graph, s: VertexSet, trusted: bool = False) -> set[frozenset[int]]:
    if not is_quasi_clique(g, s, trusted):
        raise ValueError("vertex set is not a quasi-clique")
    out = {frozenset(e) for e in g.edges() if s >> e[0] & 1 and s >> e[1] & 1}
    for x, y in _pairs_inside(g, s):
        out.update(q.edge for q in find_quasi_edges(g, x, y))
    return out


def quasi_edge_family(g: Graph, a: VertexSet, b: VertexSet, trusted: bool = False) -> QuasiEdgeFamily:
    """Quasi-edges from ``a`` into ``b`` whose associated pair lies inside ``a``."""
    if a & b:
        raise ValueError("the two vertex sets must be disjoint")
    _require_ttc3(g, trusted)
    found = []
    for x, y in _pairs_inside(g, a):
        found.extend(q for q in find_quasi_edges(g, x, y) if b >> q.partner & 1)
    return QuasiEdgeFamily(tuple(sorted(found)))


def common_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    if not s:
        raise ValueError("common neighbourhood of an empty set")
    out = g.full
    for u in members(s):
        out &= g.adj[u]
    return out


@dataclass(frozen=True)
class CountingCheck:
    common: VertexSet
    induced_edges: int
    family: QuasiEdgeFamily
    rhs: float

    @property
    def lhs(self) -> int:
        return self.induced_edges + len(self.family.associations)

    @property
    def lhs_set(self) -> int:
        return self.induced_edges + len(self.family.edges)

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def check_lemma33(g: Graph, s: VertexSet, trusted: bool = False) -> CountingCheck:
    """Edges inside ``S*`` plus quasi-edges from ``S*`` to the rest, against ``(|S*|^2 - 2|S*|)/c``."""
    _require_ttc3(g, trusted)
    star = common_neighborhood(g, s)
    k = star.bit_count()
    rest = g.full & ~(star | s)
    family = quasi_edge_family(g, star, rest, trusted=True)
    return CountingCheck(star, g.induced_edge_count(star), family, (k * k - 2 * k) / constants().c)


def check_lemma34(g: Graph, v: int, trusted: bool = False) -> bool:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    _require_ttc3(g, trusted)
    return is_quasi_clique(g, g.full & ~_closed(g, v), trusted=True)
