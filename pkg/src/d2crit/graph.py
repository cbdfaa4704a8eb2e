"""Bitset graphs, neighbourhood and distance primitives."""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf
"""Distance between vertices in different components; compares greater than any int."""

VertexSet = int
"""A vertex subset stored as a bit mask (bit ``v`` set iff ``v`` is a member)."""


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[u]`` is the open neighbourhood of ``u`` as a bit mask. Instances are
    immutable; the editing helpers return new graphs.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> VertexSet:
        return self.adj[u]

    def closed_neighbors(self, u: int) -> VertexSet:
        return self.adj[u] | (1 << u)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, ordered by ``v`` then ``u``."""
        for v in range(self.n):
            row = self.adj[v] & ((1 << v) - 1)
            for u in members(row):
                yield (u, v)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = ~self.adj[v] & ((1 << v) - 1)
            for u in members(row):
                yield (u, v)

    def add_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def remove_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def delete_vertex(self, w: int) -> Graph:
        """Remove ``w`` and shift the higher vertices down by one."""
        low = (1 << w) - 1
        adj = []
        for u, row in enumerate(self.adj):
            if u == w:
                continue
            adj.append((row & low) | ((row >> (w + 1)) << w))
        return Graph(self.n - 1, adj)

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = []
        for v in order:
            row = 0
            for u in members(self.adj[v]):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(self.n, adj)

    def induced_edge_count(self, s: VertexSet) -> int:
        return sum((self.adj[u] & s).bit_count() for u in members(s)) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << u) for u in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, adj)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~row & ~(1 << u) for u, row in enumerate(g.adj)])


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range 0..{g.n - 1}")


def bfs_layers(g: Graph, source: int) -> list[VertexSet]:
    """Breadth-first layers from ``source``: layer ``d`` holds vertices at distance ``d``."""
    adj = g.adj
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        if frontier:
            seen |= frontier
            layers.append(frontier)
    return layers


def distance(g: Graph, u: int, v: int) -> int | float:
    _check_vertex(g, u)
    _check_vertex(g, v)
    target = 1 << v
    for d, layer in enumerate(bfs_layers(g, u)):
        if layer & target:
            return d
    return INFINITE


def eccentricity(g: Graph, u: int) -> int | float:
    layers = bfs_layers(g, u)
    reached = 0
    for layer in layers:
        reached |= layer
    if reached != g.full:
        return INFINITE
    return len(layers) - 1


def diameter(g: Graph) -> int | float:
    if g.n == 0:
        raise ValueError("diameter of the empty graph (n = 0) is undefined")
    best: int | float = 0
    for u in range(g.n):
        e = eccentricity(g, u)
        if e == INFINITE:
            return INFINITE
        if e > best:
            best = e
    return best


def has_diameter_at_most_2(g: Graph) -> bool:
    """Fast test for ``diameter(g) <= 2`` via two-step neighbourhood unions."""
    adj = g.adj
    full = g.full
    for u in range(g.n):
        reach = adj[u] | (1 << u)
        row = adj[u]
        while row:
            low = row & -row
            reach |= adj[low.bit_length() - 1]
            row ^= low
        if reach != full:
            return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 0
    for layer in bfs_layers(g, 0):
        seen |= layer
    return seen == g.full


def components(g: Graph) -> list[VertexSet]:
    """Connected components as masks, ordered by smallest vertex."""
    left = g.full
    out = []
    while left:
        src = (left & -left).bit_length() - 1
        comp = 0
        for layer in bfs_layers(g, src):
            comp |= layer
        out.append(comp)
        left &= ~comp
    return out


def degree_extremes(g: Graph) -> tuple[int, int]:
    if g.n == 0:
        raise ValueError("degree extremes of the empty graph (n = 0) are undefined")
    degs = g.degrees()
    return min(degs), max(degs)
