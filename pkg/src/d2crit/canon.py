"""Canonical labelling by partition refinement and individualisation.

The search starts from the degree partition, refines to the coarsest
equitable partition, then individualises vertices of the first smallest
non-singleton cell. Every leaf is a vertex ordering; the canonical code is
the numerically smallest upper-triangle bit string (graph6 bit order, first
pair most significant) among the leaves. Leaves with equal codes yield
automorphisms, which prune sibling subtrees lying in the same orbit of the
stabiliser of the current path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, members


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    def to_graph(self) -> Graph:
        n = self.n
        adj = [0] * n
        pos = n * (n - 1) // 2 - 1
        for j in range(1, n):
            for i in range(j):
                if self.bits >> pos & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                pos -= 1
        return Graph(n, adj)


@dataclass(frozen=True)
class Labelling:
    form: CanonicalForm
    order: tuple[int, ...]
    """``order[i]`` is the vertex placed at canonical position ``i``."""
    automorphisms: tuple[tuple[int, ...], ...]
    """Automorphisms found during the search (not necessarily a full generating set)."""


def _refine(adj: tuple[int, ...], cells: list[int], splitters: list[int]) -> list[int]:
    queue = list(splitters)
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        out: list[int] = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            c = cell
            while c:
                low = c & -c
                c ^= low
                k = (adj[low.bit_length() - 1] & w).bit_count()
                groups[k] = groups.get(k, 0) | low
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for k in sorted(groups):
                out.append(groups[k])
                queue.append(groups[k])
        if changed:
            cells = out
            if all(cell & (cell - 1) == 0 for cell in cells):
                break
    return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _degree_partition(g: Graph) -> list[int]:
    by_degree: dict[int, int] = {}
    for u, row in enumerate(g.adj):
        d = row.bit_count()
        by_degree[d] = by_degree.get(d, 0) | (1 << u)
    return [by_degree[d] for d in sorted(by_degree)]


def _orbit_roots(n: int, auts: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in auts:
        for x, y in enumerate(perm):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(n)]


class _Search:
    __slots__ = ("adj", "n", "best_code", "best_order", "auts")

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best_code = -1
        self.best_order: list[int] = []
        self.auts: list[tuple[int, ...]] = []

    def visit(self, cells: list[int], path: list[int]) -> None:
        target = 0
        size = self.n + 1
        for cell in cells:
            k = cell.bit_count()
            if 1 < k < size:
                target, size = cell, k
                if k == 2:
                    break
        if not target:
            order = [c.bit_length() - 1 for c in cells]
            code = _code(self.adj, order)
            if self.best_code < 0 or code < self.best_code:
                self.best_code, self.best_order = code, order
            elif code == self.best_code:
                perm = [0] * self.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.auts.append(tuple(perm))
            return
        idx = cells.index(target)
        tried: list[int] = []
        n_auts_seen = -1
        roots: list[int] = []
        for v in members(target):
            if tried:
                if len(self.auts) != n_auts_seen:
                    n_auts_seen = len(self.auts)
                    fixing = [a for a in self.auts if all(a[p] == p for p in path)]
                    roots = _orbit_roots(self.n, fixing)
                if any(roots[t] == roots[v] for t in tried):
                    continue
            bit = 1 << v
            child = cells[:idx] + [bit, target & ~bit] + cells[idx + 1:]
            child = _refine(self.adj, child, [bit])
            tried.append(v)
            self.visit(child, path + [v])


def canonical_labelling(g: Graph) -> Labelling:
    if g.n == 0:
        return Labelling(CanonicalForm(0, 0), (), ())
    cells = _degree_partition(g)
    cells = _refine(g.adj, cells, list(cells))
    search = _Search(g)
    search.visit(cells, [])
    return Labelling(
        CanonicalForm(g.n, search.best_code),
        tuple(search.best_order),
        tuple(search.auts),
    )


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labelling(g).form


def canonical_graph(g: Graph) -> Graph:
    """``g`` relabelled into its canonical vertex order."""
    return g.relabel(canonical_labelling(g).order)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
