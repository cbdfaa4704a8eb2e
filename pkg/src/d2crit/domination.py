"""Domination and total domination: predicates and exact solvers.

The solvers are a branch and bound over bit masks. At each node the search
picks the uncovered vertex with the fewest admissible coverers and branches
on those coverers, most-new-coverage first; each tried coverer is excluded
from later sibling branches so the subtrees are disjoint. A greedy cover
seeds the upper bound and ``ceil(uncovered / best single coverage)`` is the
lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import INFINITE, Graph, VertexSet, members


_calls = [0]


def solver_calls() -> int:
    """Number of exact-solver invocations in this process so far."""
    return _calls[0]


@dataclass(frozen=True)
class DominationResult:
    number: int | float
    witness: VertexSet | None

    @property
    def finite(self) -> bool:
        return self.number != INFINITE


def dominates(g: Graph, x: VertexSet, y: VertexSet) -> bool:
    covered = x
    for u in members(x):
        covered |= g.adj[u]
    return y & ~covered == 0


def totally_dominates(g: Graph, x: VertexSet, y: VertexSet) -> bool:
    covered = 0
    for u in members(x):
        covered |= g.adj[u]
    return y & ~covered == 0


def _cover_rows(g: Graph, total: bool) -> list[int]:
    # rows are symmetric, so rows[u] is also the set of vertices covering u
    if total:
        return list(g.adj)
    return [row | (1 << u) for u, row in enumerate(g.adj)]


def _has_isolated(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def _greedy(rows: list[int], full: int, chosen: int, excluded: int) -> tuple[int, int] | None:
    covered = 0
    for u in members(chosen):
        covered |= rows[u]
    size = chosen.bit_count()
    while covered != full:
        best_v, best_gain = -1, 0
        for v in members(full & ~chosen & ~excluded):
            gain = (rows[v] & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_v < 0:
            return None
        chosen |= 1 << best_v
        covered |= rows[best_v]
        size += 1
    return size, chosen


class _Search:
    """One branch-and-bound run; finds a cover of size ``< limit`` or proves none."""

    __slots__ = ("rows", "full", "best_size", "best_set", "stop_at_first")

    def __init__(self, rows: list[int], full: int, limit: int, stop_at_first: bool):
        self.rows = rows
        self.full = full
        self.best_size = limit
        self.best_set: int | None = None
        self.stop_at_first = stop_at_first

    def run(self, chosen: int, excluded: int) -> None:
        covered = 0
        for u in members(chosen):
            covered |= self.rows[u]
        self._visit(chosen, chosen.bit_count(), covered, excluded)

    def _visit(self, chosen: int, size: int, covered: int, excluded: int) -> bool:
        uncovered = self.full & ~covered
        if not uncovered:
            if size < self.best_size:
                self.best_size = size
                self.best_set = chosen
                return self.stop_at_first
            return False
        if size + 1 >= self.best_size:
            return False
        rows = self.rows
        free = self.full & ~chosen & ~excluded
        target_options = -1
        n_options = 1 << 30
        u_mask = uncovered
        while u_mask:
            low = u_mask & -u_mask
            u = low.bit_length() - 1
            u_mask ^= low
            opts = rows[u] & free
            k = opts.bit_count()
            if k < n_options:
                n_options, target_options = k, opts
                if k <= 1:
                    break
        if n_options == 0:
            return False
        max_gain = 0
        f = free
        while f:
            low = f & -f
            f ^= low
            gain = (rows[low.bit_length() - 1] & uncovered).bit_count()
            if gain > max_gain:
                max_gain = gain
        need = -(-uncovered.bit_count() // max_gain)
        if size + need >= self.best_size:
            return False
        order = sorted(
            members(target_options),
            key=lambda v: (-(rows[v] & uncovered).bit_count(), v),
        )
        for v in order:
            bit = 1 << v
            if self._visit(chosen | bit, size + 1, covered | rows[v], excluded):
                return True
            excluded |= bit
        return False


def _minimum_size(g: Graph, total: bool) -> int | float:
    _calls[0] += 1
    if total and _has_isolated(g):
        return INFINITE
    rows = _cover_rows(g, total)
    full = g.full
    greedy = _greedy(rows, full, 0, 0)
    assert greedy is not None
    search = _Search(rows, full, greedy[0], stop_at_first=False)
    search.run(0, 0)
    return search.best_size


def _feasible(rows: list[int], full: int, size: int, chosen: int, excluded: int) -> bool:
    """Is there a cover of size exactly ``size`` containing ``chosen`` and avoiding ``excluded``?"""
    if chosen.bit_count() > size:
        return False
    search = _Search(rows, full, size + 1, stop_at_first=True)
    search.run(chosen, excluded)
    # a smaller cover can be padded with free vertices up to ``size``
    if search.best_set is None:
        return False
    return (full & ~excluded).bit_count() >= size


def _least_mask_witness(g: Graph, size: int, total: bool) -> VertexSet:
    """Numerically smallest mask among minimum covers: clear high bits first."""
    rows = _cover_rows(g, total)
    full = g.full
    chosen = 0
    excluded = 0
    for v in range(g.n - 1, -1, -1):
        if _feasible(rows, full, size, chosen, excluded | (1 << v)):
            excluded |= 1 << v
        else:
            chosen |= 1 << v
    assert chosen.bit_count() == size
    return chosen


def domination_number(g: Graph) -> DominationResult:
    if g.n == 0:
        raise ValueError("domination number of the empty graph (n = 0) is undefined")
    size = _minimum_size(g, total=False)
    return DominationResult(size, _least_mask_witness(g, int(size), total=False))


def total_domination_number(g: Graph) -> DominationResult:
    if g.n == 0:
        raise ValueError("total domination number of the empty graph (n = 0) is undefined")
    size = _minimum_size(g, total=True)
    if size == INFINITE:
        return DominationResult(INFINITE, None)
    return DominationResult(size, _least_mask_witness(g, int(size), total=True))


def domination_size(g: Graph) -> int:
    """Domination number without a witness."""
    return int(_minimum_size(g, total=False))


def total_domination_size(g: Graph) -> int | float:
    """Total domination number without a witness; INFINITE if ``g`` has an isolated vertex."""
    return _minimum_size(g, total=True)


def has_total_dominating_set(g: Graph, k: int) -> bool:
    """Does ``g`` have a total dominating set with at most ``k`` vertices?"""
    _calls[0] += 1
    if g.n == 0:
        return True
    if k < 2 or _has_isolated(g):
        return False
    adj = g.adj
    full = g.full
    if k == 2:
        for v in range(g.n):
            rv = adj[v]
            lower = rv & ((1 << v) - 1)
            while lower:
                low = lower & -lower
                lower ^= low
                if rv | adj[low.bit_length() - 1] == full:
                    return True
        return False
    search = _Search(list(adj), full, k + 1, stop_at_first=True)
    search.run(0, 0)
    return search.best_set is not None
