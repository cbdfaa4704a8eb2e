"""Isomorph-free generation of small graphs.

Graphs on ``n`` vertices are grown from the complete list on ``n - 1``
vertices by adding a vertex with every possible neighbourhood (canonical
augmentation). A child ``G`` with new vertex ``v`` is kept only when
``G - v`` is isomorphic to ``G - w``, where ``w`` is the canonical deletion
vertex of ``G``: the last vertex in canonical order among those with the
largest ``(degree, neighbour degree sum)``. That pins every class to a single
parent class; isomorphic siblings of one parent are collapsed by canonical
form. Emitted graphs are relabelled into canonical order.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .canon import CanonicalForm, canonical_form, canonical_labelling
from .criticality import is_diameter_k_critical, is_kt_critical, is_kt_supercritical
from .graph import Graph, has_diameter_at_most_2, is_connected

GUARD_N = 10
_CACHE_LEVELS_UP_TO = 8


class Filter(enum.Enum):
    ALL = "all"
    CONNECTED = "connected"
    DIAMETER2 = "diameter2"
    DIAMETER2_CRITICAL = "d2critical"
    TTC3 = "ttc3"
    SUPER4 = "super4"

    @classmethod
    def parse(cls, name: str) -> Filter:
        key = name.strip().lower()
        for f in cls:
            if key in (f.value, f.name.lower()):
                return f
        raise ValueError(f"unknown filter {name!r}; choose from {[f.value for f in cls]}")


def _isolate_free(g: Graph) -> bool:
    return all(g.adj)


def _diameter_exactly_2(g: Graph) -> bool:
    return g.n >= 2 and g.m < g.n * (g.n - 1) // 2 and has_diameter_at_most_2(g)


# cheap predicates first; each chain implies the previous entries' semantics
_PIPELINES: dict[Filter, tuple[Callable[[Graph], bool], ...]] = {
    Filter.ALL: (),
    Filter.CONNECTED: (is_connected,),
    Filter.DIAMETER2: (_diameter_exactly_2,),
    Filter.DIAMETER2_CRITICAL: (_diameter_exactly_2, lambda g: is_diameter_k_critical(g, 2)),
    Filter.TTC3: (_isolate_free, lambda g: is_kt_critical(g, 3)),
    Filter.SUPER4: (_isolate_free, lambda g: is_kt_supercritical(g, 4)),
}


def passes(g: Graph, flt: Filter) -> bool:
    return all(pred(g) for pred in _PIPELINES[flt])


@dataclass(frozen=True)
class EnumerationTask:
    n: int
    filter: Filter = Filter.ALL
    partition: tuple[int, int] | None = None
    """``(index, count)``: keep only subtrees whose parent index is ``index`` mod ``count``."""
    override_guard: bool = False

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.n > GUARD_N and not self.override_guard:
            raise ValueError(f"n={self.n} exceeds the exhaustive guard n<={GUARD_N}; set override_guard")
        if self.partition is not None:
            index, count = self.partition
            if count < 1 or not 0 <= index < count:
                raise ValueError(f"bad partition {self.partition}")

    def describe(self) -> str:
        part = "" if self.partition is None else f" part {self.partition[0]}/{self.partition[1]}"
        return f"n={self.n} filter={self.filter.value}{part}"


def _invariants(adj: list[int]) -> list[tuple[int, int]]:
    degs = [row.bit_count() for row in adj]
    out = []
    for row in adj:
        s = 0
        r = row
        while r:
            low = r & -r
            r ^= low
            s += degs[low.bit_length() - 1]
        out.append((row.bit_count(), s))
    return out


def _in_orbit(auts: tuple[tuple[int, ...], ...], a: int, b: int) -> bool:
    seen = {a}
    frontier = [a]
    while frontier:
        x = frontier.pop()
        for perm in auts:
            y = perm[x]
            if y == b:
                return True
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return False


def _children(
    parent: Graph, parent_form: CanonicalForm, preds: tuple[Callable[[Graph], bool], ...]
) -> Iterator[Graph]:
    p = parent.n
    v = p
    bit_v = 1 << v
    pdeg = parent.degrees()
    seen: set[CanonicalForm] = set()
    for s in range(1 << p):
        dv = s.bit_count()
        if any(pdeg[u] + (s >> u & 1) > dv for u in range(p)):
            continue
        adj = [row | bit_v if s >> u & 1 else row for u, row in enumerate(parent.adj)]
        adj.append(s)
        inv = _invariants(adj)
        top = max(inv)
        if inv[v] != top:
            continue
        child = Graph(p + 1, adj)
        if preds and not all(pred(child) for pred in preds):
            continue
        lab = canonical_labelling(child)
        w = next(x for x in reversed(lab.order) if inv[x] == top)
        if w != v and not _in_orbit(lab.automorphisms, w, v):
            if canonical_form(child.delete_vertex(w)) != parent_form:
                continue
        if lab.form in seen:
            continue
        seen.add(lab.form)
        yield child.relabel(lab.order)


@lru_cache(maxsize=None)
def _complete_level(n: int) -> tuple[Graph, ...]:
    return tuple(_generate_level(n, None, ()))


def _generate_level(
    n: int, partition: tuple[int, int] | None, preds: tuple[Callable[[Graph], bool], ...]
) -> Iterator[Graph]:
    if n == 0:
        if not partition or partition[0] == 0:
            g = Graph(0, [])
            if all(pred(g) for pred in preds):
                yield g
        return
    if n == 1:
        if not partition or partition[0] == 0:
            g = Graph(1, [0])
            if all(pred(g) for pred in preds):
                yield g
        return
    parents = _complete_level(n - 1) if n - 1 <= _CACHE_LEVELS_UP_TO else tuple(
        _generate_level(n - 1, None, ())
    )
    for index, parent in enumerate(parents):
        if partition and index % partition[1] != partition[0]:
            continue
        yield from _children(parent, canonical_form(parent), preds)


def iter_graphs(task: EnumerationTask) -> Iterator[Graph]:
    """One canonical representative per isomorphism class passing the task's filter."""
    preds = _PIPELINES[task.filter]
    if task.partition is None and not preds and task.n <= _CACHE_LEVELS_UP_TO:
        yield from _complete_level(task.n)
        return
    yield from _generate_level(task.n, task.partition, preds)


def generate(task: EnumerationTask, sink: Callable[[Graph], object]) -> int:
    count = 0
    for g in iter_graphs(task):
        sink(g)
        count += 1
    return count


def brute_force_classes(n: int) -> list[Graph]:
    """Isomorphism classes by labelled dedupe: mark the full orbit of every new graph.

    Independent of the canonical labelling; practical for ``n <= 7``.
    """
    import numpy as np

    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    index = {pr: k for k, pr in enumerate(pairs)}
    e = len(pairs)
    if n > 7:
        raise ValueError("brute_force_classes is limited to n <= 7")
    perms = list(itertools.permutations(range(n)))
    pair_map = np.empty((len(perms), e), dtype=np.int64)
    for r, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            pair_map[r, k] = index[(a, b) if a < b else (b, a)]
    weights = np.left_shift(np.int64(1), pair_map)
    seen = np.zeros(1 << e, dtype=bool)
    reps: list[Graph] = []
    code = 0
    total = 1 << e
    while code < total:
        if seen[code]:
            nxt = np.flatnonzero(~seen[code:])
            if nxt.size == 0:
                break
            code += int(nxt[0])
        bits = np.array([(code >> k) & 1 for k in range(e)], dtype=np.int64)
        seen[(weights * bits).sum(axis=1)] = True
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        reps.append(Graph(n, adj))
    return reps
