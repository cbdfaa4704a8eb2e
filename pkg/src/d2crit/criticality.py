"""Diameter-critical and total-domination-critical classifiers."""

from __future__ import annotations

import enum

from .domination import has_total_dominating_set
from .graph import (
    Graph,
    complement,
    components,
    diameter,
    has_diameter_at_most_2,
)


def _edge_keeps_diameter_2(g: Graph, u: int, v: int) -> bool:
    """Does ``g - uv`` still have diameter at most 2, given ``g`` does?

    Only pairs with an endpoint in ``{u, v}`` can lose their short paths, so it is
    enough to re-check the two-step reach of ``u`` and ``v``.
    """
    adj = g.adj
    full = g.full
    for a, b in ((u, v), (v, u)):
        row = adj[a] & ~(1 << b)
        reach = row | (1 << a)
        r = row
        while r:
            low = r & -r
            r ^= low
            reach |= adj[low.bit_length() - 1]
        if reach != full:
            return False
    return True


def is_diameter_k_critical(g: Graph, k: int) -> bool:
    if g.n < 2:
        return False
    if k == 2:
        if not has_diameter_at_most_2(g) or g.m == g.n * (g.n - 1) // 2:
            return False
        return not any(_edge_keeps_diameter_2(g, u, v) for u, v in g.edges())
    if diameter(g) != k:
        return False
    return all(diameter(g.remove_edge(u, v)) > k for u, v in g.edges())


def is_diameter_k_critical_slow(g: Graph, k: int) -> bool:
    """Reference version: full diameter recomputation after every deletion."""
    if g.n < 2 or diameter(g) != k:
        return False
    return all(diameter(g.remove_edge(u, v)) > k for u, v in g.edges())


def total_domination_exactly(g: Graph, k: int) -> bool:
    return has_total_dominating_set(g, k) and not has_total_dominating_set(g, k - 1)


def is_kt_critical(g: Graph, k: int) -> bool:
    if g.n < 2 or not total_domination_exactly(g, k):
        return False
    return all(has_total_dominating_set(g.add_edge(u, v), k - 1) for u, v in g.non_edges())


def is_kt_supercritical(g: Graph, k: int) -> bool:
    if not is_kt_critical(g, k):
        return False
    pairs = list(g.non_edges())
    if not pairs:
        return False
    return all(total_domination_exactly(g.add_edge(u, v), k - 2) for u, v in pairs)


def is_union_two_complete(g: Graph) -> bool:
    comps = components(g)
    if len(comps) != 2:
        return False
    for comp in comps:
        size = comp.bit_count()
        if size < 2:
            return False
        for u in range(g.n):
            if comp >> u & 1 and g.adj[u] != comp & ~(1 << u):
                return False
    return True


class DualClass(enum.Enum):
    DUAL_3T_CRITICAL = "3t-critical"
    DUAL_4T_SUPERCRITICAL = "4t-supercritical"
    ISOLATED_IN_COMPLEMENT = "isolated-in-complement"
    VIOLATION = "violation"


def classify_complement(g: Graph) -> DualClass:
    """Classify the complement of a diameter-2-critical graph.

    A graph with a universal vertex has a complement with an isolated vertex,
    whose total domination number is undefined; among diameter-2-critical
    graphs these are exactly the stars, reported as ``ISOLATED_IN_COMPLEMENT``.
    """
    if not is_diameter_k_critical(g, 2):
        raise ValueError("classify_complement needs a diameter-2-critical graph")
    h = complement(g)
    if any(row == 0 for row in h.adj):
        return DualClass.ISOLATED_IN_COMPLEMENT
    if is_kt_critical(h, 3):
        return DualClass.DUAL_3T_CRITICAL
    if is_kt_supercritical(h, 4):
        return DualClass.DUAL_4T_SUPERCRITICAL
    return DualClass.VIOLATION

