"""Constants, the two appendix inequalities, and per-graph edge-bound checks.

Edge-count comparisons against ``n^2/4``-type bounds are done in exact integer
arithmetic; only the bounds involving ``c`` and ``a`` use floats.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .canon import are_isomorphic
from .criticality import is_diameter_k_critical, is_kt_critical
from .graph import Graph, complete_bipartite, degree_extremes, diameter

ROOT_TOL = 1e-12
IDENTITY_TOL = 1e-9
DEFAULT_THRESHOLD = 0.6756


@dataclass(frozen=True)
class Constants:
    c: float
    a: float
    threshold: float
    c_residual: float
    a_residual: float
    a_closed_form_gap: float
    root_crosscheck_gap: float

    @property
    def threshold_gap(self) -> float:
        """``a + threshold - 1``; must be at least ``-1e-4``."""
        return self.a + self.threshold - 1.0


@lru_cache(maxsize=None)
def constants(threshold: float = DEFAULT_THRESHOLD) -> Constants:
    r2 = math.sqrt(2.0)
    c = 2.0 + 2.0 * r2
    qa, qb, qc = 2.0 * c + 4.0, -4.0 * c, c
    a = (-qb - math.sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa)
    a_closed = (r2 - math.sqrt(2.0 - r2)) / 2.0
    c_num = float(max(np.roots([1.0, -4.0, -4.0]).real))
    a_num = float(min(np.roots([qa, qb, qc]).real))
    return Constants(
        c=c,
        a=a,
        threshold=threshold,
        c_residual=abs(c * c - 4.0 * c - 4.0),
        a_residual=abs(qa * a * a + qb * a + qc),
        a_closed_form_gap=abs(a - a_closed),
        root_crosscheck_gap=max(abs(c - c_num), abs(a - a_num)),
    )


def eval_f_A1(y: float, n: int) -> float:
    """``y + (y^2 - 2y)/c + C(n-1-y, 2)``, the binomial taken as a polynomial in ``y``."""
    c = constants().c
    return y + (y * y - 2.0 * y) / c + (n - 1 - y) * (n - 2 - y) / 2.0


def eval_g_A1(n: int) -> float:
    if n < 3:
        raise ValueError("needs n >= 3")
    return eval_f_A1(constants().a * n - 1.0, n) - (n * (n - 2) + 1) / 4.0


def f_A2_long(n: int) -> float:
    c = constants().c
    t = (2 * n - 4) / c
    return (t * t - 2 * t) / c + (n - t - 1) * (n - t - 2) / 2.0 + t - (n * n - 2 * n) / c


def f_A2_closed(n: int) -> float:
    return (3.0 * math.sqrt(2.0) - 4.0) * (n - 2) / 2.0


def eval_f_A2(n: int) -> float:
    if n < 2:
        raise ValueError("needs n >= 2")
    long_form = f_A2_long(n)
    closed = f_A2_closed(n)
    # terms are O(n^2), so allow rounding that grows with n beyond the base tolerance
    if abs(long_form - closed) > IDENTITY_TOL + 1e-13 * n * n:
        raise ArithmeticError(f"long and closed forms disagree at n={n}: {long_form} vs {closed}")
    return long_form


def ceil_quarter(x: int) -> int:
    return -(-x // 4)


@dataclass(frozen=True)
class BoundCheck:
    applicable: bool
    holds: bool
    values: dict = field(default_factory=dict)


class MurtySimonStatus(enum.Enum):
    STRICT = "strict"
    EQUALITY_BALANCED_BIPARTITE = "equality-balanced-bipartite"
    VIOLATION = "violation"


def check_murty_simon(g: Graph, trusted: bool = False) -> tuple[int, int, MurtySimonStatus]:
    if not trusted and not is_diameter_k_critical(g, 2):
        raise ValueError("graph is not diameter-2-critical")
    n, m = g.n, g.m
    bound = n * n // 4
    if m < bound:
        status = MurtySimonStatus.STRICT
    elif m == bound and are_isomorphic(g, complete_bipartite((n + 1) // 2, n // 2)):
        status = MurtySimonStatus.EQUALITY_BALANCED_BIPARTITE
    else:
        status = MurtySimonStatus.VIOLATION
    return m, bound, status


def _require_ttc3(g: Graph, trusted: bool) -> None:
    if not trusted and not is_kt_critical(g, 3):
        raise ValueError("graph is not 3_t-critical")


def min_degree_chain_bound(n: int, delta: int) -> float:
    """``delta + (delta^2 - 2 delta)/c + C(n-1-delta, 2)``."""
    c = constants().c
    return delta + (delta * delta - 2 * delta) / c + math.comb(n - 1 - delta, 2)


def check_theorem35(g: Graph, trusted: bool = False) -> BoundCheck:
    _require_ttc3(g, trusted)
    n, m = g.n, g.m
    delta, _ = degree_extremes(g)
    bound = ceil_quarter(n * (n - 2))
    chain = min_degree_chain_bound(n, delta)
    applicable = n >= 3 and delta <= constants().a * n - 1
    values = {"n": n, "m": m, "delta": delta, "bound": bound, "chain_bound": chain,
              "chain_holds": m >= chain}
    return BoundCheck(applicable, not applicable or m > bound, values)


def check_theorem36(g: Graph, threshold: float = DEFAULT_THRESHOLD, trusted: bool = False) -> BoundCheck:
    if not trusted and not is_diameter_k_critical(g, 2):
        raise ValueError("graph is not diameter-2-critical")
    n, m = g.n, g.m
    _, big = degree_extremes(g)
    applicable = big >= Fraction(str(threshold)) * n
    bound = n * n // 4
    return BoundCheck(applicable, not applicable or m < bound,
                      {"n": n, "m": m, "max_degree": big, "bound": bound})


def check_theorem24(g: Graph, trusted: bool = False) -> BoundCheck:
    _require_ttc3(g, trusted)
    n, m = g.n, g.m
    diam = diameter(g)
    applicable = diam == 3
    return BoundCheck(applicable, not applicable or 4 * m >= n * (n - 2),
                      {"n": n, "m": m, "diameter": diam})


def check_theorem25(g: Graph, large: bool = False, trusted: bool = False) -> BoundCheck:
    """Min-degree thresholds: ``delta >= 0.3n``, or ``n >= 2000`` and ``delta >= 0.321n``."""
    _require_ttc3(g, trusted)
    n, m = g.n, g.m
    delta, _ = degree_extremes(g)
    if large:
        applicable = n >= 2000 and 1000 * delta >= 321 * n
    else:
        applicable = 10 * delta >= 3 * n
    bound = ceil_quarter(n * (n - 2))
    return BoundCheck(applicable, not applicable or m > bound,
                      {"n": n, "m": m, "delta": delta, "bound": bound})


def two_clique_complement_size(n: int, smaller: int) -> tuple[int, int]:
    """Edges of ``K_s + K_(n-s)`` against ``ceil(n(n-2)/4)``."""
    return math.comb(smaller, 2) + math.comb(n - smaller, 2), ceil_quarter(n * (n - 2))
