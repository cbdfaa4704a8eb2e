import random

import pytest
from hypothesis import given, settings

from d2crit.domination import (
    domination_number,
    dominates,
    has_total_dominating_set,
    total_domination_number,
    totally_dominates,
)
from d2crit.graph import INFINITE, build_graph, complete_graph, cycle_graph, empty_graph, members, vset

from conftest import graphs, random_graph
from oracles import least_mask, subset_domination

TWO_K2 = build_graph(4, [(0, 1), (2, 3)])


def test_dominates_examples(c5):
    assert dominates(c5, c5.full, c5.full)
    assert not dominates(c5, vset([0, 4]), c5.full)
    assert dominates(c5, vset([0, 2]), c5.full)


def test_totally_dominates_examples(c5):
    k4 = complete_graph(4)
    assert totally_dominates(k4, vset([0, 1]), k4.full)
    assert not totally_dominates(c5, vset([0, 2]), c5.full)
    g = build_graph(3, [(0, 1)])
    assert not totally_dominates(g, g.full, g.full)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_domination_of_complete(n):
    assert domination_number(complete_graph(n)).number == 1


def test_domination_examples(c5):
    res = domination_number(c5)
    assert res.number == 2
    assert res.witness == vset([0, 2])
    assert domination_number(empty_graph(4)).number == 4


@pytest.mark.parametrize("n", [2, 3, 6])
def test_total_domination_of_complete(n):
    assert total_domination_number(complete_graph(n)).number == 2


def test_total_domination_examples(c5):
    res = total_domination_number(c5)
    assert res.number == 3
    assert res.witness == vset([0, 1, 2])
    assert total_domination_number(TWO_K2).number == 4


def test_isolated_vertex_gives_infinite():
    res = total_domination_number(build_graph(3, [(0, 1)]))
    assert res.number == INFINITE and res.witness is None and not res.finite


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        domination_number(empty_graph(0))
    with pytest.raises(ValueError):
        total_domination_number(empty_graph(0))


def _check_against_oracle(g):
    dom = domination_number(g)
    tot = total_domination_number(g)
    assert dom.number == subset_domination(g, total=False)
    assert tot.number == subset_domination(g, total=True)
    assert dom.witness == least_mask(g, dom.number, total=False)
    if tot.finite:
        assert tot.witness == least_mask(g, tot.number, total=True)


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_solver_matches_subset_oracle(g):
    _check_against_oracle(g)


def test_solver_matches_oracle_on_sparse_and_dense_n12():
    rng = random.Random(7)
    for p in (0.15, 0.3, 0.6, 0.85):
        for _ in range(5):
            _check_against_oracle(random_graph(rng, 12, p))


@given(graphs(min_n=1, max_n=9))
def test_invariants(g):
    dom = domination_number(g)
    tot = total_domination_number(g)
    assert len(members(dom.witness)) == dom.number
    assert dominates(g, dom.witness, g.full)
    if tot.finite:
        assert len(members(tot.witness)) == tot.number
        assert totally_dominates(g, tot.witness, g.full)
        assert dom.number <= tot.number
        if g.n >= 2:
            assert tot.number >= 2
    else:
        assert any(row == 0 for row in g.adj)


@given(graphs(min_n=2, max_n=8))
def test_adding_an_edge_never_increases(g):
    dom = domination_number(g).number
    tot = total_domination_number(g).number
    for u, v in g.non_edges():
        h = g.add_edge(u, v)
        assert domination_number(h).number <= dom
        assert total_domination_number(h).number <= tot


@given(graphs(min_n=1, max_n=8))
def test_decision_form_agrees(g):
    tot = total_domination_number(g).number
    for k in range(1, g.n + 1):
        assert has_total_dominating_set(g, k) == (tot <= k)
