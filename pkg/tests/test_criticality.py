import pytest
from hypothesis import given, settings

from d2crit.criticality import (
    DualClass,
    classify_complement,
    is_diameter_k_critical,
    is_diameter_k_critical_slow,
    is_kt_critical,
    is_kt_supercritical,
    is_union_two_complete,
)
from d2crit.enumerate import EnumerationTask, Filter, iter_graphs
from d2crit.graph import (
    build_graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from d2crit.canon import are_isomorphic

from conftest import graphs
from oracles import subset_domination

TWO_K2 = build_graph(4, [(0, 1), (2, 3)])
K3_K2 = disjoint_union(complete_graph(3), complete_graph(2))


def oracle_kt_critical(g, k):
    if subset_domination(g, True) != k:
        return False
    return all(subset_domination(g.add_edge(u, v), True) < k for u, v in g.non_edges())


def oracle_kt_supercritical(g, k):
    pairs = list(g.non_edges())
    return (
        bool(pairs)
        and oracle_kt_critical(g, k)
        and all(subset_domination(g.add_edge(u, v), True) == k - 2 for u, v in pairs)
    )


class TestDiameterCritical:
    def test_examples(self, c5):
        assert is_diameter_k_critical(c5, 2)
        assert is_diameter_k_critical(complete_graph(3), 1)
        assert not is_diameter_k_critical(cycle_graph(6), 2)

    def test_disconnecting_deletions_count(self):
        assert is_diameter_k_critical(path_graph(3), 2)
        assert is_diameter_k_critical(star_graph(4), 2)
        assert is_diameter_k_critical(complete_bipartite(2, 3), 2)
        assert not is_diameter_k_critical(complete_graph(4), 2)

    @settings(max_examples=150)
    @given(graphs(min_n=2, max_n=8))
    def test_fast_path_matches_reference(self, g):
        for k in (1, 2, 3):
            assert is_diameter_k_critical(g, k) == is_diameter_k_critical_slow(g, k)


class TestTotalCritical:
    def test_examples(self, c5):
        assert is_kt_critical(c5, 3)
        assert not is_kt_critical(TWO_K2, 3)
        assert not is_kt_critical(build_graph(4, [(0, 1), (1, 2)]), 3)

    def test_complete_graph_is_vacuously_critical(self):
        assert is_kt_critical(complete_graph(4), 2)
        assert not is_kt_supercritical(complete_graph(4), 2)

    def test_supercritical_examples(self, c5):
        assert is_kt_supercritical(TWO_K2, 4)
        assert not is_kt_supercritical(c5, 3)
        assert is_kt_supercritical(K3_K2, 4)

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=2, max_n=7))
    def test_matches_oracle(self, g):
        for k in (3, 4):
            assert is_kt_critical(g, k) == oracle_kt_critical(g, k)
            assert is_kt_supercritical(g, k) == oracle_kt_supercritical(g, k)
            if is_kt_supercritical(g, k):
                assert is_kt_critical(g, k)


class TestTwoCliques:
    def test_examples(self, c5):
        assert is_union_two_complete(TWO_K2)
        assert not is_union_two_complete(disjoint_union(complete_graph(3), complete_graph(1)))
        assert not is_union_two_complete(c5)
        assert not is_union_two_complete(disjoint_union(*[complete_graph(2)] * 3))


class TestClassifyComplement:
    def test_examples(self, c5):
        assert classify_complement(c5) is DualClass.DUAL_3T_CRITICAL
        assert classify_complement(cycle_graph(4)) is DualClass.DUAL_4T_SUPERCRITICAL

    def test_rejects_non_critical(self):
        with pytest.raises(ValueError):
            classify_complement(complete_graph(4))

    def test_star_complement_has_an_isolated_vertex(self):
        assert classify_complement(star_graph(3)) is DualClass.ISOLATED_IN_COMPLEMENT

    @pytest.mark.parametrize("n", range(3, 8))
    def test_isolated_case_is_exactly_the_star(self, n):
        for g in iter_graphs(EnumerationTask(n, Filter.DIAMETER2_CRITICAL)):
            cls = classify_complement(g)
            assert cls is not DualClass.VIOLATION
            is_star = are_isomorphic(g, star_graph(n - 1))
            assert (cls is DualClass.ISOLATED_IN_COMPLEMENT) == is_star


@pytest.mark.parametrize("n", range(2, 8))
def test_structure_of_small_critical_graphs(n):
    """Supercritical iff two cliques; 3t-critical graphs have diameter 2 or 3."""
    for g in iter_graphs(EnumerationTask(n)):
        assert is_kt_supercritical(g, 4) == is_union_two_complete(g)
    for g in iter_graphs(EnumerationTask(n, Filter.TTC3)):
        assert diameter(g) in (2, 3)


def test_empty_and_tiny_graphs():
    assert not is_diameter_k_critical(empty_graph(1), 0)
    assert not is_kt_critical(empty_graph(1), 1)
    assert complement(TWO_K2) == build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
