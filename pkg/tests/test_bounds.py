import random
from fractions import Fraction as F

import pytest

from indexcoding.bounds import (
    flcc_achievable,
    flcc_verify,
    mais_region,
    mais_shrinks_on_removal,
    mais_tight_via_flcc,
    maximal_acyclic_sets,
    symmetric_bounds,
)
from indexcoding.canon import enumerate_nonisomorphic
from indexcoding.graphs import Digraph, GraphError

from conftest import ring, side_info_graph
from oracles import acyclic_subsets_brute, maximal_sets


def random_graph(rng, n, p=0.4):
    return Digraph.from_edges(
        n,
        {
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j and rng.random() < p
        },
    )


class TestMaximalAcyclicSets:
    def test_fig1(self, fig1):
        assert maximal_acyclic_sets(fig1) == [frozenset({1}), frozenset({2, 3})]

    def test_empty_graph(self):
        assert maximal_acyclic_sets(Digraph.from_edges(3)) == [frozenset({1, 2, 3})]

    def test_mutual_pair(self, two_cycle):
        assert maximal_acyclic_sets(two_cycle) == [frozenset({1}), frozenset({2})]

    def test_matches_brute_force(self):
        rng = random.Random(19)
        for _ in range(40):
            G = random_graph(rng, rng.randint(1, 6))
            assert set(maximal_acyclic_sets(G)) == maximal_sets(
                acyclic_subsets_brute(G)
            )


class TestMaisRegion:
    def test_fig1(self, fig1):
        bound = mais_region(fig1)
        assert bound.region.to_json() == {"n": 3, "constraints": [[1], [2, 3]]}
        assert bound.mais_number == 2
        # the symmetric point is capped at one half
        assert bound.region.contains((F(1, 2),) * 3)
        assert not bound.region.contains((F(1, 2) + F(1, 100),) * 3)

    def test_directed_triangle(self):
        bound = mais_region(ring(3))
        assert bound.region.to_json() == {
            "n": 3,
            "constraints": [[1, 2], [1, 3], [2, 3]],
        }

    def test_single_node(self):
        assert mais_region(Digraph.from_edges(1)).region.to_json() == {
            "n": 1,
            "constraints": [[1]],
        }


class TestFlcc:
    def test_fig1_pair_rates(self, fig1):
        ok, rho = flcc_achievable(fig1, (F(1), F(0), F(1)))
        assert ok and flcc_verify(fig1, (F(1), F(0), F(1)), rho)

    def test_fig1_all_ones_unachievable(self, fig1):
        ok, rho = flcc_achievable(fig1, (F(1), F(1), F(1)))
        assert not ok and rho is None

    def test_fig1_both_first_two(self, fig1):
        ok, rho = flcc_achievable(fig1, (F(1), F(1), F(0)))
        assert ok and flcc_verify(fig1, (F(1), F(1), F(0)), rho)
        # one explicit certificate: weight one on the mutual pair {1,2}
        manual = {frozenset({1, 2}): F(1)}
        assert flcc_verify(fig1, (F(1), F(1), F(0)), manual)

    def test_zero_rates_with_zero_weights(self, fig1):
        ok, rho = flcc_achievable(fig1, (F(0), F(0), F(0)))
        assert ok and all(v == 0 for v in rho.values())

    def test_dimension_mismatch(self, fig1):
        with pytest.raises(ValueError):
            flcc_achievable(fig1, (F(1), F(0)))

    def test_verify_rejects_foreign_clique(self, fig1):
        assert not flcc_verify(fig1, (F(0),) * 3, {frozenset({2, 3}): F(1, 2)})

    def test_verify_rejects_weight_above_one(self, fig1):
        assert not flcc_verify(fig1, (F(0),) * 3, {frozenset({1}): F(2)})

    def test_soundness_inside_outer_bound(self):
        rng = random.Random(29)
        graphs = enumerate_nonisomorphic(3)
        for G in graphs:
            bound = mais_region(G)
            for _ in range(8):
                rates = tuple(F(rng.randint(0, 4), 4) for _ in range(G.n))
                ok, rho = flcc_achievable(G, rates)
                if ok:
                    assert bound.region.contains(rates)
                    assert flcc_verify(G, rates, rho)

    def test_soundness_across_every_four_node_class(self):
        # the inner bound never certifies a point outside the outer bound
        rng = random.Random(97)
        for G in enumerate_nonisomorphic(4):
            bound = mais_region(G)
            for _ in range(2):
                rates = tuple(F(rng.randint(0, 6), 6) for _ in range(G.n))
                ok, rho = flcc_achievable(G, rates)
                if ok:
                    assert bound.region.contains(rates)
                    assert flcc_verify(G, rates, rho)

    def test_monotone_under_decrease(self):
        rng = random.Random(41)
        for _ in range(25):
            G = random_graph(rng, rng.randint(2, 4))
            rates = [F(rng.randint(0, 3), 3) for _ in range(G.n)]
            ok, _ = flcc_achievable(G, rates)
            if ok:
                j = rng.randrange(G.n)
                rates[j] = max(F(0), rates[j] - F(1, 3))
                ok2, _ = flcc_achievable(G, rates)
                assert ok2


class TestShrinkOnRemoval:
    def test_mutual_pair(self, two_cycle):
        shrank, witness = mais_shrinks_on_removal(two_cycle, (1, 2))
        assert shrank and witness == {1, 2}

    def test_fig1_degraded_edge(self, fig1):
        shrank, witness = mais_shrinks_on_removal(fig1, (2, 3))
        assert not shrank and witness is None

    def test_directed_triangle(self):
        shrank, witness = mais_shrinks_on_removal(ring(3), (1, 2))
        assert shrank and witness == {1, 2, 3}

    def test_missing_edge(self, fig1):
        with pytest.raises(GraphError):
            mais_shrinks_on_removal(fig1, (3, 2))


class TestTightness:
    def test_fig1_tight(self, fig1):
        assert mais_tight_via_flcc(fig1)

    def test_directed_triangle_tight(self):
        # oracle experiment: the symmetric extreme point (1/2, 1/2, 1/2) is
        # covered by singleton weights with every receiver load exactly one,
        # so the outer bound is met
        assert mais_tight_via_flcc(ring(3))

    def test_empty_two_nodes_tight(self):
        assert mais_tight_via_flcc(Digraph.from_edges(2))


class TestSymmetricBounds:
    def test_fig1(self, fig1):
        assert symmetric_bounds(fig1) == (F(1, 2), F(1, 2))

    def test_empty_three_nodes(self):
        assert symmetric_bounds(Digraph.from_edges(3)) == (F(1, 3), F(1, 3))

    def test_complete_mutual_triangle(self):
        G = side_info_graph({2, 3}, {1, 3}, {1, 2})
        assert symmetric_bounds(G) == (F(1), F(1))

    def test_lower_never_exceeds_upper(self):
        rng = random.Random(53)
        for _ in range(20):
            G = random_graph(rng, rng.randint(1, 4))
            lower, upper = symmetric_bounds(G)
            assert 0 <= lower <= upper <= 1
