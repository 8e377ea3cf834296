import itertools
import math

import numpy as np
import pytest

from gha import (
    Allocation,
    PartitionWitness,
    ThreePartitionInstance,
    build_flower,
    check_cheeger_constant,
    check_flower_even_cut,
    check_grid_cut_lemma,
    envy,
    envy_yes_threshold,
    gen_bounded_tree_instance,
    gen_clique,
    gen_depth2_tree,
    gen_expander,
    gen_grid,
    solve_exact_dp,
    yes_allocation,
)
from gha.errors import (
    BadParametersError,
    InvalidWitnessError,
    NotRegularError,
    ParityViolationError,
)
from gha.families import complete_graph, cycle_graph
from gha.gadgets import (
    _random_cubic_edges,
    bounded_tree_cluster_values,
    flower_condition_violations,
)

TP_114 = ThreePartitionInstance.create([1, 1, 2], 4)
WITNESS_114 = PartitionWitness(((0, 1, 2),))
TP_222 = ThreePartitionInstance.create([2, 2, 2], 6)
WITNESS_222 = PartitionWitness(((0, 1, 2),))


class TestThreePartition:
    def test_bad_sum(self):
        with pytest.raises(BadParametersError):
            ThreePartitionInstance.create([1, 1, 1], 4)

    def test_strict_range(self):
        ThreePartitionInstance.create([2, 2, 2], 6)  # ok loose
        with pytest.raises(BadParametersError):
            ThreePartitionInstance.create([1, 1, 2], 4, strict=True)
        ThreePartitionInstance.create([4, 4, 4], 12, strict=True)

    def test_witness_validation(self):
        with pytest.raises(InvalidWitnessError):
            PartitionWitness(((0, 1, 1),)).validate(TP_114)
        tp6 = ThreePartitionInstance.create([1, 1, 2, 1, 1, 2], 4)
        with pytest.raises(InvalidWitnessError):
            PartitionWitness(((0, 1, 2), (3, 4, 5))).validate(
                ThreePartitionInstance.create([1, 1, 1, 1, 1, 3], 4)
            )
        PartitionWitness(((0, 1, 2), (3, 4, 5))).validate(tp6)


class TestDepth2:
    def test_counts_and_values(self):
        g = gen_depth2_tree(TP_114, 2)
        assert g.instance.graph.n == 1 + 2 * 1 * 4  # 1 + CmT
        assert g.instance.graph.is_tree()
        assert g.instance.houses.values == (0,) + (1,) * 8
        assert g.role_labels.count("root") == 1
        assert sum(1 for lab in g.role_labels if lab.startswith("hub_")) == 3

    def test_yes_allocation_bound(self):
        g = gen_depth2_tree(TP_114, 2)
        assert envy(g.instance, yes_allocation(g, WITNESS_114)) <= 3 * TP_114.m**2

    def test_hub_with_value_zero_forces_envy_C(self):
        # any allocation that gives some hub the value 0 incurs envy >= C
        tp = ThreePartitionInstance.create([1, 1, 1], 3)
        C = 2
        g = gen_depth2_tree(tp, C)
        n = g.instance.graph.n
        hubs = [v for v, lab in enumerate(g.role_labels) if lab.startswith("hub_")]
        worst = None
        for hub in hubs:
            rest = [v for v in range(n) if v != hub]
            for perm in itertools.permutations(range(1, n)):
                assignment = [0] * n
                assignment[hub] = 0
                for v, h in zip(rest, perm):
                    assignment[v] = h
                e = envy(g.instance, Allocation.from_iterable(assignment))
                worst = e if worst is None else min(worst, e)
        assert worst >= C

    def test_invalid_witness(self):
        g = gen_depth2_tree(TP_114, 2)
        with pytest.raises(InvalidWitnessError):
            yes_allocation(g, PartitionWitness(((0, 1, 1),)))


class TestClique:
    def test_counts(self):
        g = gen_clique(TP_114, 2)
        assert g.instance.graph.n == 1 + 2 * 1 * 4
        sizes = sorted(len(c) for c in g.groups["components"])
        assert sizes == [2, 2, 4]  # K_2, K_2, K_4

    def test_yes_allocation_bound(self):
        g = gen_clique(TP_114, 2)
        assert envy(g.instance, yes_allocation(g, WITNESS_114)) <= 3

    def test_no_instance_optimum_at_least_C(self):
        # (1,1,1,1,1,3) with T=4 has no valid 3-partition (no triple even
        # sums to 4), so the exact optimum of the gadget is at least C
        tp = ThreePartitionInstance.create([1, 1, 1, 1, 1, 3], 4)
        triples_ok = [
            t for t in itertools.combinations(range(6), 3)
            if sum(tp.items[i] for i in t) == tp.T
        ]
        assert triples_ok == []
        C = 2
        g = gen_depth2_tree(tp, C)
        assert g.instance.graph.n == 17
        res = solve_exact_dp(g.instance)
        assert res.optimal_envy >= C


class TestGrid:
    def test_counts_degrees_planarity(self):
        g = gen_grid(TP_114, 2)
        n = g.instance.graph.n
        assert n == 4 * 1 * 4 + 7  # C^2 m T + |B_r|
        assert g.instance.graph.max_degree <= 5
        assert g.instance.graph.num_edges <= 3 * n - 6  # Euler bound, planar
        sizes = sorted(len(c) for c in g.groups["components"])
        assert sizes == [4, 4, 8]  # 2x2, 2x2, 2x4 grids

    def test_yes_allocation_bound(self):
        g = gen_grid(TP_114, 2)
        assert envy(g.instance, yes_allocation(g, WITNESS_114)) <= 3

    def test_role_labels(self):
        g = gen_grid(TP_114, 1)
        assert "grid(0,0,0)" in g.role_labels
        assert g.role_labels.count("tree-node") == 7


class TestGridCutLemma:
    def test_grid_2x3_exhaustive(self):
        rep = check_grid_cut_lemma(2, 3)
        assert rep.exhaustive and rep.violations == 0
        assert rep.subsets_checked == 31
        assert rep.min_slack >= 0

    def test_grid_3x3_exhaustive(self):
        rep = check_grid_cut_lemma(3, 3)
        assert rep.exhaustive and rep.violations == 0

    def test_grid_4x5_sampled(self):
        rep = check_grid_cut_lemma(4, 5, samples=20_000, seed=5)
        assert not rep.exhaustive
        assert rep.violations == 0

    def test_requires_r_le_c(self):
        with pytest.raises(BadParametersError):
            check_grid_cut_lemma(3, 2)


class TestExpander:
    def test_construction_and_degrees(self):
        g = gen_expander(TP_222, 4, seed=11)
        assert g.instance.graph.n == 4 * 1 * 6 + 7  # CmT + |B_r|
        assert g.instance.graph.max_degree <= 4
        assert all(len(c) == 8 for c in g.groups["components"])

    def test_parity_violation(self):
        with pytest.raises(ParityViolationError):
            gen_expander(ThreePartitionInstance.create([1, 1, 4], 6), 5, seed=0)
        with pytest.raises(ParityViolationError):
            gen_expander(ThreePartitionInstance.create([1, 1, 2], 4), 4, seed=0)  # C*a_i = 4 < 6

    def test_determinism(self):
        a = gen_expander(TP_222, 4, seed=3)
        b = gen_expander(TP_222, 4, seed=3)
        assert a.instance.graph.edges == b.instance.graph.edges

    def test_yes_allocation_bound(self):
        g = gen_expander(TP_222, 4, seed=1)
        assert envy(g.instance, yes_allocation(g, WITNESS_222)) <= 3

    def test_random_cubic_is_simple_and_regular(self):
        rng = np.random.default_rng(9)
        edges = _random_cubic_edges(10, rng)
        deg = [0] * 10
        assert len(set(edges)) == len(edges) == 15
        for u, v in edges:
            assert u != v
            deg[u] += 1
            deg[v] += 1
        assert all(d == 3 for d in deg)


class TestCheeger:
    def test_k4(self):
        assert check_cheeger_constant(complete_graph(4)) == 2

    def test_c6(self):
        from fractions import Fraction

        assert check_cheeger_constant(cycle_graph(6)) == Fraction(2, 3)

    def test_not_regular(self):
        from gha.families import star_graph

        with pytest.raises(NotRegularError):
            check_cheeger_constant(star_graph(3))

    def test_random_cubic_vs_ramanujan_bound(self):
        from gha.core import Graph

        rng = np.random.default_rng(4)
        edges = _random_cubic_edges(16, rng)
        g = Graph.from_edges(16, edges)
        constant = check_cheeger_constant(g)
        assert float(constant) >= 0.5 * (3 - 2 * math.sqrt(2))  # ~0.086


class TestFlower:
    def test_isolated_pistil(self):
        fl = build_flower(1, 5)
        assert fl.tree.n == 1 and fl.petal_roots == ()

    def test_f10_3_split(self):
        fl = build_flower(10, 3)
        assert len(fl.petal_roots) == 3
        assert not flower_condition_violations(fl)

    def test_bad_parameters(self):
        with pytest.raises(BadParametersError):
            build_flower(0, 3)
        with pytest.raises(BadParametersError):
            build_flower(5, 2)

    def test_random_flowers_conditions_and_petal_bounds(self, rng):
        for _ in range(40):
            k = int(rng.choice([3, 5, 9, 15]))
            n = int(rng.integers(10 * k, 25 * k))
            if (n % 2) == (k % 2):
                n += 1
            fl = build_flower(n, k)
            assert not flower_condition_violations(fl)
            assert fl.tree.max_degree <= k + 1
            sizes = _petal_sizes(fl)
            assert len(sizes) == k
            for s in sizes:
                assert 4 * n <= 5 * k * s and 5 * k * s <= 6 * n  # [4n/5k, 6n/5k]

    def test_even_cut_exhaustive(self):
        rep = check_flower_even_cut(build_flower(10, 3))
        assert rep.exhaustive and rep.violations == 0

    def test_even_cut_sampled(self):
        rep = check_flower_even_cut(build_flower(40, 3), samples=4000, seed=2)
        assert not rep.exhaustive and rep.violations == 0

    def test_full_petal_is_odd_hence_never_sampled(self):
        fl = build_flower(10, 3)
        sizes = _petal_sizes(fl)
        assert all(s % 2 == 1 for s in sizes)


def _petal_sizes(fl):
    from collections import deque

    sizes = []
    for root in fl.petal_roots:
        seen = {fl.pistil, root}
        size = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in fl.tree.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    size += 1
                    queue.append(w)
        sizes.append(size)
    return sizes


class TestBoundedTree:
    def test_vertex_count_and_clusters(self):
        g = gen_bounded_tree_instance(TP_222, allow_desk_scale=True)
        assert g.instance.graph.n == 64 * 1 * 6
        assert g.instance.graph.is_tree()
        values = g.instance.houses.values
        clusters = bounded_tree_cluster_values(TP_222)
        assert len(clusters) == 4 * TP_222.m + 1
        from collections import Counter

        counts = Counter(values)
        for cv in clusters[:-1]:
            assert counts[cv] == TP_222.T
        assert counts[clusters[-1]] == 60 * TP_222.m * TP_222.T

    def test_value_bit_length(self):
        g = gen_bounded_tree_instance(TP_222, allow_desk_scale=True)
        top = g.instance.houses.values[-1]
        m, T = TP_222.m, TP_222.T
        # largest value <= (4m+1) * s(4m): O(m log(64mT)) bits
        assert top.bit_length() <= 8 * m * math.log2(64 * m * T) + math.log2(4 * m + 1) + 2

    def test_threshold_dual_evaluation(self):
        g = gen_bounded_tree_instance(TP_222, allow_desk_scale=True)
        achieved = envy(g.instance, yes_allocation(g, WITNESS_222))
        assert achieved == envy_yes_threshold(TP_222)

    def test_threshold_monotone_in_size(self):
        bigger = ThreePartitionInstance.create([2, 2, 4], 8)
        assert envy_yes_threshold(bigger) > envy_yes_threshold(TP_222)

    def test_threshold_bit_length(self):
        m, T = TP_222.m, TP_222.T
        thr = envy_yes_threshold(TP_222)
        assert thr.bit_length() <= (8 * m + 2) * math.log2(64 * m * T) + 8

    def test_cluster_gap_dominance(self):
        # one edge across a longer gap outweighs every edge across all
        # shorter gaps combined: s(j) > |E|^2 * s(j-1), symbolically because
        # s(j)/s(j-1) = (|E|+1)^2
        from gha.gadgets import _s, scale_factor

        tp = TP_222
        edge_count = 64 * tp.m * tp.T - 1
        for j in range(1, 4 * tp.m + 1):
            assert _s(tp, j) == _s(tp, j - 1) * scale_factor(tp) ** 2
            assert _s(tp, j) > edge_count * edge_count * _s(tp, j - 1)

    def test_parity_and_scale_guards(self):
        with pytest.raises(ParityViolationError):
            gen_bounded_tree_instance(ThreePartitionInstance.create([1, 1, 2], 4))
        with pytest.raises(BadParametersError):
            gen_bounded_tree_instance(TP_222)  # desk scale requires the flag
