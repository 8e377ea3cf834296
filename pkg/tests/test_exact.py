import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gha import (
    envy,
    layout_width,
    make_instance,
    min_cuts_all_k,
    solve_exact_bruteforce,
    solve_exact_dp,
    tree_min_cut_all,
    tree_min_cut_k,
    cutwidth_exact_small,
)
from gha.errors import NotATreeError, OutOfRangeError, TooLargeError
from gha.families import (
    complete_binary_tree,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    random_tree,
    star_graph,
)
from .conftest import random_instance


class TestExactDP:
    def test_path_p3(self):
        inst = make_instance(3, [(0, 1), (1, 2)], [0, 1, 5])
        res = solve_exact_dp(inst)
        assert res.optimal_envy == 5
        assert envy(inst, res.witness) == 5

    def test_star(self):
        inst = make_instance(4, [(0, 1), (0, 2), (0, 3)], [0, 1, 2, 10])
        assert solve_exact_dp(inst).optimal_envy == 11

    def test_too_large(self):
        inst = make_instance(23, [(i, i + 1) for i in range(22)], list(range(23)))
        with pytest.raises(TooLargeError):
            solve_exact_dp(inst)

    def test_deterministic_witness(self, rng):
        inst = random_instance(rng, 8)
        a = solve_exact_dp(inst)
        b = solve_exact_dp(inst)
        assert a.witness == b.witness

    def test_big_value_path_matches_bruteforce(self, rng):
        big = 1 << 70
        values = sorted(int(x) * big for x in rng.integers(0, 5, size=6))
        g = random_instance(rng, 6).graph
        inst = make_instance(6, g.edges, values)
        assert solve_exact_dp(inst).optimal_envy == solve_exact_bruteforce(inst).optimal_envy

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_relabel_and_shift_invariance(self, data):
        n = data.draw(st.integers(2, 7))
        possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(possible), unique=True, min_size=n - 1))
        values = sorted(data.draw(st.lists(st.integers(0, 50), min_size=n, max_size=n)))
        shift = data.draw(st.integers(0, 1000))
        relabel = data.draw(st.permutations(range(n)))
        inst = make_instance(n, edges, values)
        base = solve_exact_dp(inst).optimal_envy
        shifted = make_instance(n, edges, [v + shift for v in values])
        assert solve_exact_dp(shifted).optimal_envy == base
        remapped = make_instance(n, [(relabel[u], relabel[v]) for u, v in edges], values)
        assert solve_exact_dp(remapped).optimal_envy == base


class TestBruteforce:
    def test_single_vertex(self):
        assert solve_exact_bruteforce(make_instance(1, [], [7])).optimal_envy == 0

    def test_cycle_c4(self):
        inst = make_instance(4, [(0, 1), (1, 2), (2, 3), (0, 3)], [0, 1, 2, 3])
        res = solve_exact_bruteforce(inst)
        assert res.optimal_envy == 6  # sorting around the cycle is optimal here
        assert res.states_explored == 24

    def test_too_large(self):
        inst = make_instance(11, [(i, i + 1) for i in range(10)], list(range(11)))
        with pytest.raises(TooLargeError):
            solve_exact_bruteforce(inst)

    def test_oracle_equivalence_sweep(self):
        # >= 500 instances, sizes weighted toward small n so the pure
        # fallback also finishes
        rng = np.random.default_rng(5005)
        sizes = [2] * 90 + [3] * 90 + [4] * 90 + [5] * 80 + [6] * 70 + [7] * 50 + [8] * 20 + [9] * 10
        assert len(sizes) == 500
        for n in sizes:
            inst = random_instance(rng, n, value_max=60)
            assert solve_exact_dp(inst).optimal_envy == solve_exact_bruteforce(inst).optimal_envy


class TestTreeMinCut:
    def test_single_edge_cut_iff_subtree_size_exists(self, rng):
        for _ in range(20):
            n = int(rng.integers(2, 30))
            tree = random_tree(n, rng)
            cuts = tree_min_cut_all(tree)
            # component sizes after deleting one edge
            sizes = set()
            for u, v in tree.edges:
                size = _component_size_without_edge(tree, u, v)
                sizes.add(size)
                sizes.add(n - size)
            for k in range(1, n):
                assert cuts[k] >= 1
                assert (cuts[k] == 1) == (k in sizes)

    def test_b5_k5(self):
        assert tree_min_cut_k(complete_binary_tree(5), 5) == 3

    def test_symmetry(self, rng):
        tree = random_tree(17, rng)
        cuts = tree_min_cut_all(tree)
        for k in range(1, 17):
            assert cuts[k] == cuts[17 - k]

    def test_matches_subset_bruteforce(self, rng):
        for tree in [path_graph(9), star_graph(8), complete_binary_tree(3)] + [
            random_tree(int(rng.integers(2, 17)), rng) for _ in range(8)
        ]:
            cuts = tree_min_cut_all(tree)
            mins = min_cuts_all_k(tree)
            assert cuts[1 : tree.n] == mins[1 : tree.n]

    def test_not_a_tree(self):
        with pytest.raises(NotATreeError):
            tree_min_cut_all(cycle_graph(5))

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            tree_min_cut_k(path_graph(4), 4)


def _component_size_without_edge(tree, u, v):
    from collections import deque

    seen = {u, v}
    size = 1
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in tree.adjacency[x]:
            if w not in seen:
                seen.add(w)
                size += 1
                queue.append(w)
    return size


def _cutwidth_by_permutations(graph):
    best = None
    for order in itertools.permutations(range(graph.n)):
        w = layout_width(graph, order)
        best = w if best is None else min(best, w)
    return best


class TestCutwidth:
    def test_paths_have_width_one(self):
        for n in (2, 5, 9):
            layout, width = cutwidth_exact_small(path_graph(n))
            assert width == 1
            assert layout.width == 1

    def test_k4_width_four_vs_enumeration(self):
        g = complete_graph(4)
        _, width = cutwidth_exact_small(g)
        assert width == 4 == _cutwidth_by_permutations(g)

    def test_k5_width_six(self):
        _, width = cutwidth_exact_small(complete_graph(5))
        assert width == 6

    def test_grid_2x3_vs_enumeration(self):
        g = grid_graph(2, 3)
        layout, width = cutwidth_exact_small(g)
        assert width == _cutwidth_by_permutations(g)
        assert layout_width(g, layout.order) == width

    def test_random_graphs_vs_enumeration(self, rng):
        for _ in range(6):
            g = random_instance(rng, int(rng.integers(2, 7))).graph
            _, width = cutwidth_exact_small(g)
            assert width == _cutwidth_by_permutations(g)

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            cutwidth_exact_small(path_graph(13))
