"""Exact solvers: ground truth that every approximation claim is tested against.

Envy decomposes over the sorted house indices as
sum_i (h_{i+1} - h_i) * cut(prefix_i), so the optimum is a shortest chain
through the subset lattice ordered by prefix size.  `solve_exact_dp` walks
that lattice (2^n states); `solve_exact_bruteforce` enumerates all n!
allocations and is kept as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .approx import Layout
from .core import Allocation, Graph, Instance, env_cap
from .errors import NotATreeError, TooLargeError

DP_CAP = 22
BRUTEFORCE_CAP = 10
CUTWIDTH_CAP = 12


@dataclass(frozen=True)
class ExactResult:
    optimal_envy: int
    witness: Allocation
    states_explored: int


def _gap_array(instance: Instance) -> list[int]:
    """gaps[s] = h_{s+1} - h_s with sentinel zeros at both ends."""
    vals = instance.houses.values
    n = len(vals)
    gaps = [0] * (n + 1)
    for s in range(1, n):
        gaps[s] = vals[s] - vals[s - 1]
    return gaps


def _envy_fits_int64(instance: Instance) -> bool:
    bound = instance.houses.spread * max(instance.graph.num_edges, 1)
    return kernels.int64_safe(bound)


def _prefix_dp_bigint(instance: Instance):
    """Arbitrary-precision variant of the prefix-chain DP (dict-based, slow path)."""
    n = instance.graph.n
    gaps = _gap_array(instance)
    adj = instance.graph.neighbor_masks()
    full = (1 << n) - 1
    cut = [0] * (full + 1)
    for mask in range(1, full + 1):
        v = (mask & -mask).bit_length() - 1
        sub = mask ^ (1 << v)
        cut[mask] = cut[sub] + len(instance.graph.adjacency[v]) - 2 * (adj[v] & sub).bit_count()
    g = [0] * (full + 1)
    for mask in range(full - 1, -1, -1):
        best = None
        for v in range(n):
            bit = 1 << v
            if not mask & bit:
                cand = g[mask | bit]
                if best is None or cand < best:
                    best = cand
        g[mask] = best + gaps[bin(mask).count("1")] * cut[mask]
    order = []
    s = 0
    for size in range(n):
        target = g[s] - gaps[size] * cut[s]
        for v in range(n):
            bit = 1 << v
            if not s & bit and g[s | bit] == target:
                order.append(v)
                s |= bit
                break
    return g[0], order, full + 1


def solve_exact_dp(instance: Instance, cap: int | None = None) -> ExactResult:
    """Globally optimal envy via subset DP with incremental cut maintenance.

    The witness is deterministic: the lexicographically smallest optimal
    house-to-vertex order.  Envy arithmetic runs in int64 when safe and in
    Python big integers otherwise.
    """
    n = instance.graph.n
    limit = env_cap(DP_CAP) if cap is None else cap
    if n > limit:
        raise TooLargeError(f"n={n} exceeds exact-DP cap {limit}")
    if n == 0:
        return ExactResult(0, Allocation(()), 0)
    if _envy_fits_int64(instance):
        opt, order, states = kernels.prefix_chain_dp(
            n, instance.graph.edges, instance.graph.neighbor_masks(), _gap_array(instance)
        )
        order = [int(v) for v in order]
    else:
        opt, order, states = _prefix_dp_bigint(instance)
    assignment = [0] * n
    for house, v in enumerate(order):
        assignment[v] = house
    witness = Allocation.from_iterable(assignment)
    return ExactResult(int(opt), witness, int(states))


def solve_exact_bruteforce(instance: Instance, cap: int | None = None) -> ExactResult:
    """Minimum envy over all n! allocations; independent of the DP path."""
    n = instance.graph.n
    limit = BRUTEFORCE_CAP if cap is None else cap
    if n > limit:
        raise TooLargeError(f"n={n} exceeds brute-force cap {limit}")
    if n == 0:
        return ExactResult(0, Allocation(()), 0)
    if _envy_fits_int64(instance):
        best, _, assignment, count = kernels.bruteforce_envy(
            n, instance.graph.edges, instance.houses.values
        )
        witness = Allocation.from_iterable(int(a) for a in assignment)
        return ExactResult(int(best), witness, int(count))
    # big-value path: plain Python enumeration
    import itertools

    vals = instance.houses.values
    edges = instance.graph.edges
    best = None
    best_perm = None
    count = 0
    for perm in itertools.permutations(range(n)):
        total = 0
        for u, v in edges:
            d = vals[perm[u]] - vals[perm[v]]
            total += d if d >= 0 else -d
        count += 1
        if best is None or total < best:
            best, best_perm = total, perm
    return ExactResult(best, Allocation.from_iterable(best_perm), count)


def bruteforce_min_max(instance: Instance, cap: int | None = None):
    """(min envy, max envy) over all allocations, by full enumeration."""
    n = instance.graph.n
    limit = BRUTEFORCE_CAP if cap is None else cap
    if n > limit:
        raise TooLargeError(f"n={n} exceeds brute-force cap {limit}")
    if not _envy_fits_int64(instance):
        import itertools

        vals = instance.houses.values
        edges = instance.graph.edges
        lo = hi = None
        for perm in itertools.permutations(range(n)):
            total = sum(abs(vals[perm[u]] - vals[perm[v]]) for u, v in edges)
            lo = total if lo is None else min(lo, total)
            hi = total if hi is None else max(hi, total)
        return lo, hi
    lo, hi, _, _ = kernels.bruteforce_envy(n, instance.graph.edges, instance.houses.values)
    return int(lo), int(hi)


def tree_min_cut_all(tree: Graph) -> list[int]:
    """delta_T(k) for all k at once, by a rooted knapsack DP over subtree sizes.

    State: (vertex, number of subtree vertices on the root side of the cut,
    side of the vertex itself); combining children is a min-plus knapsack,
    O(n^2) overall.  Returns a list indexed by k = 0..n.
    """
    import numpy as np

    if not tree.is_tree():
        raise NotATreeError("tree_min_cut_k requires a tree")
    n = tree.n
    if n == 1:
        return [0, 0]
    INF = np.int64(1) << 40
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    for u in order:
        for w in tree.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    # dp[v][b] is a vector over counts c: min cut edges inside subtree(v)
    # with c vertices on side 1 and v itself on side b.
    dp = [None] * n
    for v in reversed(order):
        tables = [np.full(2, INF, dtype=np.int64), np.full(2, INF, dtype=np.int64)]
        tables[0][0] = 0
        tables[1][1] = 0
        for w in tree.adjacency[v]:
            if w == parent[v]:
                continue
            child = dp[w]
            merged = []
            for b in range(2):
                cur = tables[b]
                child_cost = np.minimum(child[b], child[1 - b] + 1)
                size = len(cur) + len(child_cost) - 1
                out = np.full(size, INF, dtype=np.int64)
                for c, cost in enumerate(cur):
                    if cost >= INF:
                        continue
                    np.minimum(out[c : c + len(child_cost)], cost + child_cost,
                               out=out[c : c + len(child_cost)])
                merged.append(out)
            tables = merged
            dp[w] = None
        dp[v] = tables
    root = dp[0]
    result = np.minimum(root[0], root[1])
    return [int(x) if x < INF else -1 for x in result]


def tree_min_cut_k(tree: Graph, k: int) -> int:
    """Exact delta_T(k): minimum edges cut by any k / (n-k) vertex split."""
    n = tree.n
    if not 1 <= k <= n - 1:
        from .errors import OutOfRangeError

        raise OutOfRangeError(f"k={k} outside [1, {n - 1}]")
    return tree_min_cut_all(tree)[k]


def cutwidth_exact_small(graph: Graph, cap: int | None = None) -> tuple[Layout, int]:
    """An ordering achieving the exact cutwidth, via DP over vertex subsets."""
    n = graph.n
    limit = env_cap(CUTWIDTH_CAP) if cap is None else cap
    if n > limit:
        raise TooLargeError(f"n={n} exceeds cutwidth cap {limit}")
    if n == 0:
        return Layout(order=(), width=0), 0
    width, order = kernels.cutwidth_dp(n, graph.edges, graph.neighbor_masks())
    layout = Layout.from_order(graph, [int(v) for v in order])
    assert layout.width == int(width)
    return layout, int(width)
