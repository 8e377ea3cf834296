"""Pure-Python/numpy implementations of the hot kernels.

Same call signatures as the compiled module `_ckern`; `gha.kernels` picks
one of the two at import time.  Everything here is vectorized with numpy
where the work is array-shaped, and falls back to tight Python loops where
it is not (permutation enumeration).

All cut/envy quantities must fit in int64; callers route arbitrary-precision
inputs elsewhere.
"""

from __future__ import annotations

import itertools

import numpy as np

_CHUNK = 1 << 20
_INF64 = np.int64(1) << 62
_INF32 = np.int32(2**31 - 1)


def _chunks(total: int):
    start = 0
    while start < total:
        stop = min(start + _CHUNK, total)
        yield np.arange(start, stop, dtype=np.int64)
        start = stop


def _cut_values(masks: np.ndarray, m: int, eu: np.ndarray, ev: np.ndarray, deg: np.ndarray) -> np.ndarray:
    """Cut size for each mask: degree sum minus twice the internal edges."""
    cut = np.zeros(len(masks), dtype=np.int64)
    for p in range(m):
        if deg[p]:
            cut += ((masks >> p) & 1) * int(deg[p])
    for u, v in zip(eu, ev):
        cut -= 2 * ((masks >> int(u)) & (masks >> int(v)) & 1)
    return cut


def subset_min_cuts_impl(m, eu, ev, deg):
    """Per-size minimum cuts over all subsets of an m-vertex ground set.

    deg[p] is the degree of vertex p in the full graph (which may contain
    one extra, always-outside vertex); eu/ev list only edges internal to the
    ground set.  Returns (mins[k], witness_mask[k]) for k = 0..m.
    """
    mins = np.full(m + 1, _INF64, dtype=np.int64)
    wit = np.full(m + 1, -1, dtype=np.int64)
    total = 1 << m
    for masks in _chunks(total):
        cut = _cut_values(masks, m, eu, ev, deg)
        pc = np.bitwise_count(masks).astype(np.int64)
        np.minimum.at(mins, pc, cut)
    unfilled = set(range(m + 1))
    for masks in _chunks(total):
        cut = _cut_values(masks, m, eu, ev, deg)
        pc = np.bitwise_count(masks).astype(np.int64)
        for k in sorted(unfilled):
            sel = np.flatnonzero((pc == k) & (cut == mins[k]))
            if len(sel):
                wit[k] = masks[sel[0]]
                unfilled.discard(k)
        if not unfilled:
            break
    return mins, wit


def _full_cut_table(n, eu, ev):
    """cut[mask] for every mask of an n-vertex graph, int64."""
    masks = np.arange(1 << n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    for u, v in zip(eu, ev):
        deg[int(u)] += 1
        deg[int(v)] += 1
    return _cut_values(masks, n, eu, ev, deg)


def _levels_by_popcount(n):
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.bitwise_count(masks).astype(np.int64)
    order = np.argsort(pc, kind="stable")
    counts = np.bincount(pc, minlength=n + 1)
    offsets = np.concatenate(([0], np.cumsum(counts)))
    return [order[offsets[s] : offsets[s + 1]] for s in range(n + 1)]


def prefix_dp_impl(n, eu, ev, adj_masks, gaps):
    """Optimal prefix-chain cost over the subset lattice.

    g[S] = gaps[|S|] * cut(S) + min over v not in S of g[S + v], g[V] = 0.
    Returns (optimum, order, states): order[j] is the vertex that receives
    house index j, chosen as the lexicographically smallest optimal order.
    """
    cut = _full_cut_table(n, eu, ev)
    g = np.full(1 << n, _INF64, dtype=np.int64)
    full = (1 << n) - 1
    g[full] = 0
    levels = _levels_by_popcount(n)
    for s in range(n - 1, -1, -1):
        idx = levels[s]
        best = np.full(len(idx), _INF64, dtype=np.int64)
        for v in range(n):
            np.minimum(best, g[idx | (1 << v)], out=best)
        g[idx] = best + np.int64(gaps[s]) * cut[idx]
    opt = int(g[0])
    order = np.zeros(n, dtype=np.int32)
    s_mask = 0
    for step in range(n):
        size = step
        target = int(g[s_mask]) - int(gaps[size]) * int(cut[s_mask])
        for v in range(n):
            bit = 1 << v
            if s_mask & bit:
                continue
            if int(g[s_mask | bit]) == target:
                order[step] = v
                s_mask |= bit
                break
        else:  # pragma: no cover - DP invariant
            raise AssertionError("no consistent DP extension found")
    return opt, order, 1 << n


def bruteforce_impl(n, eu, ev, values):
    """Min and max envy over all n! allocations, by lexicographic enumeration.

    Returns (min_envy, max_envy, best_assignment, allocations_tried); the
    witness is the lexicographically smallest assignment attaining the min.
    """
    vals = [int(x) for x in values]
    edge_list = [(int(u), int(v)) for u, v in zip(eu, ev)]
    best = None
    best_perm = None
    worst = None
    count = 0
    for perm in itertools.permutations(range(n)):
        total = 0
        for u, v in edge_list:
            d = vals[perm[u]] - vals[perm[v]]
            total += d if d >= 0 else -d
        count += 1
        if best is None or total < best:
            best = total
            best_perm = perm
        if worst is None or total > worst:
            worst = total
    assignment = np.array(best_perm, dtype=np.int32)
    return int(best), int(worst), assignment, count


def cutwidth_impl(n, eu, ev, adj_masks):
    """Exact cutwidth via subset DP: w[S] = max(cut(S), min over v in S of w[S - v])."""
    cut = _full_cut_table(n, eu, ev).astype(np.int32)
    w = np.full(1 << n, _INF32, dtype=np.int32)
    w[0] = 0
    levels = _levels_by_popcount(n)
    for s in range(1, n + 1):
        idx = levels[s]
        best = np.full(len(idx), _INF32, dtype=np.int32)
        for v in range(n):
            np.minimum(best, w[idx ^ (1 << v)], out=best)
        w[idx] = np.maximum(best, cut[idx])
    width = int(w[(1 << n) - 1])
    order = np.zeros(n, dtype=np.int32)
    s_mask = (1 << n) - 1
    for pos in range(n - 1, -1, -1):
        for v in range(n):
            bit = 1 << v
            if not s_mask & bit:
                continue
            if max(int(cut[s_mask]), int(w[s_mask ^ bit])) == int(w[s_mask]):
                order[pos] = v
                s_mask ^= bit
                break
        else:  # pragma: no cover - DP invariant
            raise AssertionError("no consistent cutwidth extension found")
    return width, order


def repunit_distances_impl(half, moves):
    """BFS distances from 0 over states [-half, half] with steps +-(2^a - 1).

    Entry [x + half] is the minimum number of terms summing to x, or -1 when
    x is unreachable within the state window.
    """
    size = 2 * half + 1
    dist = np.full(size, -1, dtype=np.int8)
    dist[half] = 0
    frontier = np.zeros(size, dtype=bool)
    frontier[half] = True
    depth = 0
    unseen = dist == -1
    while frontier.any():
        depth += 1
        nxt = np.zeros(size, dtype=bool)
        for r in moves:
            r = int(r)
            if r >= size:
                continue
            nxt[r:] |= frontier[:-r]
            nxt[:-r] |= frontier[r:]
        nxt &= unseen
        dist[nxt] = depth
        unseen &= ~nxt
        frontier = nxt
    return dist
