# cython: language_level=3
"""Compiled hot kernels: subset scans, prefix-chain DP, permutation
enumeration, cutwidth DP, and the repunit BFS.

Signatures mirror `gha._pykern`; `gha.kernels` selects whichever is
importable (compiled preferred).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    """
    #define POPCOUNTLL(x) __builtin_popcountll((unsigned long long)(x))
    #define CTZLL(x) __builtin_ctzll((unsigned long long)(x))
    """
    int POPCOUNTLL(long long x) nogil
    int CTZLL(long long x) nogil

cdef long long INF64 = (<long long>1) << 62
cdef int INF32 = 2147483647


def subset_min_cuts_impl(int m, eu, ev, deg):
    """Gray-code scan of all 2^m subsets, tracking the minimum cut per size."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] mins = np.full(m + 1, INF64, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] wit = np.full(m + 1, -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] adj = np.zeros(m, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] degs = np.asarray(deg, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] eu_ = np.asarray(eu, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ev_ = np.asarray(ev, dtype=np.int32)
    cdef Py_ssize_t i
    for i in range(eu_.shape[0]):
        adj[eu_[i]] |= (<long long>1) << ev_[i]
        adj[ev_[i]] |= (<long long>1) << eu_[i]
    mins[0] = 0
    wit[0] = 0
    cdef long long total = (<long long>1) << m
    cdef long long g, mask = 0
    cdef long long cut = 0
    cdef int pc = 0
    cdef int v
    cdef long long bit
    with nogil:
        for g in range(1, total):
            v = CTZLL(g)
            bit = (<long long>1) << v
            if mask & bit:
                # v leaves the subset
                mask ^= bit
                cut -= degs[v] - 2 * POPCOUNTLL(adj[v] & mask)
                pc -= 1
            else:
                cut += degs[v] - 2 * POPCOUNTLL(adj[v] & mask)
                mask ^= bit
                pc += 1
            if cut < mins[pc]:
                mins[pc] = cut
                wit[pc] = mask
    return mins, wit


def prefix_dp_impl(int n, eu, ev, adj_masks, gaps):
    """Suffix DP over the subset lattice; see _pykern.prefix_dp_impl."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] adj = np.asarray(adj_masks, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] gap = np.asarray(gaps, dtype=np.int64)
    cdef long long total = (<long long>1) << n
    cdef cnp.ndarray[cnp.int64_t, ndim=1] g_arr = np.empty(total, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] cut = np.empty(total, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] order = np.zeros(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] deg = np.zeros(n, dtype=np.int64)
    cdef long long mask, sub, best, cand, target, s_mask
    cdef int v, vlow, size
    cdef long long bit
    cdef Py_ssize_t i
    for v in range(n):
        deg[v] = POPCOUNTLL(adj[v])
    with nogil:
        cut[0] = 0
        for mask in range(1, total):
            vlow = CTZLL(mask)
            sub = mask ^ ((<long long>1) << vlow)
            cut[mask] = cut[sub] + <int>(deg[vlow] - 2 * POPCOUNTLL(adj[vlow] & sub))
        # masks descending: every proper superset has a larger integer value
        g_arr[total - 1] = 0
        for mask in range(total - 2, -1, -1):
            best = INF64
            for v in range(n):
                bit = (<long long>1) << v
                if not (mask & bit):
                    cand = g_arr[mask | bit]
                    if cand < best:
                        best = cand
            g_arr[mask] = best + gap[POPCOUNTLL(mask)] * cut[mask]
        # forward walk: lexicographically smallest optimal order
        s_mask = 0
        for size in range(n):
            target = g_arr[s_mask] - gap[size] * cut[s_mask]
            for v in range(n):
                bit = (<long long>1) << v
                if s_mask & bit:
                    continue
                if g_arr[s_mask | bit] == target:
                    order[size] = v
                    s_mask |= bit
                    break
    return int(g_arr[0]), order, int(total)


def bruteforce_impl(int n, eu, ev, values):
    """Min/max envy over all n! allocations in lexicographic order."""
    cdef cnp.ndarray[cnp.int32_t, ndim=1] eu_ = np.asarray(eu, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ev_ = np.asarray(ev, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] vals = np.asarray(values, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] perm = np.arange(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] best_perm = np.arange(n, dtype=np.int32)
    cdef int ne = eu_.shape[0]
    cdef long long best = INF64, worst = -1, count = 0, total, d
    cdef int i, j, k, tmp
    cdef bint has_next = True
    with nogil:
        while has_next:
            total = 0
            for i in range(ne):
                d = vals[perm[eu_[i]]] - vals[perm[ev_[i]]]
                total += d if d >= 0 else -d
            count += 1
            if total < best:
                best = total
                for i in range(n):
                    best_perm[i] = perm[i]
            if total > worst:
                worst = total
            # next lexicographic permutation
            has_next = False
            for i in range(n - 2, -1, -1):
                if perm[i] < perm[i + 1]:
                    for j in range(n - 1, i, -1):
                        if perm[j] > perm[i]:
                            break
                    tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
                    j = i + 1
                    k = n - 1
                    while j < k:
                        tmp = perm[j]; perm[j] = perm[k]; perm[k] = tmp
                        j += 1
                        k -= 1
                    has_next = True
                    break
    return int(best), int(worst), best_perm, int(count)


def cutwidth_impl(int n, eu, ev, adj_masks):
    """Exact cutwidth via subset DP; see _pykern.cutwidth_impl."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] adj = np.asarray(adj_masks, dtype=np.int64)
    cdef long long total = (<long long>1) << n
    cdef cnp.ndarray[cnp.int32_t, ndim=1] w = np.empty(total, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] cut = np.empty(total, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] order = np.zeros(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] deg = np.zeros(n, dtype=np.int64)
    cdef long long mask, sub, s_mask
    cdef int v, vlow, best, cand, pos
    cdef long long bit
    for v in range(n):
        deg[v] = POPCOUNTLL(adj[v])
    with nogil:
        cut[0] = 0
        w[0] = 0
        for mask in range(1, total):
            vlow = CTZLL(mask)
            sub = mask ^ ((<long long>1) << vlow)
            cut[mask] = cut[sub] + <int>(deg[vlow] - 2 * POPCOUNTLL(adj[vlow] & sub))
            best = INF32
            for v in range(n):
                bit = (<long long>1) << v
                if mask & bit:
                    cand = w[mask ^ bit]
                    if cand < best:
                        best = cand
            w[mask] = best if best > cut[mask] else cut[mask]
        s_mask = total - 1
        for pos in range(n - 1, -1, -1):
            for v in range(n):
                bit = (<long long>1) << v
                if not (s_mask & bit):
                    continue
                cand = w[s_mask ^ bit]
                if cand < cut[s_mask]:
                    cand = cut[s_mask]
                if cand == w[s_mask]:
                    order[pos] = v
                    s_mask ^= bit
                    break
    return int(w[total - 1]), order


def repunit_distances_impl(long long half, moves):
    """BFS distances from 0 with steps +-(2^a - 1); see _pykern."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] mv = np.asarray(moves, dtype=np.int64)
    cdef long long size = 2 * half + 1
    cdef cnp.ndarray[cnp.int8_t, ndim=1] dist = np.full(size, -1, dtype=np.int8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue = np.empty(size, dtype=np.int64)
    cdef long long head = 0, tail = 0, x, y
    cdef Py_ssize_t t
    cdef signed char d
    dist[half] = 0
    queue[tail] = half
    tail += 1
    with nogil:
        while head < tail:
            x = queue[head]
            head += 1
            d = dist[x] + 1
            for t in range(mv.shape[0]):
                y = x + mv[t]
                if y < size and dist[y] < 0:
                    dist[y] = d
                    queue[tail] = y
                    tail += 1
                y = x - mv[t]
                if y >= 0 and dist[y] < 0:
                    dist[y] = d
                    queue[tail] = y
                    tail += 1
    return dist
