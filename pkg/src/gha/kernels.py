"""Kernel selection and shared input preparation.

The hot combinatorial loops live twice: compiled (`gha._ckern`, Cython) and
pure numpy/Python (`gha._pykern`).  The compiled module is preferred when it
imported cleanly; set GHA_PURE=1 to force the fallback.  `IMPLEMENTATION`
reports which one is active.

`benchmarks/kernel_bench.py` times the two implementations side by side.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykern

try:
    from . import _ckern
except ImportError:  # pragma: no cover - depends on build environment
    _ckern = None

if os.environ.get("GHA_PURE"):
    _impl = _pykern
elif _ckern is not None:
    _impl = _ckern
else:  # pragma: no cover
    _impl = _pykern

IMPLEMENTATION = "python" if _impl is _pykern else "cython"

MAX_SUBSET_VERTICES = 62  # masks are int64


def _edge_arrays(edges):
    eu = np.array([u for u, _ in edges], dtype=np.int32)
    ev = np.array([v for _, v in edges], dtype=np.int32)
    return eu, ev


def subset_min_cuts(n, edges, exclude=-1, impl=None):
    """Minimum cut per subset size, optionally over subsets avoiding one vertex.

    Cut sizes always count edges to the excluded vertex.  Returns
    (mins, witness_masks) indexed by subset size k; witness masks are in the
    full vertex numbering.
    """
    impl = impl or _impl
    if exclude < 0:
        eu, ev = _edge_arrays(edges)
        deg = np.zeros(n, dtype=np.int64)
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        return impl.subset_min_cuts_impl(n, eu, ev, deg)
    keep = [v for v in range(n) if v != exclude]
    remap = {v: i for i, v in enumerate(keep)}
    m = n - 1
    deg = np.zeros(m, dtype=np.int64)
    inner = []
    for u, v in edges:
        if u != exclude:
            deg[remap[u]] += 1
        if v != exclude:
            deg[remap[v]] += 1
        if u != exclude and v != exclude:
            inner.append((remap[u], remap[v]))
    eu, ev = _edge_arrays(inner)
    mins, wit = impl.subset_min_cuts_impl(m, eu, ev, deg)
    expanded = np.full(m + 1, -1, dtype=np.int64)
    for k in range(m + 1):
        mask = int(wit[k])
        if mask < 0:
            continue
        full_mask = 0
        for i, v in enumerate(keep):
            if mask >> i & 1:
                full_mask |= 1 << v
        expanded[k] = full_mask
    return mins, expanded


def prefix_chain_dp(n, edges, neighbor_masks, gaps, impl=None):
    """Optimal envy over house-index prefixes; gaps[s] = h_{s+1} - h_s (gaps[0] = gaps[n] = 0)."""
    impl = impl or _impl
    eu, ev = _edge_arrays(edges)
    adj = np.array(neighbor_masks, dtype=np.int64)
    gap_arr = np.array(gaps, dtype=np.int64)
    return impl.prefix_dp_impl(n, eu, ev, adj, gap_arr)


def bruteforce_envy(n, edges, values, impl=None):
    """(min envy, max envy, lex-smallest optimal assignment, count) over all n! allocations."""
    impl = impl or _impl
    eu, ev = _edge_arrays(edges)
    vals = np.array(values, dtype=np.int64)
    return impl.bruteforce_impl(n, eu, ev, vals)


def cutwidth_dp(n, edges, neighbor_masks, impl=None):
    """(cutwidth, witness order) by subset DP."""
    impl = impl or _impl
    eu, ev = _edge_arrays(edges)
    adj = np.array(neighbor_masks, dtype=np.int64)
    return impl.cutwidth_impl(n, eu, ev, adj)


def repunit_distances(limit, max_term_exponent, impl=None):
    """Distance table for signed repunit sums, states in [-4*limit, 4*limit].

    Entry [x + 4*limit] is the fewest terms of the form +-(2^a - 1),
    1 <= a <= max_term_exponent, summing to x through in-window intermediate
    states; -1 marks unreachable.

    The numpy level-synchronous BFS is memory-bandwidth bound and as fast as
    the compiled queue BFS (see benchmarks/kernel_bench.py), so it is the
    default for this kernel.
    """
    impl = impl or _pykern
    half = 4 * int(limit)
    moves = np.array(
        [(1 << a) - 1 for a in range(1, max_term_exponent + 1)], dtype=np.int64
    )
    return impl.repunit_distances_impl(half, moves)


def int64_safe(bound: int) -> bool:
    """True when every intermediate quantity bounded by `bound` fits the kernels."""
    return bound < (1 << 62)
