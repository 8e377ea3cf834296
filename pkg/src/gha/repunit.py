"""Signed repunit sums, bit-run counts, and minimum cuts of complete binary trees.

A repunit is an integer 2^a - 1.  The *elegance* of m is the fewest signed
repunit terms summing to m; it sandwiches the minimum (i, n-i)-cut of a
complete binary tree between elegance(i) - 1 and elegance(i), which is what
makes it computable leverage for allocation lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .core import HouseValues, Instance
from .errors import OutOfRangeError, TooShallowError
from .families import complete_binary_tree

TERM_EXPONENT_SLACK = 2  # search repunits up to 2^(bitlen(m)+2) - 1


@dataclass(frozen=True)
class RepunitRepresentation:
    """Signed term exponents (a_1, ..., a_r); term i contributes sign(a_i) * (2^|a_i| - 1)."""

    terms: tuple[int, ...]
    value: int

    def __post_init__(self):
        assert all(t != 0 for t in self.terms)
        recon = sum((1 if t > 0 else -1) * ((1 << abs(t)) - 1) for t in self.terms)
        assert recon == self.value, "terms do not reconstruct the value"


@dataclass(frozen=True)
class EleganceRecord:
    m: int
    elegance: int
    witness: RepunitRepresentation


@lru_cache(maxsize=16)
def _distance_table(limit: int) -> np.ndarray:
    """BFS distance table over [-4*limit, 4*limit]; cached, safe for concurrent reads."""
    max_a = limit.bit_length() + TERM_EXPONENT_SLACK
    return kernels.repunit_distances(limit, max_a)


def elegance_values(limit: int) -> np.ndarray:
    """elegance(m) for all 1 <= m <= limit as one int8 array (index by m).

    One BFS over the shared state window [-4*limit, 4*limit] with terms up
    to 2^(bitlen(limit)+2) - 1; agreement with the per-m search is covered
    by tests up to 4096.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    dist = _distance_table(int(limit))
    half = 4 * int(limit)
    return dist[half : half + limit + 1].copy()


def elegance(m: int) -> EleganceRecord:
    """Fewest signed repunits summing to m, with a witness representation.

    Breadth-first search from 0 with steps +-(2^a - 1), 1 <= a <=
    bitlen(m)+2, intermediate values within [-4m, 4m].
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    dist = _distance_table(int(m))
    half = 4 * m
    r = int(dist[half + m])
    assert r >= 0, "target unreachable within the search window"
    max_a = m.bit_length() + TERM_EXPONENT_SLACK
    terms = []
    x = m
    d = r
    while d > 0:
        for a in range(1, max_a + 1):
            rep = (1 << a) - 1
            hit = None
            if -4 * m <= x - rep and int(dist[half + x - rep]) == d - 1:
                hit = a
                x -= rep
            elif x + rep <= 4 * m and int(dist[half + x + rep]) == d - 1:
                hit = -a
                x += rep
            if hit is not None:
                terms.append(hit)
                d -= 1
                break
        else:  # pragma: no cover - BFS invariant
            raise AssertionError("witness reconstruction failed")
    witness = RepunitRepresentation(terms=tuple(terms), value=m)
    return EleganceRecord(m=m, elegance=r, witness=witness)


def elegance_iddfs(m: int, extra_term_bits: int = 0) -> int:
    """Reference search: iterative deepening with unbounded intermediates.

    Validates the windowed BFS bounds; only the term size is capped (at
    bitlen(m) + 2 + extra_term_bits).  Exponential in the worst case, use
    for moderate m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    max_a = m.bit_length() + TERM_EXPONENT_SLACK + extra_term_bits

    def dfs(target: int, depth: int, amax: int) -> bool:
        if target == 0:
            return depth == 0
        if depth == 0:
            return False
        # largest magnitude still allowed bounds what `depth` terms can reach
        if abs(target) > ((1 << amax) - 1) * depth:
            return False
        for a in range(amax, 0, -1):
            rep = (1 << a) - 1
            if abs(target) > rep * depth:
                break
            if dfs(target - rep, depth - 1, a):
                return True
            if dfs(target + rep, depth - 1, a):
                return True
        return False

    depth = 1
    while True:
        if dfs(m, depth, max_a):
            return depth
        depth += 1


def runs(i: int) -> int:
    """Number of maximal blocks of equal bits in the binary representation of i."""
    if i < 1:
        raise ValueError("i must be >= 1")
    return (i ^ (i >> 1)).bit_count()


def runs_values(limit: int) -> np.ndarray:
    """runs(i) for all 1 <= i <= limit (index by i; entry 0 is 0)."""
    x = np.arange(limit + 1, dtype=np.int64)
    return np.bitwise_count(x ^ (x >> 1)).astype(np.int16)


@lru_cache(maxsize=16)
def bintree_min_cuts(depth: int) -> tuple[int, ...]:
    """delta_{B_depth}(k) for all k, from the tree knapsack DP; cached per depth."""
    from .exact import tree_min_cut_all

    return tuple(tree_min_cut_all(complete_binary_tree(depth)))


def delta_complete_binary(depth: int, i: int) -> int:
    """Exact minimum (i, n-i)-cut of the complete binary tree of given depth."""
    n = (1 << (depth + 1)) - 1
    if not 1 <= i <= n - 1:
        raise OutOfRangeError(f"i={i} outside [1, {n - 1}] for depth {depth}")
    return bintree_min_cuts(depth)[i]


def two_valued_instance(depth: int, zeros: int) -> Instance:
    """B_depth with `zeros` houses of value 0 and the rest of value 1."""
    tree = complete_binary_tree(depth)
    values = [0] * zeros + [1] * (tree.n - zeros)
    return Instance.create(tree, HouseValues.from_iterable(values))


def value_agnostic_gap_instances(depth: int) -> tuple[Instance, Instance]:
    """The two-instance family on which no single layout is better than 5/3.

    Optimal envies are elegance(89) = 3 and elegance(94) = 2, but no vertex
    ordering attains cut 3 at prefix 89 and cut 2 at prefix 94 at once, so
    any value-agnostic rule loses a factor >= 5/3 on one of the pair.
    """
    n = (1 << (depth + 1)) - 1
    if n < 128:
        raise TooShallowError(f"need at least 128 vertices, got {n}")
    return two_valued_instance(depth, 89), two_valued_instance(depth, 94)
