"""Approximation algorithms with machine-checkable guarantee certificates.

All three algorithms are value-agnostic: they read the graph and the number
of houses, never the numeric values, so two instances with the same graph
get the same assignment.  Each returns an (Allocation, ApproxCertificate)
pair where `achieved_envy <= guarantee_bound` always holds; the bound is the
one the corresponding guarantee proof yields for the run.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .core import Allocation, Graph, HouseValues, Instance, envy
from .errors import (
    DisconnectedError,
    LengthMismatchError,
    NotATreeError,
    NotCompleteTreeSizeError,
)
from .families import bintree_inorder, complete_binary_tree


@dataclass(frozen=True)
class Layout:
    """Vertex ordering (sigma) with its width: the maximum prefix cut."""

    order: tuple[int, ...]
    width: int

    @classmethod
    def from_order(cls, graph: Graph, order) -> "Layout":
        order = tuple(int(v) for v in order)
        return cls(order=order, width=layout_width(graph, order))


def layout_width(graph: Graph, order) -> int:
    """max over prefixes of the number of edges leaving the prefix."""
    if sorted(order) != list(range(graph.n)):
        raise LengthMismatchError("order is not a permutation of the vertices")
    in_prefix = [False] * graph.n
    cut = 0
    width = 0
    for i in range(graph.n - 1):
        v = order[i]
        inside = sum(1 for w in graph.adjacency[v] if in_prefix[w])
        cut += graph.degree(v) - 2 * inside
        in_prefix[v] = True
        if cut > width:
            width = cut
    return width


@dataclass(frozen=True)
class ApproxCertificate:
    achieved_envy: int
    guarantee_bound: int
    bound_name: str  # TrickleDown | LayoutWidth | InOrder

    def __post_init__(self):
        assert self.achieved_envy <= self.guarantee_bound, "certificate violated"


class LayoutStrategy(enum.Enum):
    BFS_ORDER = "bfs"
    DFS_ORDER = "dfs"
    TREE_TRICKLE_ORDER = "tree-trickle"
    EXACT_SMALL = "exact-small"


def _ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def _check_tree(tree: Graph) -> None:
    if not tree.is_connected():
        raise DisconnectedError("input graph is disconnected")
    if tree.num_edges != tree.n - 1:
        raise NotATreeError("input graph is not a tree")


def _component_centroid(tree: Graph, comp: list[int], removed: list[bool]) -> int:
    """Center of gravity of the subtree induced by comp; smallest id on ties."""
    size = {v: 1 for v in comp}
    parent = {comp[0]: -1}
    order = [comp[0]]
    for u in order:
        for w in tree.adjacency[u]:
            if not removed[w] and w not in parent:
                parent[w] = u
                order.append(w)
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    total = len(comp)
    for v in sorted(comp):
        worst = total - size[v]
        for w in tree.adjacency[v]:
            if not removed[w] and w != parent.get(v, -1) and size[w] > worst:
                worst = size[w]
        if worst <= total // 2:
            return v
    raise AssertionError("tree has no center of gravity")  # pragma: no cover


def trickle_down(tree: Graph, houses: HouseValues) -> tuple[Allocation, ApproxCertificate]:
    """Recursive center-of-gravity allocation on trees, O(n log n).

    Each call gives the largest remaining house to a center of gravity,
    splits the remaining houses into contiguous blocks matching the
    component sizes (components ordered by smallest vertex id), and recurses.
    Certificate: max_degree * (h_n - h_1) * ceil(log2 n).
    """
    if len(houses) != tree.n:
        raise LengthMismatchError(f"{len(houses)} houses for {tree.n} vertices")
    _check_tree(tree)
    n = tree.n
    assignment = [0] * n
    removed = [False] * n
    stack: list[tuple[list[int], int, int]] = [(list(range(n)), 0, n)]
    while stack:
        comp, lo, hi = stack.pop()
        if len(comp) == 1:
            assignment[comp[0]] = lo
            continue
        v = _component_centroid(tree, comp, removed)
        assignment[v] = hi - 1
        removed[v] = True
        pieces = []
        claimed = set()
        for w in sorted(tree.adjacency[v]):
            if removed[w] or w in claimed:
                continue
            piece = [w]
            claimed.add(w)
            queue = deque([w])
            while queue:
                u = queue.popleft()
                for x in tree.adjacency[u]:
                    if not removed[x] and x not in claimed and x != v:
                        claimed.add(x)
                        piece.append(x)
                        queue.append(x)
            pieces.append(piece)
        pieces.sort(key=min)
        offset = lo
        for piece in pieces:
            stack.append((piece, offset, offset + len(piece)))
            offset += len(piece)
        assert offset == hi - 1
    alloc = Allocation.from_iterable(assignment)
    achieved = envy(Instance.create(tree, houses), alloc)
    bound = tree.max_degree * houses.spread * _ceil_log2(n) if n > 1 else 0
    return alloc, ApproxCertificate(achieved, bound, "TrickleDown")


def layout_allocation(instance: Instance, layout: Layout) -> tuple[Allocation, ApproxCertificate]:
    """Give the vertex at layout position j the j-th least-valued house.

    Certificate: width(sigma) * (h_n - h_1), since at most width(sigma)
    edges span any smallest subinterval.
    """
    n = instance.graph.n
    if len(layout.order) != n:
        raise LengthMismatchError(f"layout of length {len(layout.order)} for n={n}")
    assignment = [0] * n
    for j, v in enumerate(layout.order):
        assignment[v] = j
    alloc = Allocation.from_iterable(assignment)
    achieved = envy(instance, alloc)
    bound = layout.width * instance.houses.spread
    return alloc, ApproxCertificate(achieved, bound, "LayoutWidth")


def _search_start(graph: Graph) -> int:
    """Smallest-id vertex of minimum degree (a path endpoint on paths)."""
    return min(range(graph.n), key=lambda v: (graph.degree(v), v))


def _bfs_order(graph: Graph, start: int) -> list[int]:
    order = [start]
    seen = [False] * graph.n
    seen[start] = True
    for u in order:
        for w in graph.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
    return order


def _dfs_order(graph: Graph, start: int) -> list[int]:
    order = []
    seen = [False] * graph.n
    stack = [start]
    while stack:
        u = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        order.append(u)
        for w in reversed(graph.adjacency[u]):
            if not seen[w]:
                stack.append(w)
    return order


def heuristic_layout(graph: Graph, strategy: LayoutStrategy, cap: int | None = None) -> Layout:
    """A valid layout by the chosen strategy; a practical stand-in for
    exact cutwidth machinery on graphs too large to solve exactly."""
    if not graph.is_connected():
        raise DisconnectedError("heuristic layouts require a connected graph")
    if strategy is LayoutStrategy.BFS_ORDER:
        return Layout.from_order(graph, _bfs_order(graph, _search_start(graph)))
    if strategy is LayoutStrategy.DFS_ORDER:
        return Layout.from_order(graph, _dfs_order(graph, _search_start(graph)))
    if strategy is LayoutStrategy.TREE_TRICKLE_ORDER:
        _check_tree(graph)
        positions = HouseValues.from_iterable(range(graph.n))
        alloc, _ = trickle_down(graph, positions)
        order = alloc.positions()
        return Layout.from_order(graph, order)
    if strategy is LayoutStrategy.EXACT_SMALL:
        from .exact import cutwidth_exact_small

        layout, _ = cutwidth_exact_small(graph, cap=cap)
        return layout
    raise ValueError(f"unknown strategy {strategy!r}")  # pragma: no cover


def inorder_allocation(depth: int, houses: HouseValues) -> tuple[Allocation, ApproxCertificate]:
    """Sorted houses along the in-order traversal of the complete binary tree.

    The number of edges spanning the i-th smallest subinterval equals the
    number of bit runs of min(i, n-i), which is at most 3.5 times the
    minimum possible cut, so the certificate is
    floor(7/2 * sum_i gap_i * elegance(min(i, n-i))).
    """
    n = (1 << (depth + 1)) - 1
    if len(houses) != n:
        raise NotCompleteTreeSizeError(
            f"{len(houses)} houses cannot fill a depth-{depth} complete binary tree (need {n})"
        )
    tree = complete_binary_tree(depth)
    order = bintree_inorder(n)
    assignment = [0] * n
    for pos, v in enumerate(order):
        assignment[v] = pos
    alloc = Allocation.from_iterable(assignment)
    achieved = envy(Instance.create(tree, houses), alloc)
    from .repunit import elegance_values

    eleg = elegance_values(max(n // 2, 1))
    gaps = houses.gaps()
    weighted = sum(
        gaps[i - 1] * int(eleg[min(i, n - i)]) for i in range(1, n) if gaps[i - 1]
    )
    bound = (7 * weighted) // 2
    return alloc, ApproxCertificate(achieved, bound, "InOrder")
