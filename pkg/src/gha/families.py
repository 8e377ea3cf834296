"""Constructors for the standard graph families used throughout the package."""

from __future__ import annotations

import numpy as np

from .core import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((n - 1, 0))
    return Graph.from_edges(n, edges)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid, vertices numbered row-major."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def complete_binary_tree(depth: int) -> Graph:
    """Complete binary tree of the given depth, heap-numbered from the root.

    Vertex 0 is the root; vertex i has children 2i+1 and 2i+2.  The tree has
    2^(depth+1) - 1 vertices and 2^depth leaves, all at the same depth.
    """
    n = (1 << (depth + 1)) - 1
    edges = []
    for i in range(n):
        for c in (2 * i + 1, 2 * i + 2):
            if c < n:
                edges.append((i, c))
    return Graph.from_edges(n, edges)


def complete_binary_tree_size(depth: int) -> int:
    return (1 << (depth + 1)) - 1


def bintree_subtree_vertices(n: int, root: int) -> list[int]:
    """Vertices of the heap-numbered subtree rooted at `root`, sorted."""
    out = []
    stack = [root]
    while stack:
        v = stack.pop()
        out.append(v)
        for c in (2 * v + 1, 2 * v + 2):
            if c < n:
                stack.append(c)
    return sorted(out)


def bintree_inorder(n: int) -> list[int]:
    """In-order traversal of the heap-numbered complete binary tree."""
    out = []
    stack = []
    v = 0
    while stack or v < n:
        while v < n:
            stack.append(v)
            v = 2 * v + 1
        v = stack.pop()
        out.append(v)
        v = 2 * v + 2
    return out


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform random labeled tree via a Pruefer sequence."""
    if n <= 1:
        return Graph.from_edges(n, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    prufer = rng.integers(0, n, size=n - 2)
    degree = [1] * n
    for x in prufer:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, int(x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, int(x))
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, extra_edge_prob: float, rng: np.random.Generator) -> Graph:
    """A random tree plus each remaining pair independently with given probability."""
    tree = random_tree(n, rng)
    present = set(tree.edges)
    edges = list(tree.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra_edge_prob:
                edges.append((u, v))
    return Graph.from_edges(n, edges)
