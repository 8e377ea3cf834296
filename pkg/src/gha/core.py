"""Data model and cut primitives for house allocation on graphs.

An instance pairs an undirected simple graph with a sorted multiset of
non-negative integer house values.  An allocation assigns each vertex a
house *index* (0-based position in the sorted value list), so equal values
stay distinguishable and envy is unaffected by how ties are permuted.

All values are Python ints, i.e. arbitrary precision; nothing here assumes
they fit a machine word.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    DuplicateEdgeError,
    LengthMismatchError,
    NotABijectionError,
    NotATreeError,
    SelfLoopError,
    TooLargeError,
    UnsortedValuesError,
    VertexOutOfRangeError,
)

MIN_CUT_CAP = 24


def env_cap(default: int) -> int:
    """Solver size cap, overridable through the GHA_CAP_N environment variable."""
    raw = os.environ.get("GHA_CAP_N")
    if raw is None:
        return default
    return int(raw)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    max_degree: int

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build and validate a graph from an edge list.

        Raises SelfLoopError / DuplicateEdgeError / VertexOutOfRangeError,
        each carrying the index of the offending edge.
        """
        if n < 0:
            raise VertexOutOfRangeError("vertex count must be non-negative")
        norm = []
        seen = set()
        for idx, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoopError(f"edge {idx} is a self-loop at vertex {u}", index=idx)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(
                    f"edge {idx} endpoint out of range: ({u}, {v})", index=idx
                )
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdgeError(f"edge {idx} duplicates ({u}, {v})", index=idx)
            seen.add((u, v))
            norm.append((u, v))
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        adjacency = tuple(tuple(sorted(a)) for a in adj)
        max_degree = max((len(a) for a in adjacency), default=0)
        return cls(n=n, edges=tuple(norm), adjacency=adjacency, max_degree=max_degree)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbor_masks(self) -> list[int]:
        """Adjacency encoded as one bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def is_tree(self) -> bool:
        return self.num_edges == self.n - 1 and self.is_connected()


@dataclass(frozen=True)
class HouseValues:
    """Non-decreasing sequence of non-negative integer house values."""

    values: tuple[int, ...]

    @classmethod
    def from_iterable(cls, values) -> "HouseValues":
        vals = tuple(int(v) for v in values)
        for i, v in enumerate(vals):
            if v < 0:
                raise UnsortedValuesError(f"value {i} is negative", index=i)
            if i > 0 and v < vals[i - 1]:
                raise UnsortedValuesError(
                    f"value {i} breaks the non-decreasing order", index=i
                )
        return cls(values=vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    @property
    def spread(self) -> int:
        """h_n - h_1, the length of the valuation interval."""
        if not self.values:
            return 0
        return self.values[-1] - self.values[0]

    def gaps(self) -> list[int]:
        """Lengths of the smallest subintervals, gap[i] = h_{i+1} - h_i."""
        v = self.values
        return [v[i + 1] - v[i] for i in range(len(v) - 1)]


@dataclass(frozen=True)
class Instance:
    """A graph together with house values, one house per vertex."""

    graph: Graph
    houses: HouseValues
    connected: bool

    @classmethod
    def create(cls, graph: Graph, houses: HouseValues) -> "Instance":
        if len(houses) != graph.n:
            raise LengthMismatchError(
                f"{len(houses)} house values for {graph.n} vertices", index=graph.n
            )
        return cls(graph=graph, houses=houses, connected=graph.is_connected())

    @property
    def n(self) -> int:
        return self.graph.n


def make_instance(n: int, edges, values) -> Instance:
    """Convenience constructor from raw parts; values must already be sorted."""
    return Instance.create(Graph.from_edges(n, edges), HouseValues.from_iterable(values))


@dataclass(frozen=True)
class Allocation:
    """Bijection from vertices to house indices: assignment[v] = house index."""

    assignment: tuple[int, ...]

    @classmethod
    def from_iterable(cls, assignment) -> "Allocation":
        return cls(assignment=tuple(int(a) for a in assignment))

    def check_bijection(self, n: int) -> None:
        a = self.assignment
        if len(a) != n:
            raise NotABijectionError(f"assignment has length {len(a)}, expected {n}")
        seen = [False] * n
        for v, h in enumerate(a):
            if not (0 <= h < n) or seen[h]:
                raise NotABijectionError(
                    f"assignment is not a bijection at vertex {v}", index=v
                )
            seen[h] = True

    def positions(self) -> list[int]:
        """Inverse map: positions()[h] = vertex that holds house index h."""
        inv = [0] * len(self.assignment)
        for v, h in enumerate(self.assignment):
            inv[h] = v
        return inv

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass(frozen=True)
class PrefixCutProfile:
    """cuts[i-1] = number of edges straddling the i lowest-indexed houses."""

    cuts: tuple[int, ...]

    def weighted_sum(self, houses: HouseValues) -> int:
        gaps = houses.gaps()
        return sum(c * g for c, g in zip(self.cuts, gaps))


def validate_instance(instance: Instance) -> Instance:
    """Re-derive and check every derived field of an instance.

    Instances built through the constructors are already valid; this is the
    entry point for data that arrived from files.
    """
    graph = Graph.from_edges(instance.graph.n, instance.graph.edges)
    houses = HouseValues.from_iterable(instance.houses.values)
    return Instance.create(graph, houses)


def envy(instance: Instance, alloc: Allocation) -> int:
    """Total envy: sum over edges of |value difference| under the allocation."""
    alloc.check_bijection(instance.graph.n)
    vals = instance.houses.values
    a = alloc.assignment
    total = 0
    for u, v in instance.graph.edges:
        d = vals[a[u]] - vals[a[v]]
        total += d if d >= 0 else -d
    return total


def prefix_cut_profile(instance: Instance, alloc: Allocation) -> PrefixCutProfile:
    """Number of edges crossing each prefix of the sorted house indices.

    Satisfies envy == sum_i cuts[i] * (h_{i+1} - h_i) exactly.
    """
    alloc.check_bijection(instance.graph.n)
    n = instance.graph.n
    adjacency = instance.graph.adjacency
    order = alloc.positions()
    in_prefix = [False] * n
    cuts = []
    cut = 0
    for i in range(n - 1):
        v = order[i]
        inside = sum(1 for w in adjacency[v] if in_prefix[w])
        cut += len(adjacency[v]) - 2 * inside
        in_prefix[v] = True
        cuts.append(cut)
    return PrefixCutProfile(cuts=tuple(cuts))


def cut_size(graph: Graph, subset) -> int:
    """Number of edges with exactly one endpoint in the subset."""
    members = [False] * graph.n
    for v in subset:
        v = int(v)
        if not 0 <= v < graph.n:
            raise VertexOutOfRangeError(f"subset vertex {v} out of range", index=v)
        members[v] = True
    return sum(1 for u, v in graph.edges if members[u] != members[v])


def min_cut_k_bruteforce(graph: Graph, k: int, cap: int | None = None):
    """Minimizing subset and delta_G(k) by exhaustive subset scan.

    Scans all 2^n subsets (Gray-code in the compiled kernel), so n is
    capped; override with the cap argument or GHA_CAP_N.
    """
    from . import kernels

    n = graph.n
    limit = env_cap(MIN_CUT_CAP) if cap is None else cap
    if n > limit:
        raise TooLargeError(f"n={n} exceeds subset-scan cap {limit}")
    if not 1 <= k <= n - 1:
        raise VertexOutOfRangeError(f"k={k} outside [1, {n - 1}]")
    mins, witnesses = kernels.subset_min_cuts(n, graph.edges)
    mask = int(witnesses[k])
    subset = frozenset(v for v in range(n) if mask >> v & 1)
    return subset, int(mins[k])


def min_cuts_all_k(graph: Graph, cap: int | None = None) -> list[int]:
    """delta_G(k) for every k in 0..n, by one exhaustive subset scan."""
    from . import kernels

    n = graph.n
    limit = env_cap(MIN_CUT_CAP) if cap is None else cap
    if n > limit:
        raise TooLargeError(f"n={n} exceeds subset-scan cap {limit}")
    mins, _ = kernels.subset_min_cuts(n, graph.edges)
    return [int(x) for x in mins]


def center_of_gravity(tree: Graph) -> int:
    """Vertex whose removal leaves components of at most n/2 vertices.

    Linear time; ties broken toward the smallest vertex id.
    """
    if not tree.is_tree():
        raise NotATreeError("center_of_gravity requires a tree")
    n = tree.n
    if n == 1:
        return 0
    # BFS order from 0, then accumulate subtree sizes in reverse.
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
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    best = None
    for v in range(n):
        worst = n - size[v]
        for w in tree.adjacency[v]:
            if w != parent[v] and size[w] > worst:
                worst = size[w]
        if worst <= n // 2:
            if best is None:
                best = v
            break  # smallest id wins; vertices scanned in increasing order
    assert best is not None
    return best


def component_vertices(graph: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * graph.n
    comps = []
    for s in range(graph.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps
