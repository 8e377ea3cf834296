"""Hardness-reduction instance generators and their property checkers.

Every generator starts from a 3-partition instance (3m positive integers
summing to m*T) and emits a graph-plus-values instance whose low-envy
allocations encode valid partitions.  The checkers verify the cut lemmas the
reductions rely on: grid cuts, expansion of the random regular substitutes,
and the parity cut bound of flowers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .core import Allocation, Graph, HouseValues, Instance
from .errors import (
    BadParametersError,
    ExpansionNotCertifiedError,
    InvalidWitnessError,
    NotRegularError,
    ParityViolationError,
    UnsupportedFamilyError,
)
from .families import complete_binary_tree_size, grid_graph

SUBSET_SCAN_CAP = 20


class GadgetFamily(enum.Enum):
    DEPTH2 = "depth2"
    CLIQUE = "clique"
    GRID = "grid"
    EXPANDER = "expander"
    BOUNDED_TREE = "bounded-tree"


@dataclass(frozen=True)
class ThreePartitionInstance:
    """Multiset of 3m positive integers with target triple sum T."""

    items: tuple[int, ...]
    m: int
    T: int

    @classmethod
    def create(cls, items, T: int, strict: bool = False) -> "ThreePartitionInstance":
        items = tuple(int(a) for a in items)
        if len(items) % 3 != 0 or not items:
            raise BadParametersError(f"item count {len(items)} is not a positive multiple of 3")
        m = len(items) // 3
        if any(a <= 0 for a in items):
            raise BadParametersError("items must be positive")
        if sum(items) != m * T:
            raise BadParametersError(f"items sum to {sum(items)}, expected m*T = {m * T}")
        if strict and not all(4 * a > T and 2 * a < T for a in items):
            raise BadParametersError("strict mode requires every item in (T/4, T/2)")
        return cls(items=items, m=m, T=int(T))


@dataclass(frozen=True)
class PartitionWitness:
    """m disjoint index triples, each summing to T."""

    triples: tuple[tuple[int, int, int], ...]

    def validate(self, tp: ThreePartitionInstance) -> None:
        flat = [i for t in self.triples for i in t]
        if len(self.triples) != tp.m or sorted(flat) != list(range(3 * tp.m)):
            raise InvalidWitnessError("triples do not partition the item indices")
        for t in self.triples:
            if sum(tp.items[i] for i in t) != tp.T:
                raise InvalidWitnessError(f"triple {t} does not sum to T={tp.T}")


@dataclass
class GadgetInstance:
    """A generated reduction instance with per-vertex role labels.

    `groups` carries the construction's structure (vertex lists per
    component) so certificate allocations can be produced without re-deriving
    it from labels.
    """

    instance: Instance
    role_labels: tuple[str, ...]
    C: int
    family: GadgetFamily
    tp: ThreePartitionInstance
    groups: dict = field(repr=False)


@dataclass(frozen=True)
class Flower:
    """Recursively balanced bounded-degree tree: a pistil plus odd-size petals."""

    tree: Graph
    pistil: int
    petal_roots: tuple[int, ...]
    n: int
    k: int


def _flower_split(n: int, k: int) -> list[int]:
    """Petal sizes for a flower with n >= 2 vertices: odd, near-equal, summing to n-1."""
    if n - 1 < k:
        return [1] * (n - 1)
    d = k if (n % 2) != (k % 2) else k - 1
    base = (n - 1) // d
    if base % 2 == 0:
        base -= 1
    rem = (n - 1) - d * base
    assert rem >= 0 and rem % 2 == 0 and rem < 2 * d
    sizes = [base] * d
    for i in range(rem // 2):
        sizes[i] += 2
    return sizes


def build_flower(n: int, k: int) -> Flower:
    """Deterministic recursive construction of the flower F(n, k)."""
    if n < 1 or k < 3:
        raise BadParametersError(f"flower needs n >= 1 and k >= 3, got ({n}, {k})")
    edges: list[tuple[int, int]] = []
    counter = 0

    def build(size: int) -> int:
        nonlocal counter
        root = counter
        counter += 1
        if size == 1:
            return root
        for child_size in _flower_split(size, k):
            child_root = build(child_size)
            edges.append((root, child_root))
        return root

    pistil = build(n)
    tree = Graph.from_edges(n, edges)
    petal_roots = tuple(sorted(tree.adjacency[pistil]))
    return Flower(tree=tree, pistil=pistil, petal_roots=petal_roots, n=n, k=k)


def flower_condition_violations(flower: Flower) -> list[str]:
    """Check the defining conditions at every recursive node; empty list = valid."""
    tree = flower.tree
    n = tree.n
    parent = [-1] * n
    order = [flower.pistil]
    seen = [False] * n
    seen[flower.pistil] = True
    for u in order:
        for w in tree.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    problems = []
    k = flower.k
    for v in order:
        kids = [w for w in tree.adjacency[v] if parent[w] == v]
        if not kids:
            continue
        sizes = [size[w] for w in kids]
        if sum(sizes) != size[v] - 1:
            problems.append(f"node {v}: petal sizes do not sum to n-1")
        if size[v] - 1 >= k:
            want = k if (size[v] % 2) != (k % 2) else k - 1
            if len(kids) != want:
                problems.append(f"node {v}: degree {len(kids)}, expected {want}")
        if any(s % 2 == 0 for s in sizes):
            problems.append(f"node {v}: even petal size")
        if sizes and max(sizes) - min(sizes) > 2:
            problems.append(f"node {v}: petal sizes differ by more than 2")
    if tree.max_degree > k + 1:
        problems.append(f"max degree {tree.max_degree} exceeds k+1")
    return problems


@dataclass(frozen=True)
class CutLemmaReport:
    exhaustive: bool
    subsets_checked: int
    violations: int
    min_slack: float


def check_grid_cut_lemma(
    r: int, c: int, exhaustive_cap: int = 18, samples: int = 100_000, seed: int = 0
) -> CutLemmaReport:
    """Probe delta(A) >= min(sqrt(|A|), r/2) over subsets with |A| <= rc/2.

    Exhaustive (via per-size minimum cuts, one subset scan) when rc fits the
    cap, sampled otherwise.  Exhaustive counts enumerate each cut once
    (complementary subsets identified).
    """
    if r > c:
        raise BadParametersError("expected r <= c")
    g = grid_graph(r, c)
    n = r * c
    half = n // 2
    if half < 1:
        return CutLemmaReport(True, 0, 0, 0.0)

    def slack(cut: int, k: int) -> float:
        return cut - min(math.sqrt(k), r / 2)

    def violates(cut: int, k: int) -> bool:
        # exact form of cut >= min(sqrt(k), r/2)
        return not (2 * cut >= r or cut * cut >= k)

    if n <= exhaustive_cap:
        mins, _ = kernels.subset_min_cuts(n, g.edges)
        violations = sum(1 for k in range(1, half + 1) if violates(int(mins[k]), k))
        min_slack = min(slack(int(mins[k]), k) for k in range(1, half + 1))
        checked = sum(math.comb(n, k) for k in range(1, half + (n % 2 == 1)))
        if n % 2 == 0:
            checked += math.comb(n, half) // 2
        return CutLemmaReport(True, checked, violations, min_slack)
    rng = np.random.default_rng(seed)
    eu = np.array([u for u, _ in g.edges])
    ev = np.array([v for _, v in g.edges])
    violations = 0
    min_slack = math.inf
    for t in range(samples):
        k = 1 + t % half
        subset = rng.choice(n, size=k, replace=False)
        member = np.zeros(n, dtype=bool)
        member[subset] = True
        cut = int(np.count_nonzero(member[eu] != member[ev]))
        min_slack = min(min_slack, slack(cut, k))
        if violates(cut, k):
            violations += 1
    return CutLemmaReport(False, samples, violations, min_slack)


def check_flower_even_cut(
    flower: Flower, exhaustive_cap: int = 20, samples: int = 10_000, seed: int = 0
) -> CutLemmaReport:
    """Probe delta(A) >= 2 for even, nonempty, pistil-free vertex sets A."""
    g = flower.tree
    n = g.n
    if n - 1 <= exhaustive_cap:
        mins, _ = kernels.subset_min_cuts(n, g.edges, exclude=flower.pistil)
        even_ks = [k for k in range(2, n, 2)]
        violations = sum(1 for k in even_ks if int(mins[k]) < 2)
        min_cut = min((int(mins[k]) for k in even_ks), default=2)
        checked = sum(math.comb(n - 1, k) for k in even_ks)
        return CutLemmaReport(True, checked, violations, float(min_cut - 2))
    rng = np.random.default_rng(seed)
    eu = np.array([u for u, _ in g.edges])
    ev = np.array([v for _, v in g.edges])
    others = np.array([v for v in range(n) if v != flower.pistil])
    violations = 0
    worst = math.inf
    for t in range(samples):
        k = 2 * (1 + t % ((n - 1) // 2))
        subset = rng.choice(others, size=k, replace=False)
        member = np.zeros(n, dtype=bool)
        member[subset] = True
        cut = int(np.count_nonzero(member[eu] != member[ev]))
        worst = min(worst, cut - 2)
        if cut < 2:
            violations += 1
    return CutLemmaReport(False, samples, violations, float(worst))


def check_cheeger_constant(
    graph: Graph, exhaustive_cap: int = 20, samples: int = 10_000, seed: int = 0
) -> Fraction:
    """min over subsets S with |S| <= n/2 of delta(S) / |S|, as an exact rational."""
    degs = {graph.degree(v) for v in range(graph.n)}
    if len(degs) != 1:
        raise NotRegularError("cheeger constant requires a regular graph")
    n = graph.n
    if n <= exhaustive_cap:
        mins, _ = kernels.subset_min_cuts(n, graph.edges)
        return min(Fraction(int(mins[k]), k) for k in range(1, n // 2 + 1))
    rng = np.random.default_rng(seed)
    eu = np.array([u for u, _ in graph.edges])
    ev = np.array([v for _, v in graph.edges])
    best = None
    for t in range(samples):
        k = 1 + t % (n // 2)
        subset = rng.choice(n, size=k, replace=False)
        member = np.zeros(n, dtype=bool)
        member[subset] = True
        cut = int(np.count_nonzero(member[eu] != member[ev]))
        ratio = Fraction(cut, k)
        if best is None or ratio < best:
            best = ratio
    return best


def _hub_tree_edges(m: int):
    """Smallest complete binary tree with >= 3m leaves (at most 12m nodes).

    Returns (node_count, edges, leaf_ids) in heap numbering.
    """
    leaves_needed = 3 * m
    depth = max(1, math.ceil(math.log2(leaves_needed))) if leaves_needed > 1 else 1
    while (1 << depth) < leaves_needed:
        depth += 1
    node_count = complete_binary_tree_size(depth)
    edges = []
    for i in range(node_count):
        for child in (2 * i + 1, 2 * i + 2):
            if child < node_count:
                edges.append((i, child))
    leaf_ids = list(range((1 << depth) - 1, node_count))
    return node_count, edges, leaf_ids


def _star_cluster_values(tp: ThreePartitionInstance, C: int, copies_per_unit: int, zeros: int):
    """zeros houses of value 0 plus copies_per_unit*T houses of each value 1..m."""
    values = [0] * zeros
    for j in range(1, tp.m + 1):
        values.extend([j] * (copies_per_unit * tp.T))
    return HouseValues.from_iterable(values)


def gen_depth2_tree(tp: ThreePartitionInstance, C: int) -> GadgetInstance:
    """Root with 3m item stars: item i contributes a hub with C*a_i - 1 children."""
    if C < 1:
        raise BadParametersError("C must be >= 1")
    edges = []
    labels = ["root"]
    components = []
    next_id = 1
    for i, a in enumerate(tp.items):
        hub = next_id
        next_id += 1
        edges.append((0, hub))
        labels.append(f"hub_{i}")
        members = [hub]
        for _ in range(C * a - 1):
            child = next_id
            next_id += 1
            edges.append((hub, child))
            labels.append("filler")
            members.append(child)
        components.append(members)
    graph = Graph.from_edges(next_id, edges)
    houses = _star_cluster_values(tp, C, C, zeros=1)
    inst = Instance.create(graph, houses)
    groups = {"root": [0], "components": components}
    return GadgetInstance(inst, tuple(labels), C, GadgetFamily.DEPTH2, tp, groups)


def gen_clique(tp: ThreePartitionInstance, C: int) -> GadgetInstance:
    """Root joined to 3m cliques, clique i of size C*a_i."""
    if C < 1:
        raise BadParametersError("C must be >= 1")
    edges = []
    labels = ["root"]
    components = []
    next_id = 1
    for i, a in enumerate(tp.items):
        members = list(range(next_id, next_id + C * a))
        next_id += C * a
        labels.append(f"hub_{i}")
        labels.extend(["filler"] * (C * a - 1))
        edges.append((0, members[0]))
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                edges.append((members[x], members[y]))
        components.append(members)
    graph = Graph.from_edges(next_id, edges)
    houses = _star_cluster_values(tp, C, C, zeros=1)
    inst = Instance.create(graph, houses)
    groups = {"root": [0], "components": components}
    return GadgetInstance(inst, tuple(labels), C, GadgetFamily.CLIQUE, tp, groups)


def gen_grid(tp: ThreePartitionInstance, C: int) -> GadgetInstance:
    """3m grids Grid(C, C*a_i), each tied by one edge to a distinct hub-tree leaf."""
    if C < 1:
        raise BadParametersError("C must be >= 1")
    tree_n, edges, leaf_ids = _hub_tree_edges(tp.m)
    labels = ["tree-node"] * tree_n
    components = []
    next_id = tree_n
    for i, a in enumerate(tp.items):
        rows, cols = C, C * a
        base = next_id
        members = list(range(base, base + rows * cols))
        next_id += rows * cols
        for rr in range(rows):
            for cc in range(cols):
                v = base + rr * cols + cc
                labels.append(f"grid({i},{rr},{cc})")
                if cc + 1 < cols:
                    edges.append((v, v + 1))
                if rr + 1 < rows:
                    edges.append((v, v + cols))
        edges.append((leaf_ids[i], base))  # attach at cell (0, 0)
        components.append(members)
    graph = Graph.from_edges(next_id, edges)
    houses = _star_cluster_values(tp, C, C * C, zeros=tree_n)
    inst = Instance.create(graph, houses)
    groups = {"tree": list(range(tree_n)), "components": components}
    return GadgetInstance(inst, tuple(labels), C, GadgetFamily.GRID, tp, groups)


def _random_cubic_edges(nv: int, rng: np.random.Generator, max_attempts: int = 1000):
    """Simple 3-regular graph on nv vertices by stub pairing with rejection."""
    for _ in range(max_attempts):
        stubs = np.repeat(np.arange(nv), 3)
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2)
        edges = set()
        ok = True
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return sorted(edges)
    raise ExpansionNotCertifiedError(f"no simple 3-regular pairing found for nv={nv}")


def _expansion_certified(nv, edges, exhaustive_cap, rng, samples=2000) -> bool:
    """delta(B) >= |B|/100 for all |B| <= nv/2 (exhaustive under the cap, sampled above)."""
    if nv <= exhaustive_cap:
        mins, _ = kernels.subset_min_cuts(nv, edges)
        return all(100 * int(mins[k]) >= k for k in range(1, nv // 2 + 1))
    eu = np.array([u for u, _ in edges])
    ev = np.array([v for _, v in edges])
    for t in range(samples):
        k = 1 + t % (nv // 2)
        subset = rng.choice(nv, size=k, replace=False)
        member = np.zeros(nv, dtype=bool)
        member[subset] = True
        cut = int(np.count_nonzero(member[eu] != member[ev]))
        if 100 * cut < k:
            return False
    return True


def gen_expander(
    tp: ThreePartitionInstance,
    C: int,
    seed: int = 0,
    exhaustive_cap: int = SUBSET_SCAN_CAP,
    max_retries: int = 50,
) -> GadgetInstance:
    """Each item star replaced by a seeded random 3-regular graph on C*a_i vertices.

    Every component must pass the empirical expansion check
    delta(B) >= |B|/100; construction retries with fresh randomness up to
    max_retries times, then raises ExpansionNotCertifiedError.
    """
    if C < 1:
        raise BadParametersError("C must be >= 1")
    for i, a in enumerate(tp.items):
        if C * a < 6 or (C * a) % 2 != 0:
            raise ParityViolationError(
                f"component {i}: C*a_i = {C * a} must be an even integer >= 6"
            )
    rng = np.random.default_rng(seed)
    tree_n, edges, leaf_ids = _hub_tree_edges(tp.m)
    labels = ["tree-node"] * tree_n
    components = []
    next_id = tree_n
    for i, a in enumerate(tp.items):
        nv = C * a
        for attempt in range(max_retries):
            comp_edges = _random_cubic_edges(nv, rng)
            if _expansion_certified(nv, comp_edges, exhaustive_cap, rng):
                break
        else:
            raise ExpansionNotCertifiedError(
                f"component {i} failed the expansion check {max_retries} times"
            )
        base = next_id
        members = list(range(base, base + nv))
        next_id += nv
        labels.append(f"hub_{i}")
        labels.extend(["filler"] * (nv - 1))
        for u, v in comp_edges:
            edges.append((base + u, base + v))
        edges.append((leaf_ids[i], base))
        components.append(members)
    graph = Graph.from_edges(next_id, edges)
    houses = _star_cluster_values(tp, C, C, zeros=tree_n)
    inst = Instance.create(graph, houses)
    groups = {"tree": list(range(tree_n)), "components": components}
    return GadgetInstance(inst, tuple(labels), C, GadgetFamily.EXPANDER, tp, groups)


def scale_factor(tp: ThreePartitionInstance) -> int:
    """s(1) base: the vertex count 64mT of the bounded-degree-tree gadget."""
    return 64 * tp.m * tp.T


def _s(tp: ThreePartitionInstance, j: int) -> int:
    return scale_factor(tp) ** (2 * j)


def envy_yes_threshold(tp: ThreePartitionInstance) -> int:
    """Exact envy of the certificate allocation of the bounded-degree-tree gadget.

    With gap lengths l_j = s(4m+1-j) between consecutive value clusters:
    sum_{j=1}^{3m-1} (j+1) l_j  +  3m * l_{3m}  +  sum_{j=1}^{m} (3m+3j) l_{3m+j}.
    """
    m = tp.m

    def ell(j: int) -> int:
        return _s(tp, 4 * m + 1 - j)

    total = sum((j + 1) * ell(j) for j in range(1, 3 * m))
    total += 3 * m * ell(3 * m)
    total += sum((3 * m + 3 * j) * ell(3 * m + j) for j in range(1, m + 1))
    return total


def bounded_tree_cluster_values(tp: ThreePartitionInstance) -> list[int]:
    """The 4m+1 distinct cluster values, lowest first."""
    m = tp.m
    out = [0]
    for i in range(2, 4 * m + 2):
        out.append(out[-1] + _s(tp, 4 * m - i + 2))
    return out


def gen_bounded_tree_instance(
    tp: ThreePartitionInstance,
    small_k: int = 99,
    large_k: int = 999,
    allow_desk_scale: bool = False,
) -> GadgetInstance:
    """The 64mT-vertex flower-path tree whose exact optimum decides 3-partition.

    A path of 3m medium flowers F(T, small_k); medium flower i carries a
    small flower F(a_i, small_k), which carries two large flowers
    F(10T, large_k), all joined pistil to pistil.  Values come in 4m+1
    clusters separated by the rapidly shrinking gaps s(4m), ..., s(1).

    Items must be even (and T even); items below 1000 require
    allow_desk_scale=True, matching the construction's intended scaling.
    """
    if tp.T % 2 != 0 or any(a % 2 != 0 for a in tp.items):
        raise ParityViolationError("bounded-tree gadget requires even T and even items")
    if not allow_desk_scale and min(tp.items) < 1000:
        raise BadParametersError(
            "items below 1000 need allow_desk_scale=True (desk-scale override)"
        )
    m = tp.m
    T = tp.T
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    next_id = 0

    def add_flower(count: int, k: int, tag: str):
        nonlocal next_id
        fl = build_flower(count, k)
        base = next_id
        next_id += count
        for u, v in fl.tree.edges:
            edges.append((base + u, base + v))
        for v in range(count):
            labels.append(f"{'pistil' if v == fl.pistil else 'petal'}({tag})")
        return base + fl.pistil, list(range(base, base + count))

    mediums, smalls, larges = [], [], []
    medium_pistils = []
    for i in range(3 * m):
        pistil, members = add_flower(T, small_k, f"medium,{i}")
        medium_pistils.append(pistil)
        mediums.append(members)
    for i in range(3 * m - 1):
        edges.append((medium_pistils[i], medium_pistils[i + 1]))
    for i, a in enumerate(tp.items):
        s_pistil, s_members = add_flower(a, small_k, f"small,{i}")
        smalls.append(s_members)
        edges.append((medium_pistils[i], s_pistil))
        pair = []
        for b in range(2):
            l_pistil, l_members = add_flower(10 * T, large_k, f"large,{i},{b}")
            pair.append(l_members)
            edges.append((s_pistil, l_pistil))
        larges.append(pair)
    assert next_id == 64 * m * T
    graph = Graph.from_edges(next_id, edges)
    cluster_vals = bounded_tree_cluster_values(tp)
    values: list[int] = []
    for cv in cluster_vals[:-1]:
        values.extend([cv] * T)
    values.extend([cluster_vals[-1]] * (60 * m * T))
    inst = Instance.create(graph, HouseValues.from_iterable(values))
    groups = {"medium": mediums, "small": smalls, "large": larges}
    return GadgetInstance(inst, tuple(labels), 1, GadgetFamily.BOUNDED_TREE, tp, groups)


def yes_allocation(gadget: GadgetInstance, witness: PartitionWitness) -> Allocation:
    """The certificate allocation of the gadget's family for a valid witness.

    Star-family gadgets (depth2/clique/grid/expander) give value j to the
    components of the j-th triple and 0 to the hub, for envy at most 3m^2.
    The bounded-tree gadget fills medium flowers with the first 3m clusters
    in path order and triple j's small flowers with cluster 3m+j, achieving
    exactly envy_yes_threshold.
    """
    tp = gadget.tp
    witness.validate(tp)
    n = gadget.instance.graph.n
    assignment = [-1] * n
    cursor = 0

    def give(vertices):
        nonlocal cursor
        for v in vertices:
            assignment[v] = cursor
            cursor += 1

    fam = gadget.family
    if fam in (GadgetFamily.DEPTH2, GadgetFamily.CLIQUE):
        give(gadget.groups["root"])  # the single 0-valued house
        for triple in witness.triples:
            for item in sorted(triple):
                give(gadget.groups["components"][item])
    elif fam in (GadgetFamily.GRID, GadgetFamily.EXPANDER):
        give(gadget.groups["tree"])  # the zero-valued houses
        for triple in witness.triples:
            for item in sorted(triple):
                give(gadget.groups["components"][item])
    elif fam is GadgetFamily.BOUNDED_TREE:
        for members in gadget.groups["medium"]:
            give(members)
        for triple in witness.triples:
            for item in sorted(triple):
                give(gadget.groups["small"][item])
        for pair in gadget.groups["large"]:
            for members in pair:
                give(members)
    else:  # pragma: no cover - enum is closed
        raise UnsupportedFamilyError(f"no YES allocation for family {fam}")
    assert cursor == n and all(a >= 0 for a in assignment)
    return Allocation.from_iterable(assignment)
