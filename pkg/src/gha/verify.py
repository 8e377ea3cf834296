"""In-process verification suites behind the `gha verify` subcommand.

Each suite returns (name, ok, detail) triples; the CLI prints one line per
check and exits 2 if anything failed.  These are quick-running spot checks;
the full acceptance criteria live in the test suite.
"""

from __future__ import annotations

import numpy as np

from . import exact, gadgets, randgraph, repunit
from .core import Allocation, HouseValues, Instance, envy, min_cuts_all_k, prefix_cut_profile
from .families import complete_graph, cycle_graph, random_connected_graph, random_tree

TABLE_UPTO_20 = [1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4]

Check = tuple[str, bool, str]


def _random_instance(rng, n, value_max=50) -> Instance:
    graph = random_connected_graph(n, 0.3, rng)
    values = sorted(int(x) for x in rng.integers(0, value_max + 1, size=n))
    return Instance.create(graph, HouseValues.from_iterable(values))


def suite_core(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks: list[Check] = []

    bad = 0
    for _ in range(50):
        inst = _random_instance(rng, int(rng.integers(2, 14)))
        alloc = Allocation.from_iterable(rng.permutation(inst.n).tolist())
        profile = prefix_cut_profile(inst, alloc)
        if profile.weighted_sum(inst.houses) != envy(inst, alloc):
            bad += 1
    checks.append(("decomposition identity (50 random instances)", bad == 0, f"{bad} mismatches"))

    bad = 0
    for _ in range(10):
        graph = random_connected_graph(int(rng.integers(3, 11)), 0.4, rng)
        mins = min_cuts_all_k(graph)
        for k in range(1, graph.n):
            if mins[k] != mins[graph.n - k]:
                bad += 1
    checks.append(("cut symmetry delta(k) == delta(n-k)", bad == 0, f"{bad} asymmetries"))

    bad = 0
    for _ in range(20):
        inst = _random_instance(rng, int(rng.integers(2, 10)))
        alloc = Allocation.from_iterable(rng.permutation(inst.n).tolist())
        if envy(inst, alloc) < inst.houses.spread:
            bad += 1
    checks.append(("connected lower bound envy >= h_n - h_1", bad == 0, f"{bad} below"))

    bad = 0
    for _ in range(20):
        inst = _random_instance(rng, int(rng.integers(2, 8)))
        lo, hi = exact.bruteforce_min_max(inst)
        if lo > 0 and hi > inst.graph.num_edges * lo:
            bad += 1
        if lo == 0 and hi > inst.graph.num_edges * inst.houses.spread:
            bad += 1
    checks.append(("any allocation is an |E|-approximation", bad == 0, f"{bad} violations"))

    from .core import center_of_gravity

    bad = 0
    for _ in range(100):
        tree = random_tree(int(rng.integers(1, 60)), rng)
        v = center_of_gravity(tree)
        sizes = _component_sizes_without(tree, v)
        if any(s > tree.n // 2 for s in sizes):
            bad += 1
    checks.append(("center-of-gravity postcondition (100 trees)", bad == 0, f"{bad} bad"))
    return checks


def _component_sizes_without(tree, v):
    from collections import deque

    seen = [False] * tree.n
    seen[v] = True
    sizes = []
    for s in range(tree.n):
        if seen[s]:
            continue
        seen[s] = True
        size = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in tree.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    size += 1
                    queue.append(w)
        sizes.append(size)
    return sizes


def suite_repunit(seed: int = 0) -> list[Check]:
    checks: list[Check] = []
    table = [repunit.elegance(m).elegance for m in range(1, 21)]
    checks.append(("elegance table m=1..20", table == TABLE_UPTO_20, str(table)))

    bulk = repunit.elegance_values(2048)
    bad = sum(1 for m in range(1, 2049) if int(bulk[m]) != repunit.elegance(m).elegance)
    checks.append(("bulk table == per-m search (m <= 2048)", bad == 0, f"{bad} mismatches"))

    bad = 0
    for m in range(1, 257):
        rec = repunit.elegance(m)
        if rec.witness.value != m or len(rec.witness.terms) != rec.elegance:
            bad += 1
    checks.append(("witness reconstruction (m <= 256)", bad == 0, f"{bad} invalid"))

    worst = None
    ok = True
    for k in range(1, 9):
        n = (1 << (k + 1)) - 1
        for i in range(1, (1 << k)):
            d = repunit.delta_complete_binary(k, i)
            e = repunit.elegance(i).elegance
            if not (e - 1 <= d <= e):
                ok = False
                worst = (k, i, d, e)
    checks.append(
        ("sandwich elegance-1 <= delta <= elegance (k <= 8)", ok,
         "no violation" if ok else f"first violation (k, i, delta, elegance) = {worst}")
    )

    limit = 1 << 16
    ev = repunit.elegance_values(limit).astype(np.int64)
    rv = repunit.runs_values(limit).astype(np.int64)
    bad = int(np.count_nonzero(rv[1:] > 3 * ev[1:] - 2))
    checks.append(("runs(i) <= 3*elegance(i) - 2 (i <= 2^16)", bad == 0, f"{bad} violations"))

    # empirical threshold for delta == elegance, reported per depth
    details = []
    for k in range(3, 9):
        n = (1 << (k + 1)) - 1
        t = 0
        for i in range(1, n // 2 + 1):
            if repunit.delta_complete_binary(k, i) != repunit.elegance(i).elegance:
                break
            t = i
        details.append(f"k={k}: i<={t} (half={1 << (k - 1)})")
    checks.append(("delta == elegance threshold probe", True, "; ".join(details)))
    return checks


def suite_gadgets(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks: list[Check] = []

    reports = []
    for r, c in [(1, 8), (2, 5), (3, 4)]:
        rep = gadgets.check_grid_cut_lemma(r, c)
        reports.append(rep.violations)
    rep_big = gadgets.check_grid_cut_lemma(4, 6, samples=20_000, seed=seed)
    reports.append(rep_big.violations)
    checks.append(("grid cut lemma", sum(reports) == 0, f"violations={reports}"))

    bad = 0
    for _ in range(30):
        k = int(rng.choice([3, 5, 9]))
        n = int(rng.integers(10 * k, 20 * k))
        if (n % 2) == (k % 2):
            n += 1
        fl = gadgets.build_flower(n, k)
        if gadgets.flower_condition_violations(fl):
            bad += 1
        lo = 4 * n / (5 * k)
        hi = 6 * n / (5 * k)
        sizes = _flower_petal_sizes(fl)
        if any(not lo <= s <= hi for s in sizes):
            bad += 1
    checks.append(("flower conditions + petal size bounds (30 random)", bad == 0, f"{bad} bad"))

    rep = gadgets.check_flower_even_cut(gadgets.build_flower(10, 3))
    rep2 = gadgets.check_flower_even_cut(gadgets.build_flower(40, 3), samples=3000, seed=seed)
    checks.append(
        ("flower even-cut >= 2", rep.violations == 0 and rep2.violations == 0,
         f"exhaustive={rep.violations}, sampled={rep2.violations}")
    )

    tp = gadgets.ThreePartitionInstance.create([1, 1, 2], 4)
    witness = gadgets.PartitionWitness(((0, 1, 2),))
    ok = True
    details = []
    for gen in (gadgets.gen_depth2_tree, gadgets.gen_clique, gadgets.gen_grid):
        gadget = gen(tp, 2)
        e = envy(gadget.instance, gadgets.yes_allocation(gadget, witness))
        details.append(f"{gadget.family.value}:{e}")
        ok = ok and e <= 3 * tp.m**2
    tp_even = gadgets.ThreePartitionInstance.create([2, 2, 2], 6)
    gadget = gadgets.gen_expander(tp_even, 4, seed=seed)
    e = envy(gadget.instance, gadgets.yes_allocation(gadget, gadgets.PartitionWitness(((0, 1, 2),))))
    details.append(f"expander:{e}")
    ok = ok and e <= 3 * tp_even.m**2
    checks.append(("YES allocations within 3m^2", ok, " ".join(details)))

    gadget = gadgets.gen_bounded_tree_instance(tp_even, allow_desk_scale=True)
    achieved = envy(gadget.instance, gadgets.yes_allocation(gadget, gadgets.PartitionWitness(((0, 1, 2),))))
    expected = gadgets.envy_yes_threshold(tp_even)
    checks.append(
        ("bounded-tree YES envy == threshold", achieved == expected,
         f"achieved has {achieved.bit_length()} bits")
    )

    cheeger_k4 = gadgets.check_cheeger_constant(complete_graph(4))
    cheeger_c6 = gadgets.check_cheeger_constant(cycle_graph(6))
    checks.append(
        ("cheeger constants K_4=2, C_6=2/3",
         cheeger_k4 == 2 and str(cheeger_c6) == "2/3",
         f"{cheeger_k4}, {cheeger_c6}")
    )
    return checks


def _flower_petal_sizes(fl: gadgets.Flower) -> list[int]:
    from collections import deque

    sizes = []
    for root in fl.petal_roots:
        seen = {fl.pistil, root}
        size = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in fl.tree.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    size += 1
                    queue.append(w)
        sizes.append(size)
    return sizes


def suite_random(seed: int = 0, n: int = 500, subsets: int = 2000) -> list[Check]:
    checks: list[Check] = []
    eps = randgraph.epsilon_threshold(n)
    failures = []
    for attempt in range(20):
        graph = randgraph.sample_gnp_half(n, seed + attempt)
        report = randgraph.concentration_check(graph, eps, subsets, seed + attempt)
        if report.violations == 0:
            break
        failures.append(seed + attempt)
    else:
        checks.append(("concentration (soft gate)", False, f"failed on all 20 seeds {failures}"))
        return checks
    detail = f"seed={report.seed}, violations=0"
    if failures:
        detail += f" (failed seeds: {failures})"
    checks.append(("concentration (soft gate)", True, detail))

    rng = np.random.default_rng(seed)
    values = HouseValues.from_iterable(sorted(int(x) for x in rng.integers(0, 10_000, size=n)))
    ratio = randgraph.arbitrary_allocation_ratio(graph, values, trials=20, seed=seed)
    envelope = randgraph.approximation_envelope(n)
    checks.append(
        ("arbitrary allocation within envelope", ratio <= envelope,
         f"ratio={float(ratio):.4f} <= {float(envelope):.4f}")
    )
    return checks


SUITES = {
    "core": suite_core,
    "repunit": suite_repunit,
    "gadgets": suite_gadgets,
    "random": suite_random,
}


def run_suite(name: str, seed: int = 0) -> list[Check]:
    return SUITES[name](seed)
