"""Benchmark orchestration: run algorithms over manifest-described instances.

A manifest is JSON: {"entries": [{"id": ..., "family": ..., "sizes": [...],
"seeds": [...], "algorithms": [...], "value_max": ...}, ...]}.  Records come
back in manifest order; per-record failures are recorded in the status
column and never abort the run.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

import numpy as np

from . import approx, exact
from .core import HouseValues, Instance
from .errors import GhaError
from .families import (
    complete_binary_tree,
    cycle_graph,
    path_graph,
    random_tree,
)
from .randgraph import sample_gnp_half

CSV_SCHEMA_LINE = "schema=1"
CSV_COLUMNS = [
    "instance_id",
    "family",
    "n",
    "algorithm",
    "achieved_envy",
    "certificate_bound",
    "optimal_envy",
    "wall_ms",
    "seed",
    "status",
]


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    family: str
    n: int
    algorithm: str
    achieved_envy: str
    certificate_bound: str
    optimal_envy: str
    wall_ms: float
    seed: int
    status: str

    def to_row(self) -> list[str]:
        return [
            self.instance_id,
            self.family,
            str(self.n),
            self.algorithm,
            self.achieved_envy,
            self.certificate_bound,
            self.optimal_envy,
            repr(self.wall_ms),
            str(self.seed),
            self.status,
        ]

    @classmethod
    def from_row(cls, row: list[str]) -> "BenchRecord":
        return cls(
            instance_id=row[0],
            family=row[1],
            n=int(row[2]),
            algorithm=row[3],
            achieved_envy=row[4],
            certificate_bound=row[5],
            optimal_envy=row[6],
            wall_ms=float(row[7]),
            seed=int(row[8]),
            status=row[9],
        )


def _build_instance(family: str, size: int, seed: int, value_max: int) -> Instance:
    rng = np.random.default_rng(seed)
    if family == "random_tree":
        graph = random_tree(size, rng)
    elif family == "gnp":
        graph = sample_gnp_half(size, seed)
    elif family == "path":
        graph = path_graph(size)
    elif family == "cycle":
        graph = cycle_graph(size)
    elif family == "complete_binary":
        graph = complete_binary_tree(size)  # size is the depth here
    else:
        raise GhaError(f"unknown bench family {family!r}")
    values = sorted(int(x) for x in rng.integers(0, value_max + 1, size=graph.n))
    return Instance.create(graph, HouseValues.from_iterable(values))


_LAYOUT_STRATEGIES = {
    "layout_bfs": approx.LayoutStrategy.BFS_ORDER,
    "layout_dfs": approx.LayoutStrategy.DFS_ORDER,
    "layout_tree_trickle": approx.LayoutStrategy.TREE_TRICKLE_ORDER,
    "layout_exact_small": approx.LayoutStrategy.EXACT_SMALL,
}


def _run_algorithm(algorithm: str, instance: Instance, size: int):
    """Returns (achieved, bound, optimal_or_None)."""
    if algorithm == "exact_dp":
        res = exact.solve_exact_dp(instance)
        return res.optimal_envy, res.optimal_envy, res.optimal_envy
    if algorithm == "exact_bruteforce":
        res = exact.solve_exact_bruteforce(instance)
        return res.optimal_envy, res.optimal_envy, res.optimal_envy
    if algorithm == "trickle":
        _, cert = approx.trickle_down(instance.graph, instance.houses)
        return cert.achieved_envy, cert.guarantee_bound, None
    if algorithm == "inorder":
        _, cert = approx.inorder_allocation(size, instance.houses)
        return cert.achieved_envy, cert.guarantee_bound, None
    if algorithm in _LAYOUT_STRATEGIES:
        layout = approx.heuristic_layout(instance.graph, _LAYOUT_STRATEGIES[algorithm])
        _, cert = approx.layout_allocation(instance, layout)
        return cert.achieved_envy, cert.guarantee_bound, None
    raise GhaError(f"unknown algorithm {algorithm!r}")


def bench_run(manifest: dict) -> list[BenchRecord]:
    records: list[BenchRecord] = []
    for entry in manifest.get("entries", []):
        family = entry["family"]
        value_max = int(entry.get("value_max", 1000))
        prefix = entry.get("id", family)
        for size in entry["sizes"]:
            for seed in entry.get("seeds", [0]):
                instance_id = f"{prefix}-{size}-s{seed}"
                try:
                    instance = _build_instance(family, int(size), int(seed), value_max)
                except GhaError as exc:
                    for algorithm in entry["algorithms"]:
                        records.append(
                            BenchRecord(instance_id, family, 0, algorithm, "", "", "",
                                        0.0, int(seed), type(exc).__name__)
                        )
                    continue
                optimal = None
                batch = []
                for algorithm in entry["algorithms"]:
                    start = time.perf_counter()
                    try:
                        achieved, bound, opt = _run_algorithm(algorithm, instance, int(size))
                        elapsed = (time.perf_counter() - start) * 1000.0
                        if opt is not None:
                            optimal = opt
                        batch.append((algorithm, str(achieved), str(bound), elapsed, "ok"))
                    except GhaError as exc:
                        elapsed = (time.perf_counter() - start) * 1000.0
                        batch.append((algorithm, "", "", elapsed, type(exc).__name__))
                for algorithm, achieved, bound, elapsed, status in batch:
                    records.append(
                        BenchRecord(
                            instance_id=instance_id,
                            family=family,
                            n=instance.graph.n,
                            algorithm=algorithm,
                            achieved_envy=achieved,
                            certificate_bound=bound,
                            optimal_envy=str(optimal) if optimal is not None else "",
                            wall_ms=elapsed,
                            seed=int(seed),
                            status=status,
                        )
                    )
    return records


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    buf.write(CSV_SCHEMA_LINE + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.to_row())
    return buf.getvalue()


def records_from_csv(text: str) -> list[BenchRecord]:
    lines = text.splitlines()
    if not lines or lines[0] != CSV_SCHEMA_LINE:
        raise GhaError("missing schema header line")
    reader = csv.reader(lines[1:])
    header = next(reader)
    if header != CSV_COLUMNS:
        raise GhaError("unexpected CSV columns")
    return [BenchRecord.from_row(row) for row in reader]


def plot_data_by_family(records: list[BenchRecord]) -> dict[str, str]:
    """Per-family 'n,ratio' CSV bodies (achieved / optimal where optimal known)."""
    out: dict[str, list[str]] = {}
    for rec in records:
        if rec.status != "ok" or not rec.optimal_envy or not rec.achieved_envy:
            continue
        opt = int(rec.optimal_envy)
        if opt == 0:
            continue
        ratio = int(rec.achieved_envy) / opt
        out.setdefault(rec.family, []).append(f"{rec.n},{ratio:.6f}")
    return {fam: "n,ratio\n" + "\n".join(rows) + "\n" for fam, rows in out.items()}
