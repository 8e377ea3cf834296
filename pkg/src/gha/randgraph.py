"""Erdos-Renyi G(n, 1/2) sampling and cut-concentration experiments.

For G ~ G(n, 1/2) the cut of any vertex set S concentrates around
|S|(n-|S|)/2, which pins the optimal envy within a (1 +- eps) envelope at
eps = sqrt(24 ln n / n).  The quantifier over all S is not testable
exhaustively; these checks are seeded falsification probes with stratified
subset sampling, reported rather than hard-asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Allocation, Graph, HouseValues, Instance, envy
from .errors import EpsilonTooSmallError


@dataclass(frozen=True)
class ConcentrationReport:
    n: int
    epsilon: float
    samples: int
    worst_low_ratio: Fraction
    worst_high_ratio: Fraction
    violations: int
    seed: int


def epsilon_threshold(n: int) -> float:
    """The smallest epsilon the concentration statement covers: sqrt(24 ln n / n)."""
    return math.sqrt(24.0 * math.log(n) / n)


def sample_gnp_half(n: int, seed: int) -> Graph:
    """Seeded G(n, 1/2): every unordered pair independently with probability 1/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    if n == 1:
        return Graph.from_edges(1, [])
    iu, iv = np.triu_indices(n, k=1)
    keep = rng.integers(0, 2, size=len(iu)).astype(bool)
    edges = list(zip(iu[keep].tolist(), iv[keep].tolist()))
    return Graph.from_edges(n, edges)


def concentration_check(
    graph: Graph, epsilon: float, subset_samples: int, seed: int
) -> ConcentrationReport:
    """Probe (1-eps) <= delta(S) / (|S|(n-|S|)/2) <= (1+eps) on sampled subsets.

    Sizes are cycled over 1..n/2 so every size class is hit.  Ratios are
    exact rationals; a violation means the sampled set escapes the envelope.
    """
    n = graph.n
    eps = float(epsilon)
    if eps < epsilon_threshold(n) - 1e-12:
        raise EpsilonTooSmallError(
            f"epsilon {eps} below threshold {epsilon_threshold(n):.6f} for n={n}"
        )
    rng = np.random.default_rng(seed)
    eu = np.array([u for u, _ in graph.edges], dtype=np.int64)
    ev = np.array([v for _, v in graph.edges], dtype=np.int64)
    lo = Fraction(1, 1) - Fraction(eps)
    hi = Fraction(1, 1) + Fraction(eps)
    worst_low = None
    worst_high = None
    violations = 0
    half = max(n // 2, 1)
    for t in range(subset_samples):
        k = 1 + t % half
        member = np.zeros(n, dtype=bool)
        member[rng.choice(n, size=k, replace=False)] = True
        cut = int(np.count_nonzero(member[eu] != member[ev])) if len(eu) else 0
        ratio = Fraction(2 * cut, k * (n - k))
        if worst_low is None or ratio < worst_low:
            worst_low = ratio
        if worst_high is None or ratio > worst_high:
            worst_high = ratio
        if ratio < lo or ratio > hi:
            violations += 1
    return ConcentrationReport(
        n=n,
        epsilon=eps,
        samples=subset_samples,
        worst_low_ratio=worst_low,
        worst_high_ratio=worst_high,
        violations=violations,
        seed=seed,
    )


def expected_cut_weighted_sum(houses: HouseValues, n: int) -> Fraction:
    """sum_i (h_{i+1} - h_i) * i(n-i)/2: the expected-cut envy scale."""
    gaps = houses.gaps()
    return Fraction(sum(g * i * (n - i) for i, g in enumerate(gaps, start=1)), 2)


def arbitrary_allocation_ratio(
    graph: Graph, houses: HouseValues, trials: int, seed: int
) -> Fraction:
    """Worst sampled-allocation envy over the concentration lower bound.

    The lower bound is (1 - eps) * sum_i (h_{i+1} - h_i) i(n-i)/2 at
    eps = sqrt(24 ln n / n); on G(n, 1/2) samples the result should stay
    below (1+eps)/(1-eps).
    """
    n = graph.n
    scale = expected_cut_weighted_sum(houses, n)
    if scale == 0:
        return Fraction(0)
    eps = Fraction(epsilon_threshold(n))
    lower = (1 - eps) * scale
    rng = np.random.default_rng(seed)
    worst = 0
    eu = np.array([u for u, _ in graph.edges], dtype=np.int64)
    ev = np.array([v for _, v in graph.edges], dtype=np.int64)
    vectorizable = houses.spread * max(graph.num_edges, 1) < (1 << 62)
    if vectorizable:
        vals = np.array(houses.values, dtype=np.int64)
        for _ in range(trials):
            perm = rng.permutation(n)
            worst = max(worst, int(np.abs(vals[perm[eu]] - vals[perm[ev]]).sum()))
    else:
        instance = Instance.create(graph, houses)
        for _ in range(trials):
            alloc = Allocation.from_iterable(rng.permutation(n).tolist())
            worst = max(worst, envy(instance, alloc))
    return Fraction(worst) / lower


def approximation_envelope(n: int) -> Fraction:
    """(1+eps)/(1-eps) at the lemma's threshold epsilon."""
    eps = Fraction(epsilon_threshold(n))
    return (1 + eps) / (1 - eps)
