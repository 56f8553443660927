"""Seed-set evaluation arithmetic: overlap, coverage, reach, correlation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import check_graph, check_positive_int
from .graph import Graph


def _seed_ids(seeds) -> list[int]:
    return [int(v) for v in getattr(seeds, "seeds", seeds)]


@dataclass(frozen=True)
class OverlapReport:
    """Shared fraction of two top-k seed sets, as a percentage of k."""

    k: int
    common: int
    com_percent: float


@dataclass(frozen=True)
class CoverageReport:
    """Redundancy of the 1-2 hop neighborhoods of a seed set.

    ``total`` sums the per-seed neighborhood sizes, ``unique`` counts the
    distinct nodes in their union; the coverage rate is
    100 - unique/total * 100, so higher means more redundant seeds.
    ``degenerate`` marks the all-seeds-isolated case (total 0).
    """

    k: int
    total: int
    unique: int
    cov_percent: float
    degenerate: bool = False

    @classmethod
    def from_counts(cls, k: int, total: int, unique: int) -> "CoverageReport":
        if total < 0 or unique < 0 or unique > total:
            raise ValueError("need 0 <= unique <= total")
        if total == 0:
            return cls(k, 0, 0, 0.0, degenerate=True)
        return cls(k, total, unique, 100.0 - (unique / total) * 100.0)


def com_overlap(seeds1, seeds2, k: int) -> OverlapReport:
    """Percentage of seeds shared by the top-k prefixes of two seed sets."""
    k = check_positive_int(k, "k")
    s1 = _seed_ids(seeds1)
    s2 = _seed_ids(seeds2)
    if len(s1) < k or len(s2) < k:
        raise ValueError(f"both seed sets must hold at least k={k} seeds")
    common = len(set(s1[:k]) & set(s2[:k]))
    return OverlapReport(k, common, 100.0 * common / k)


def _neighborhood_12(graph: Graph, seed: int) -> np.ndarray:
    return np.union1d(
        graph.neighbors_at(seed, 1, "undirected"),
        graph.neighbors_at(seed, 2, "undirected"),
    )


def cn12_coverage(graph: Graph, seeds, k: int) -> CoverageReport:
    """Coverage rate of the top-k seeds' first and second neighborhoods.

    A seed never counts in its own neighborhood, but does count in another
    seed's when within two hops of it.
    """
    graph = check_graph(graph)
    k = check_positive_int(k, "k")
    ids = _seed_ids(seeds)
    if len(ids) < k:
        raise ValueError(f"seed set holds {len(ids)} seeds, need at least k={k}")
    total = 0
    union = np.empty(0, dtype=np.int64)
    for s in ids[:k]:
        hood = _neighborhood_12(graph, s)
        total += int(hood.size)
        union = np.union1d(union, hood)
    return CoverageReport.from_counts(k, total, int(union.size))


def unique_influenced_percent(graph: Graph, seeds) -> float:
    """Distinct nodes within two hops of any seed, as a percentage of all
    nodes."""
    graph = check_graph(graph)
    ids = _seed_ids(seeds)
    if not ids:
        raise ValueError("seed set is empty")
    union = np.empty(0, dtype=np.int64)
    for s in ids:
        union = np.union1d(union, _neighborhood_12(graph, s))
    return 100.0 * union.size / graph.node_count


def pearson(x, y) -> float:
    """Sample Pearson correlation; raises on degenerate input."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 1 or y.ndim != 1 or x.shape != y.shape:
        raise ValueError("x and y must be equal-length vectors")
    if x.size < 2:
        raise ValueError("need at least two observations")
    xd = x - x.mean()
    yd = y - y.mean()
    sx = float(np.sqrt((xd * xd).sum()))
    sy = float(np.sqrt((yd * yd).sum()))
    if sx == 0.0 or sy == 0.0:
        raise ValueError("correlation undefined for zero-variance input")
    return float((xd * yd).sum() / (sx * sy))


def seed_rank_scores(seeds, node_count: int, k: int | None = None) -> np.ndarray:
    """Rank-derived score vector for a selector's output.

    The i-th selected seed (0-based) scores k - i, every other node scores
    0.  This is the surrogate used to correlate a selector against a
    real-valued measure.
    """
    ids = _seed_ids(seeds)
    if k is None:
        k = len(ids)
    k = check_positive_int(k, "k")
    if len(ids) < k:
        raise ValueError(f"seed set holds {len(ids)} seeds, need at least k={k}")
    scores = np.zeros(node_count)
    for i, s in enumerate(ids[:k]):
        scores[s] = k - i
    return scores
