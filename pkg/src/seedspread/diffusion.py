"""Independent-cascade simulation and Monte Carlo spread estimation.

Cascade semantics: all seeds are active at step 0; in the step after a node
becomes active it makes one Bernoulli(p) attempt per currently inactive
out-neighbor; the process stops when a step adds no activations.  Edge
direction is respected on directed graphs; an undirected edge carries one
independent attempt in each direction.

Reproducibility: replication ``r`` of an estimate draws from a Philox
counter-based stream keyed by ``(master_seed, r)``, so results are
bit-identical across runs regardless of execution order.  Within a cascade,
newly active nodes are processed in ascending id order and attempt their
neighbors in ascending id order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import check_graph, check_positive_int, check_probability
from .graph import Graph

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class ICParams:
    """Uniform activation probability, replication count and master seed."""

    p: float = 0.01
    replications: int = 10000
    seed: int = 0

    def __post_init__(self):
        check_probability(self.p, "p")
        check_positive_int(self.replications, "replications")


@dataclass(frozen=True)
class SpreadEstimate:
    """Mean and sample stddev of the activated-node count, seeds included."""

    mean: float
    stddev: float
    replications: int


def replication_rng(master_seed: int, index: int) -> np.random.Generator:
    """Counter-based stream for one replication of one experiment."""
    key = np.array([master_seed & _MASK64, index & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _seed_array(graph: Graph, seeds) -> np.ndarray:
    ids = np.unique(np.asarray(list(seeds), dtype=np.int64))
    if ids.size and (ids[0] < 0 or ids[-1] >= graph.node_count):
        raise ValueError("seed ids out of range")
    return ids


def _cascade(
    indptr: np.ndarray,
    indices: np.ndarray,
    n: int,
    seeds: np.ndarray,
    p: float,
    rng: np.random.Generator,
) -> np.ndarray:
    active = np.zeros(n, dtype=bool)
    active[seeds] = True
    frontier = seeds
    while frontier.size:
        newly = []
        for u in frontier:
            nbrs = indices[indptr[u] : indptr[u + 1]]
            if nbrs.size == 0:
                continue
            cand = nbrs[~active[nbrs]]
            if cand.size == 0 or p <= 0.0:
                continue
            hits = cand[rng.random(cand.size) < p]
            if hits.size:
                active[hits] = True
                newly.append(hits)
        frontier = np.sort(np.concatenate(newly)) if newly else np.empty(0, dtype=np.int64)
    return np.flatnonzero(active)


def simulate_once(graph: Graph, seeds, p: float, rng: np.random.Generator) -> np.ndarray:
    """One cascade; returns the sorted array of activated node ids."""
    graph = check_graph(graph)
    check_probability(p, "p")
    ids = _seed_array(graph, seeds)
    indptr, indices = graph.adjacency("stored")
    return _cascade(indptr, indices, graph.node_count, ids, p, rng)


def estimate_spread(graph: Graph, seeds, params: ICParams) -> SpreadEstimate:
    """Monte Carlo estimate of expected cascade size over independent
    replications, each on its own deterministic stream."""
    graph = check_graph(graph)
    ids = _seed_array(graph, seeds)
    indptr, indices = graph.adjacency("stored")
    n = graph.node_count
    counts = np.empty(params.replications, dtype=np.int64)
    for r in range(params.replications):
        rng = replication_rng(params.seed, r)
        counts[r] = _cascade(indptr, indices, n, ids, params.p, rng).size
    mean = float(counts.mean())
    stddev = float(counts.std(ddof=1)) if params.replications > 1 else 0.0
    return SpreadEstimate(mean=mean, stddev=stddev, replications=params.replications)


# -- live-arc machinery ------------------------------------------------------
#
# A cascade is distributionally equal to reachability over a random subgraph
# that keeps each attempt arc independently with probability p.  Fixing one
# uniform per arc couples cascades across p values, seed sets and candidate
# evaluations; the greedy baseline uses this as its common-random-numbers
# scheme and property tests use it as a monotonicity hook.


def attempt_arcs(graph: Graph) -> tuple[np.ndarray, np.ndarray]:
    """All attempt arcs as (srcs, dsts), sorted by source.

    Directed graphs contribute one arc per edge; undirected graphs one arc
    per direction.
    """
    indptr, indices = graph.adjacency("stored")
    srcs = np.repeat(np.arange(graph.node_count, dtype=np.int64), np.diff(indptr))
    return srcs, indices


def reach_over_live_arcs(
    n: int,
    live_srcs: np.ndarray,
    live_dsts: np.ndarray,
    seeds: np.ndarray,
) -> np.ndarray:
    """Boolean reachability from ``seeds`` along live arcs (srcs sorted)."""
    visited = np.zeros(n, dtype=bool)
    visited[seeds] = True
    stack = list(seeds)
    while stack:
        u = stack.pop()
        lo = np.searchsorted(live_srcs, u, side="left")
        hi = np.searchsorted(live_srcs, u, side="right")
        for w in live_dsts[lo:hi]:
            if not visited[w]:
                visited[w] = True
                stack.append(int(w))
    return visited


def simulate_with_arc_uniforms(graph: Graph, seeds, p: float, uniforms: np.ndarray) -> np.ndarray:
    """Cascade outcome with one pre-drawn uniform per attempt arc.

    With ``uniforms`` held fixed, the activated set is monotone in ``p`` and
    in the seed set.
    """
    graph = check_graph(graph)
    check_probability(p, "p")
    ids = _seed_array(graph, seeds)
    srcs, dsts = attempt_arcs(graph)
    if uniforms.shape[0] != srcs.shape[0]:
        raise ValueError(f"expected {srcs.shape[0]} uniforms, got {uniforms.shape[0]}")
    live = uniforms < p
    visited = reach_over_live_arcs(graph.node_count, srcs[live], dsts[live], ids)
    return np.flatnonzero(visited)
