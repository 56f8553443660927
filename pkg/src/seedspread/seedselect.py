"""Distance- and common-neighbor-aware seed selection.

All selectors in this module walk the nodes in descending degree order
(ties broken by ascending id) and accept a candidate unless a rejection
test fires against one of the already-selected seeds.  The family differs
only in how aggressive that test is:

* :class:`DegreeDistance` rejects any candidate within distance ``d_td``
  of a seed, so accepted seeds are pairwise at distance >= d_td.
* :class:`FIDD` only rejects a near candidate when it also shares at least
  ``theta`` first-order common neighbors with that seed; a weakly-attached
  high-degree node near a seed therefore stays eligible.
* :class:`SIDD` additionally requires the seed's influence score over the
  candidate (direct link plus two-hop paths through common neighbors) to
  reach ``beta`` before rejecting.

Examined candidates are consumed whether or not they are accepted; when the
candidate list runs out the result is a partial seed set flagged via
``complete=False``, never an error.  Distance, neighborhood and adjacency
tests all use the underlying undirected view; the degree ranking uses
out-degree on directed graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .base import (
    SeedSelector,
    SeedSet,
    check_positive_int,
    check_probability,
    check_seed_count,
    rank_by_score,
)
from .graph import Graph, bfs_distances

AUTO_THETA = "auto"


@dataclass(frozen=True)
class PairwiseInfluence:
    """Constant pairwise activation probability between adjacent nodes."""

    p: float = 0.01

    def __post_init__(self):
        check_probability(self.p, "p")

    def probability(self, u: int, w: int) -> float:
        return self.p


def influence_score(graph: Graph, v: int, s_prime: int, model: PairwiseInfluence | float = 0.01) -> float:
    """Influence of seed ``v`` on candidate ``s_prime``.

    The direct term P(v, s') applies only when the two are adjacent; every
    first-order common neighbor w adds P(v, w) * P(w, s').  With a constant
    model p this reduces to ``p + p**2 * n_common`` for adjacent pairs and
    ``p**2 * n_common`` otherwise.
    """
    if isinstance(model, (int, float)):
        model = PairwiseInfluence(float(model))
    v = int(v)
    s_prime = int(s_prime)
    if v == s_prime:
        raise ValueError("candidate and seed must differ")
    nv = graph.neighbors(v, "undirected")
    ns = graph.neighbors(s_prime, "undirected")
    adjacent = bool(np.isin(s_prime, nv, assume_unique=True))
    score = model.probability(v, s_prime) if adjacent else 0.0
    for w in np.intersect1d(nv, ns, assume_unique=True):
        w = int(w)
        score += model.probability(v, w) * model.probability(w, s_prime)
    return float(score)


def _check_d_td(value) -> int:
    d_td = check_positive_int(value, "d_td")
    if d_td < 2:
        raise ValueError(f"d_td must be >= 2, got {d_td}")
    return d_td


def _resolve_theta(theta, graph: Graph) -> float:
    if theta == AUTO_THETA:
        return float(math.floor(graph.average_degree() + 0.5))
    theta = float(theta)
    if math.isnan(theta) or theta < 0:
        raise ValueError(f"theta must be non-negative or 'auto', got {theta!r}")
    return theta


def _degree_order(graph: Graph) -> np.ndarray:
    return rank_by_score(graph.degree_vector("stored"))


def _scan(graph: Graph, k: int, d_td: int, rejects_near) -> tuple[list[int], int, bool]:
    """Shared selection loop.

    ``rejects_near(candidate, seed)`` is consulted for every already-selected
    seed within distance < d_td of the candidate (in selection order); the
    first True rejects the candidate.
    """
    n = graph.node_count
    indptr, indices = graph.adjacency("undirected")
    radius = d_td - 1
    seeds: list[int] = []
    examined = 0
    for cand in _degree_order(graph):
        if len(seeds) >= k:
            break
        cand = int(cand)
        examined += 1
        accept = True
        if seeds:
            dist = bfs_distances(indptr, indices, n, cand, max_depth=radius)
            for v in seeds:
                if dist[v] >= 0 and rejects_near(cand, v):
                    accept = False
                    break
        if accept:
            seeds.append(cand)
    return seeds, examined, len(seeds) >= k


class DegreeDistance(SeedSelector):
    """Top-degree selection with a minimum pairwise seed distance."""

    method = "degreedistance"

    def __init__(self, k: int = 50, d_td: int = 2):
        self.k = k
        self.d_td = d_td

    def _select(self, graph: Graph) -> SeedSet:
        k = check_positive_int(self.k, "k")
        d_td = _check_d_td(self.d_td)
        seeds, examined, complete = _scan(graph, k, d_td, lambda cand, v: True)
        return SeedSet(
            self.method, tuple(seeds), k, {"k": k, "d_td": d_td}, complete, examined
        )


class DegreeDistance2(SeedSelector):
    """Removal-based specialization of :class:`DegreeDistance` for d_td=2.

    Selecting a node strikes it and its whole first neighborhood off the
    candidate list, so seeds are pairwise non-adjacent.  Output matches
    ``DegreeDistance(k, d_td=2)`` on every graph.
    """

    method = "degreedistance2"

    def __init__(self, k: int = 50):
        self.k = k

    def _select(self, graph: Graph) -> SeedSet:
        k = check_positive_int(self.k, "k")
        indptr, indices = graph.adjacency("undirected")
        removed = np.zeros(graph.node_count, dtype=bool)
        seeds: list[int] = []
        examined = 0
        for cand in _degree_order(graph):
            if len(seeds) >= k:
                break
            cand = int(cand)
            if removed[cand]:
                continue
            examined += 1
            seeds.append(cand)
            removed[cand] = True
            removed[indices[indptr[cand] : indptr[cand + 1]]] = True
        return SeedSet(
            self.method, tuple(seeds), k, {"k": k, "d_td": 2}, len(seeds) >= k, examined
        )


class _CommonNeighborSelector(SeedSelector):
    """Shared plumbing for the common-neighbor-gated selectors."""

    def _neighbor_sets(self, graph: Graph):
        indptr, indices = graph.adjacency("undirected")
        cache: dict[int, frozenset] = {}

        def nbset(u: int) -> frozenset:
            s = cache.get(u)
            if s is None:
                s = frozenset(int(w) for w in indices[indptr[u] : indptr[u + 1]])
                cache[u] = s
            return s

        return nbset


class FIDD(_CommonNeighborSelector):
    """DegreeDistance gated by first-order common-neighbor count.

    A candidate within distance ``d_td`` of a seed is rejected only when the
    pair shares at least ``theta`` first neighbors.  ``theta="auto"``
    resolves to the network's average degree rounded to the nearest integer
    (2m/n undirected, m/n directed); ``theta=0`` reproduces plain
    DegreeDistance and ``theta=inf`` plain top-degree selection.
    """

    method = "fidd"

    def __init__(self, k: int = 50, d_td: int = 2, theta="auto"):
        self.k = k
        self.d_td = d_td
        self.theta = theta

    def _select(self, graph: Graph) -> SeedSet:
        k = check_positive_int(self.k, "k")
        d_td = _check_d_td(self.d_td)
        theta = _resolve_theta(self.theta, graph)
        self.theta_ = theta
        nbset = self._neighbor_sets(graph)

        def rejects(cand: int, v: int) -> bool:
            return len(nbset(cand) & nbset(v)) >= theta

        seeds, examined, complete = _scan(graph, k, d_td, rejects)
        params = {"k": k, "d_td": d_td, "theta": self.theta, "theta_resolved": theta}
        return SeedSet(self.method, tuple(seeds), k, params, complete, examined)


class SIDD(_CommonNeighborSelector):
    """FIDD with an additional influence-score gate.

    A near candidate is rejected only when the common-neighbor count reaches
    ``theta`` AND the seed's influence score over it reaches ``beta``.  The
    score is recomputed per seed (not accumulated across seeds).  ``beta=0``
    reproduces FIDD; a ``beta`` above the attainable maximum reproduces
    plain top-degree selection.
    """

    method = "sidd"

    def __init__(self, k: int = 50, d_td: int = 2, theta="auto", beta: float = 0.01, p_pair: float = 0.01):
        self.k = k
        self.d_td = d_td
        self.theta = theta
        self.beta = beta
        self.p_pair = p_pair

    def _select(self, graph: Graph) -> SeedSet:
        k = check_positive_int(self.k, "k")
        d_td = _check_d_td(self.d_td)
        theta = _resolve_theta(self.theta, graph)
        beta = float(self.beta)
        if beta < 0:
            raise ValueError(f"beta must be non-negative, got {beta!r}")
        model = PairwiseInfluence(self.p_pair)
        self.theta_ = theta
        nbset = self._neighbor_sets(graph)

        def rejects(cand: int, v: int) -> bool:
            common = nbset(cand) & nbset(v)
            inf = model.probability(v, cand) if v in nbset(cand) else 0.0
            for w in common:
                inf += model.probability(v, w) * model.probability(w, cand)
            return len(common) >= theta and inf >= beta

        seeds, examined, complete = _scan(graph, k, d_td, rejects)
        params = {
            "k": k,
            "d_td": d_td,
            "theta": self.theta,
            "theta_resolved": theta,
            "beta": beta,
            "p_pair": model.p,
        }
        return SeedSet(self.method, tuple(seeds), k, params, complete, examined)


class RandomSeeds(SeedSelector):
    """Uniform sample of k nodes without replacement; the baseline floor."""

    method = "random"

    def __init__(self, k: int = 50, seed: int = 0):
        self.k = k
        self.seed = seed

    def _select(self, graph: Graph) -> SeedSet:
        k = check_seed_count(graph, self.k)
        rng = np.random.default_rng(self.seed)
        seeds = tuple(int(v) for v in rng.choice(graph.node_count, size=k, replace=False))
        return SeedSet(self.method, seeds, k, {"k": k, "seed": int(self.seed)})
