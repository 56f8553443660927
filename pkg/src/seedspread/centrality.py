"""Baseline structural measures and degree-based seed heuristics.

Every measure is a pure function of an immutable graph: re-running with the
same inputs is bit-identical.  Directed-graph conventions: degree ranking
uses out-degree; Katz, closeness, betweenness, PageRank and LeaderRank walk
stored edge directions; eigenvector centrality and the k-shell index use the
underlying undirected view.
"""

from __future__ import annotations

import numpy as np

from .base import (
    CentralityEstimator,
    ConvergenceError,
    SeedSelector,
    SeedSet,
    check_probability,
    check_seed_count,
)
from .diffusion import attempt_arcs, reach_over_live_arcs, replication_rng
from .graph import Graph, bfs_distances


def _row_sums(indptr: np.ndarray, values: np.ndarray) -> np.ndarray:
    # Segment sums over CSR rows; cumsum form is safe for empty rows.
    acc = np.concatenate(([0.0], np.cumsum(values)))
    return acc[indptr[1:]] - acc[indptr[:-1]]


def _spectral_radius_bound(indptr: np.ndarray, indices: np.ndarray, n: int, iters: int = 100) -> float:
    """Upper bound on the adjacency spectral radius.

    Power iteration on A + I with the Collatz-Wielandt bound
    max_i (Ax)_i / x_i, which is valid for any strictly positive x; the
    shift keeps x positive and avoids oscillation on bipartite graphs.
    """
    if indices.size == 0:
        return 0.0
    x = np.ones(n)
    best = np.inf
    for _ in range(iters):
        ax = _row_sums(indptr, x[indices])
        best = min(best, float((ax / x).max()))
        x = ax + x
        x /= x.max()
    return best


class DegreeCentrality(CentralityEstimator):
    """Scores nodes by degree (out-degree on directed graphs)."""

    measure = "degree"

    def _score(self, graph: Graph) -> np.ndarray:
        return graph.degree_vector("stored").astype(np.float64)


class KatzCentrality(CentralityEstimator):
    """Walk counts attenuated by ``beta`` per step.

    score(i) = row sum of sum_{j>=1} (beta A)^j, accumulated iteratively
    until the max update falls below ``tol``.  ``beta`` must stay strictly
    below 1/spectral-radius; that is validated against a runtime power
    iteration bound, with the iteration cap as a backstop.
    """

    measure = "katz"

    def __init__(self, beta: float = 0.1, tol: float = 1e-9, max_iter: int = 1000):
        self.beta = beta
        self.tol = tol
        self.max_iter = max_iter

    def _score(self, graph: Graph) -> np.ndarray:
        beta = float(self.beta)
        if not 0.0 <= beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {beta!r}")
        n = graph.node_count
        if beta == 0.0:
            return np.zeros(n)
        indptr, indices = graph.adjacency("stored")
        rho = _spectral_radius_bound(indptr, indices, n)
        if beta * rho >= 1.0:
            raise ValueError(
                f"beta={beta} is not below 1/spectral-radius (radius bound {rho:.4f}); "
                "the walk series would diverge"
            )
        x = np.zeros(n)
        for _ in range(int(self.max_iter)):
            y = beta * _row_sums(indptr, x[indices] + 1.0)
            residual = float(np.abs(y - x).max())
            x = y
            if residual < self.tol:
                return x
        raise ConvergenceError(
            "katz accumulation did not converge", residual=residual, iterations=int(self.max_iter)
        )


class ClosenessCentrality(CentralityEstimator):
    """Reciprocal of the summed distance to all reachable nodes.

    Nodes that reach nothing score 0.  On graphs with several components
    this favors members of small components, which is intentional.
    """

    measure = "closeness"

    def _score(self, graph: Graph) -> np.ndarray:
        indptr, indices = graph.adjacency("stored")
        n = graph.node_count
        scores = np.zeros(n)
        for v in range(n):
            dist = bfs_distances(indptr, indices, n, v)
            farness = int(dist[dist > 0].sum())
            if farness > 0:
                scores[v] = 1.0 / farness
        return scores


class BetweennessCentrality(CentralityEstimator):
    """Fraction of shortest paths passing through each node.

    Accumulated over single-source shortest-path DAGs.  Undirected graphs
    count each unordered endpoint pair once; directed graphs count ordered
    pairs.  Endpoints are excluded.
    """

    measure = "betweenness"

    def _score(self, graph: Graph) -> np.ndarray:
        indptr, indices = graph.adjacency("stored")
        n = graph.node_count
        bc = np.zeros(n)
        for s in range(n):
            order: list[int] = []
            preds: list[list[int]] = [[] for _ in range(n)]
            sigma = np.zeros(n)
            sigma[s] = 1.0
            dist = np.full(n, -1, dtype=np.int64)
            dist[s] = 0
            queue = [s]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                order.append(u)
                du = dist[u]
                for w in indices[indptr[u] : indptr[u + 1]]:
                    w = int(w)
                    if dist[w] < 0:
                        dist[w] = du + 1
                        queue.append(w)
                    if dist[w] == du + 1:
                        sigma[w] += sigma[u]
                        preds[w].append(u)
            delta = np.zeros(n)
            for w in reversed(order):
                coeff = (1.0 + delta[w]) / sigma[w]
                for u in preds[w]:
                    delta[u] += sigma[u] * coeff
                if w != s:
                    bc[w] += delta[w]
        if not graph.directed:
            bc /= 2.0
        return bc


class EigenvectorCentrality(CentralityEstimator):
    """Dominant-eigenvector scores on the undirected view.

    Power iteration with a +I shift (same eigenvectors, no bipartite
    oscillation), normalized to unit maximum entry, converged when the
    successive-iterate max difference drops below ``tol``.
    """

    measure = "eigenvector"

    def __init__(self, tol: float = 1e-9, max_iter: int = 1000):
        self.tol = tol
        self.max_iter = max_iter

    def _score(self, graph: Graph) -> np.ndarray:
        if graph.edge_count == 0:
            raise ValueError("eigenvector centrality needs at least one edge")
        indptr, indices = graph.adjacency("undirected")
        x = np.ones(graph.node_count)
        for _ in range(int(self.max_iter)):
            y = _row_sums(indptr, x[indices]) + x
            y /= y.max()
            residual = float(np.abs(y - x).max())
            x = y
            if residual < self.tol:
                return x
        raise ConvergenceError(
            "eigenvector power iteration did not converge",
            residual=residual,
            iterations=int(self.max_iter),
        )


class PageRank(CentralityEstimator):
    """Random-surfer fixpoint with uniform teleport and dangling-mass
    redistribution; scores sum to 1 within tolerance."""

    measure = "pagerank"

    def __init__(self, damping: float = 0.85, tol: float = 1e-9, max_iter: int = 200):
        self.damping = damping
        self.tol = tol
        self.max_iter = max_iter

    def _score(self, graph: Graph) -> np.ndarray:
        d = float(self.damping)
        if not 0.0 < d < 1.0:
            raise ValueError(f"damping must lie in (0, 1), got {d!r}")
        n = graph.node_count
        outdeg = graph.degree_vector("stored").astype(np.float64)
        rev_indptr, rev_indices = graph.adjacency("reverse")
        dangling = outdeg == 0
        pr = np.full(n, 1.0 / n)
        for _ in range(int(self.max_iter)):
            contrib = np.divide(pr, outdeg, out=np.zeros(n), where=~dangling)
            gathered = _row_sums(rev_indptr, contrib[rev_indices])
            new = (1.0 - d) / n + d * (gathered + pr[dangling].sum() / n)
            residual = float(np.abs(new - pr).max())
            pr = new
            if residual < self.tol:
                return pr
        raise ConvergenceError(
            "pagerank did not converge", residual=residual, iterations=int(self.max_iter)
        )


class LeaderRank(CentralityEstimator):
    """Parameter-free walk with a ground node linked to every node.

    The ground node removes danglings and the teleport parameter; its final
    score is shared out evenly over the real nodes, so the returned scores
    sum to the node count.
    """

    measure = "leaderrank"

    def __init__(self, tol: float = 1e-9, max_iter: int = 1000):
        self.tol = tol
        self.max_iter = max_iter

    def _score(self, graph: Graph) -> np.ndarray:
        n = graph.node_count
        outdeg_aug = graph.degree_vector("stored").astype(np.float64) + 1.0
        rev_indptr, rev_indices = graph.adjacency("reverse")
        scores = np.ones(n)
        ground = 0.0
        for _ in range(int(self.max_iter)):
            contrib = scores / outdeg_aug
            new = _row_sums(rev_indptr, contrib[rev_indices]) + ground / n
            new_ground = float(contrib.sum())
            residual = max(float(np.abs(new - scores).max()), abs(new_ground - ground))
            scores, ground = new, new_ground
            if residual < self.tol:
                return scores + ground / n
        raise ConvergenceError(
            "leaderrank walk did not converge", residual=residual, iterations=int(self.max_iter)
        )


class KShellDecomposition(CentralityEstimator):
    """Shell index from iterative pruning on the undirected view.

    For k = 1, 2, ... repeatedly delete every node whose remaining degree is
    at most k, assigning shell index k to the deleted nodes.  Isolated nodes
    fall into shell 1.
    """

    measure = "kshell"

    def _score(self, graph: Graph) -> np.ndarray:
        indptr, indices = graph.adjacency("undirected")
        n = graph.node_count
        deg = np.diff(indptr).astype(np.int64)
        shell = np.zeros(n, dtype=np.int64)
        removed = np.zeros(n, dtype=bool)
        remaining = n
        k = 0
        while remaining > 0:
            k += 1
            stack = [v for v in range(n) if not removed[v] and deg[v] <= k]
            while stack:
                v = stack.pop()
                if removed[v]:
                    continue
                removed[v] = True
                shell[v] = k
                remaining -= 1
                for w in indices[indptr[v] : indptr[v + 1]]:
                    w = int(w)
                    if not removed[w]:
                        deg[w] -= 1
                        if deg[w] == k:
                            stack.append(w)
        return shell.astype(np.float64)


class DegreeDiscount(SeedSelector):
    """Greedy discounted-degree selection for small activation probability.

    A node u with degree d and t already-selected neighbors is valued at
    d - 2t - (d - t) * t * p; the pick with the highest value wins each
    round (ties to the lowest id) and its neighbors are re-valued.
    """

    method = "degreediscount"

    def __init__(self, k: int = 50, p: float = 0.01):
        self.k = k
        self.p = p

    def _select(self, graph: Graph) -> SeedSet:
        k = check_seed_count(graph, self.k)
        p = check_probability(self.p, "p")
        if p == 0.0:
            raise ValueError("p must be positive")
        degree = graph.degree_vector("stored").astype(np.float64)
        rev_indptr, rev_indices = graph.adjacency("reverse")
        discounted = degree.copy()
        taken = np.zeros(graph.node_count, dtype=np.int64)
        selected = np.zeros(graph.node_count, dtype=bool)
        seeds: list[int] = []
        for _ in range(k):
            u = int(np.argmax(np.where(selected, -np.inf, discounted)))
            seeds.append(u)
            selected[u] = True
            for w in rev_indices[rev_indptr[u] : rev_indptr[u + 1]]:
                w = int(w)
                if selected[w]:
                    continue
                taken[w] += 1
                t = taken[w]
                discounted[w] = degree[w] - 2.0 * t - (degree[w] - t) * t * p
        return SeedSet(self.method, tuple(seeds), k, {"k": k, "p": p})


class GreedyIC(SeedSelector):
    """Plain greedy influence maximization under independent cascades.

    Each round adds the node with the highest Monte Carlo marginal spread
    gain.  All candidates in a round share the same live-arc draws per
    replication (common random numbers), which both reduces variance and
    lets one reachability pass serve every candidate.  Deterministic given
    the master seed; still far slower than any of the structural selectors.
    """

    method = "greedy"

    def __init__(self, k: int = 50, p: float = 0.01, replications: int = 200, seed: int = 0):
        self.k = k
        self.p = p
        self.replications = replications
        self.seed = seed

    def _select(self, graph: Graph) -> SeedSet:
        k = check_seed_count(graph, self.k)
        p = check_probability(self.p, "p")
        reps = int(self.replications)
        if reps < 1:
            raise ValueError("replications must be >= 1")
        n = graph.node_count
        srcs, dsts = attempt_arcs(graph)
        n_arcs = srcs.shape[0]
        selected = np.zeros(n, dtype=bool)
        seeds: list[int] = []
        stamp = np.full(n, -1, dtype=np.int64)
        token = 0
        for round_idx in range(k):
            gains = np.zeros(n)
            seed_arr = np.asarray(seeds, dtype=np.int64)
            for r in range(reps):
                rng = replication_rng(self.seed, (round_idx << 32) | r)
                live = rng.random(n_arcs) < p if p > 0.0 else np.zeros(n_arcs, dtype=bool)
                live_srcs = srcs[live]
                live_dsts = dsts[live]
                base = reach_over_live_arcs(n, live_srcs, live_dsts, seed_arr)
                for v in range(n):
                    if selected[v] or base[v]:
                        continue
                    # marginal gain: nodes reachable from v and not already
                    # reached from the current seeds
                    token += 1
                    stamp[v] = token
                    stack = [v]
                    count = 0
                    while stack:
                        u = stack.pop()
                        count += 1
                        lo = np.searchsorted(live_srcs, u, side="left")
                        hi = np.searchsorted(live_srcs, u, side="right")
                        for w in live_dsts[lo:hi]:
                            w = int(w)
                            if stamp[w] != token and not base[w]:
                                stamp[w] = token
                                stack.append(w)
                    gains[v] += count
            gains[selected] = -1.0
            seeds.append(int(np.argmax(gains)))
            selected[seeds[-1]] = True
        return SeedSet(
            self.method,
            tuple(seeds),
            k,
            {"k": k, "p": p, "replications": reps, "seed": int(self.seed)},
        )
