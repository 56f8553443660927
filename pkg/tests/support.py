"""Shared test fixtures: sample networks, random generators, brute oracles.

The oracles here are deliberately naive (dict adjacency, path enumeration,
full subset enumeration) so they stay independent of the library's CSR/BFS
implementations.
"""

from __future__ import annotations

import io
import itertools
from collections import defaultdict, deque

import numpy as np

from seedspread import Graph, load_edge_list

# 19-node sample network; high-degree nodes cluster on one side while a
# secondary hub sits three hops away.  Labels 1..19, edges in draw order.
SAMPLE_NETWORK = """\
10 7
7 6
6 10
10 14
14 11
7 1
1 2
7 8
8 2
2 3
3 1
1 6
6 19
18 6
14 13
14 12
12 17
12 15
12 16
1 7
1 5
1 4
7 9
"""

# 10-node network where the two top-degree hubs are adjacent but share no
# common neighbor, so distance-only exclusion discards a valuable seed.
WEAK_BRIDGE_NETWORK = """\
1 2
2 6
2 7
2 8
1 3
3 4
4 1
1 5
5 9
9 10
"""


def sample_graph():
    return load_edge_list(io.StringIO(SAMPLE_NETWORK))


def weak_bridge_graph():
    return load_edge_list(io.StringIO(WEAK_BRIDGE_NETWORK))


def originals(graph, dense_ids):
    return [int(x) for x in graph.to_original(list(dense_ids))]


def dense(graph, labels):
    return [graph.from_original(x) for x in labels]


# -- random graphs -----------------------------------------------------------


def gnp_graph(rng, n, p_edge, directed=False):
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v or (not directed and u > v):
                continue
            if rng.random() < p_edge:
                edges.append((u, v))
    return Graph.from_edges(edges, directed=directed, num_nodes=n)


def sparse_graph(rng, n, n_edges, directed=False):
    """Graph with exactly ``n_edges`` distinct edges (loops excluded),
    capped at the number of distinct pairs the graph can hold."""
    limit = n * (n - 1) if directed else n * (n - 1) // 2
    n_edges = min(n_edges, limit)
    edges = set()
    while len(edges) < n_edges:
        u = int(rng.integers(n))
        v = int(rng.integers(n))
        if u == v:
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        edges.add(key)
    return Graph.from_edges(sorted(edges), directed=directed, num_nodes=n), sorted(edges)


def collaboration_graph(
    n_nodes,
    seed,
    big_sizes=(65, 55, 48, 42, 36, 30, 26, 22),
    pref=0.15,
    fresh_frac=0.85,
):
    """Synthetic collaboration network with a heavy-tailed group-size mix.

    Growth by small groups (cliques) of 2-4 members with light preferential
    member sampling, interleaved with a few large groups built mostly from
    fresh nodes.  Large-group members end up with similar high degrees and
    near-identical neighborhoods, so a plain degree ranking is dominated by
    mutually adjacent nodes - the redundancy the distance-aware selectors
    exist to avoid.
    """
    rng = np.random.default_rng(seed)
    edges: set[tuple[int, int]] = set()
    pool: list[int] = [0, 1, 2]
    edges.update({(0, 1), (0, 2), (1, 2)})
    next_node = 3
    big_iter = iter(sorted(big_sizes, reverse=True))
    big_at = set(int(x) for x in np.linspace(n_nodes * 0.15, n_nodes * 0.9, len(big_sizes)))
    while next_node < n_nodes:
        if next_node in big_at:
            size = next(big_iter)
            n_fresh = min(int(size * fresh_frac), n_nodes - next_node)
            group = list(range(next_node, next_node + n_fresh))
            next_node += n_fresh
            while len(group) < size:
                cand = int(rng.integers(next_node))
                if cand not in group:
                    group.append(cand)
        else:
            size = 2 + (rng.random() < 0.35) + (rng.random() < 0.1)
            group = [next_node]
            next_node += 1
            tries = 0
            while len(group) < size and tries < 100:
                tries += 1
                if rng.random() < pref:
                    cand = pool[int(rng.integers(len(pool)))]
                else:
                    cand = int(rng.integers(next_node - 1))
                if cand not in group:
                    group.append(cand)
        for a, b in itertools.combinations(sorted(group), 2):
            edges.add((a, b))
        pool.extend(group)
    return Graph.from_edges(sorted(edges), directed=False, num_nodes=n_nodes)


# -- oracles -----------------------------------------------------------------


def adjacency_dict(n, edges, directed=False):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        if not directed:
            adj[v].append(u)
    return adj


def oracle_distances(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_shortest_paths(adj, s, t):
    dist = oracle_distances(adj, s)
    if t not in dist:
        return []
    out = []

    def extend(node, path):
        if node == t:
            out.append(path)
            return
        for w in adj[node]:
            if dist.get(w) == dist[node] + 1 and dist[node] + 1 <= dist[t]:
                extend(w, path + (w,))

    extend(s, (s,))
    return out


def brute_betweenness(n, edges, directed=False):
    adj = adjacency_dict(n, edges, directed)
    if directed:
        pairs = [(j, r) for j in range(n) for r in range(n) if j != r]
    else:
        pairs = list(itertools.combinations(range(n), 2))
    scores = [0.0] * n
    for j, r in pairs:
        paths = all_shortest_paths(adj, j, r)
        if not paths:
            continue
        for i in range(n):
            if i == j or i == r:
                continue
            through = sum(1 for p in paths if i in p[1:-1])
            if through:
                scores[i] += through / len(paths)
    return scores


def brute_closeness(n, edges, directed=False):
    adj = adjacency_dict(n, edges, directed)
    scores = [0.0] * n
    for v in range(n):
        dist = oracle_distances(adj, v)
        farness = sum(d for node, d in dist.items() if node != v)
        if farness > 0:
            scores[v] = 1.0 / farness
    return scores


def brute_kshell(n, edges):
    adj = adjacency_dict(n, edges, directed=False)
    alive = set(range(n))
    shell = {}
    k = 0
    while alive:
        k += 1
        while True:
            drop = [v for v in alive if sum(1 for w in adj[v] if w in alive) <= k]
            if not drop:
                break
            for v in drop:
                shell[v] = k
                alive.discard(v)
    return [shell[v] for v in range(n)]


def attempt_arc_list(edges, directed=False):
    if directed:
        return list(edges)
    return list(edges) + [(v, u) for u, v in edges]


def exact_expected_spread(n, arcs, seeds, p):
    """Expected cascade size by enumerating every live-arc subset."""
    n_arcs = len(arcs)
    assert n_arcs <= 14, "oracle is exponential in the arc count"
    total = 0.0
    for mask in range(1 << n_arcs):
        prob = 1.0
        adj = defaultdict(list)
        for i, (u, w) in enumerate(arcs):
            if (mask >> i) & 1:
                prob *= p
                adj[u].append(w)
            else:
                prob *= 1.0 - p
        if prob == 0.0:
            continue
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        total += prob * len(seen)
    return total
