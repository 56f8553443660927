"""Edge-list ingestion and neighborhood queries over immutable graphs.

Nodes are dense 0-based integers internally.  Input files may label nodes
with arbitrary integers (sparse, 1-based, negative); labels are remapped in
order of first appearance and the original labels are retained so results
can be reported against the input ids.  Duplicate edges and self-loops are
dropped during ingestion and counted.

A directed graph answers adjacency queries under three views:

* ``"stored"``     - out-neighbors, the direction edges were given in
* ``"reverse"``    - in-neighbors
* ``"undirected"`` - neighbors of the underlying undirected graph

For undirected graphs the views coincide.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

#: Sentinel returned by :meth:`Graph.distance` when no path exists.
UNREACHABLE: float = math.inf

STORED = "stored"
REVERSE = "reverse"
UNDIRECTED = "undirected"
VIEWS = (STORED, REVERSE, UNDIRECTED)


class EdgeListParseError(ValueError):
    """A malformed edge-list line; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyGraphError(ValueError):
    """An edge-list source with no usable data lines."""


def _csr(n: int, srcs: np.ndarray, dsts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Per-node neighbor lists kept sorted ascending: iteration order is part
    # of the determinism contract.
    order = np.lexsort((dsts, srcs))
    srcs = srcs[order]
    indices = np.ascontiguousarray(dsts[order], dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    if srcs.size:
        indptr[1:] = np.cumsum(np.bincount(srcs, minlength=n))
    indptr.setflags(write=False)
    indices.setflags(write=False)
    return indptr, indices


def _dedupe(pairs: np.ndarray, n: int, directed: bool) -> tuple[np.ndarray, int, int]:
    """Drop self-loops and duplicates, returning (edges, n_loops, n_dupes)."""
    loops = pairs[:, 0] == pairs[:, 1]
    n_loops = int(loops.sum())
    pairs = pairs[~loops]
    if pairs.shape[0] == 0:
        return pairs.reshape(0, 2), n_loops, 0
    if directed:
        a, b = pairs[:, 0], pairs[:, 1]
    else:
        a = np.minimum(pairs[:, 0], pairs[:, 1])
        b = np.maximum(pairs[:, 0], pairs[:, 1])
    keys = np.unique(a * np.int64(n) + b)
    n_dupes = pairs.shape[0] - keys.size
    edges = np.column_stack((keys // n, keys % n))
    return edges, n_loops, n_dupes


def bfs_distances(
    indptr: np.ndarray,
    indices: np.ndarray,
    n: int,
    source: int,
    max_depth: int | None = None,
    target: int | None = None,
) -> np.ndarray:
    """Hop distances from ``source``; -1 marks unreached nodes.

    ``max_depth`` bounds the search; ``target`` allows early exit once a
    specific node has been labelled.
    """
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    queue = np.empty(n, dtype=np.int64)
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = int(queue[head])
        head += 1
        du = dist[u]
        if max_depth is not None and du >= max_depth:
            break
        nbrs = indices[indptr[u] : indptr[u + 1]]
        if nbrs.size == 0:
            continue
        new = nbrs[dist[nbrs] < 0]
        if new.size == 0:
            continue
        dist[new] = du + 1
        if target is not None and dist[target] >= 0:
            return dist
        queue[tail : tail + new.size] = new
        tail += new.size
    return dist


class Graph:
    """Immutable adjacency structure with dense 0-based node ids.

    Construct with :func:`load_edge_list` or :meth:`Graph.from_edges`.
    All query methods are read-only and safe to call concurrently.
    """

    __slots__ = (
        "directed",
        "node_count",
        "edge_count",
        "original_ids",
        "self_loops_dropped",
        "duplicates_dropped",
        "_indptr",
        "_indices",
        "_rev_indptr",
        "_rev_indices",
        "_und_indptr",
        "_und_indices",
        "_dense_by_label",
    )

    def __init__(
        self,
        directed: bool,
        edges: np.ndarray,
        labels: np.ndarray,
        self_loops_dropped: int = 0,
        duplicates_dropped: int = 0,
    ):
        n = labels.shape[0]
        self.directed = bool(directed)
        self.node_count = int(n)
        self.edge_count = int(edges.shape[0])
        self.original_ids = np.ascontiguousarray(labels, dtype=np.int64)
        self.original_ids.setflags(write=False)
        self.self_loops_dropped = int(self_loops_dropped)
        self.duplicates_dropped = int(duplicates_dropped)
        self._dense_by_label = {int(lbl): i for i, lbl in enumerate(labels)}
        if directed:
            self._indptr, self._indices = _csr(n, edges[:, 0], edges[:, 1])
            self._rev_indptr, self._rev_indices = _csr(n, edges[:, 1], edges[:, 0])
            both = np.concatenate((edges, edges[:, ::-1]))
            und, _, _ = _dedupe(both, n, directed=False)
            arcs = np.concatenate((und, und[:, ::-1]))
            self._und_indptr, self._und_indices = _csr(n, arcs[:, 0], arcs[:, 1])
        else:
            arcs = np.concatenate((edges, edges[:, ::-1]))
            self._indptr, self._indices = _csr(n, arcs[:, 0], arcs[:, 1])
            self._rev_indptr, self._rev_indices = self._indptr, self._indices
            self._und_indptr, self._und_indices = self._indptr, self._indices

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        pairs: Iterable[tuple[int, int]],
        *,
        directed: bool = False,
        num_nodes: int | None = None,
    ) -> "Graph":
        """Build a graph from (u, v) pairs of dense non-negative ids.

        ``num_nodes`` pads the id range so isolated nodes can exist.
        """
        arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        if arr.size and arr.min() < 0:
            raise ValueError("node ids must be non-negative")
        n = max(int(num_nodes or 0), int(arr.max()) + 1 if arr.size else 0)
        if n == 0:
            raise EmptyGraphError("graph needs at least one node")
        edges, loops, dupes = _dedupe(arr, n, directed)
        return cls(directed, edges, np.arange(n, dtype=np.int64), loops, dupes)

    def __repr__(self) -> str:  # pragma: no cover
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, nodes={self.node_count}, edges={self.edge_count})"

    # -- id mapping ------------------------------------------------------

    def to_original(self, ids) -> np.ndarray:
        """Map dense ids back to the labels used in the input."""
        return self.original_ids[np.asarray(ids, dtype=np.int64)]

    def from_original(self, label: int) -> int:
        """Dense id of an input label."""
        try:
            return self._dense_by_label[int(label)]
        except KeyError:
            raise ValueError(f"unknown node label {label!r}") from None

    # -- queries ---------------------------------------------------------

    def _check_node(self, v) -> int:
        v = int(v)
        if not 0 <= v < self.node_count:
            raise ValueError(f"node id {v} out of range [0, {self.node_count})")
        return v

    def adjacency(self, view: str = STORED) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) CSR arrays for the requested view."""
        if view == STORED:
            return self._indptr, self._indices
        if view == REVERSE:
            return self._rev_indptr, self._rev_indices
        if view == UNDIRECTED:
            return self._und_indptr, self._und_indices
        raise ValueError(f"unknown view {view!r}; expected one of {VIEWS}")

    def neighbors(self, v, view: str = STORED) -> np.ndarray:
        v = self._check_node(v)
        indptr, indices = self.adjacency(view)
        return indices[indptr[v] : indptr[v + 1]]

    def degree(self, v) -> int:
        """Out-degree for directed graphs, plain degree for undirected."""
        v = self._check_node(v)
        return int(self._indptr[v + 1] - self._indptr[v])

    def degree_vector(self, view: str = STORED) -> np.ndarray:
        indptr, _ = self.adjacency(view)
        return np.diff(indptr)

    def average_degree(self) -> float:
        if self.node_count == 0:
            return 0.0
        factor = 1 if self.directed else 2
        return factor * self.edge_count / self.node_count

    def distance(self, u, v, view: str = STORED) -> int | float:
        """Shortest-path hop count, or :data:`UNREACHABLE`."""
        u = self._check_node(u)
        v = self._check_node(v)
        if u == v:
            return 0
        indptr, indices = self.adjacency(view)
        dist = bfs_distances(indptr, indices, self.node_count, u, target=v)
        d = int(dist[v])
        return d if d >= 0 else UNREACHABLE

    def neighbors_at(self, v, i: int, view: str = STORED) -> np.ndarray:
        """Nodes at shortest-path distance exactly ``i`` from ``v``."""
        v = self._check_node(v)
        i = int(i)
        if i < 1:
            raise ValueError("neighborhood radius must be >= 1")
        indptr, indices = self.adjacency(view)
        dist = bfs_distances(indptr, indices, self.node_count, v, max_depth=i)
        return np.flatnonzero(dist == i)

    def common_neighbors_at(self, nodes: Sequence[int], i: int, view: str = STORED) -> np.ndarray:
        """Intersection of ``neighbors_at`` over all given nodes."""
        nodes = list(nodes)
        if not nodes:
            raise ValueError("common_neighbors_at needs at least one node")
        common = self.neighbors_at(nodes[0], i, view)
        for v in nodes[1:]:
            if common.size == 0:
                break
            common = np.intersect1d(common, self.neighbors_at(v, i, view), assume_unique=True)
        return common


def _read_text(source) -> str:
    if isinstance(source, (str, Path)):
        return Path(source).read_text(encoding="utf-8")
    if hasattr(source, "read"):
        data = source.read()
        if isinstance(data, bytes):
            return data.decode("utf-8")
        return data
    raise TypeError("source must be a path or a readable file object")


def load_edge_list(source, directed: bool = False) -> Graph:
    """Parse a whitespace-separated edge list into a :class:`Graph`.

    One edge per line as two integer tokens; extra tokens (weights) are
    ignored; blank lines and lines starting with ``%`` or ``#`` are skipped.
    Raises :class:`EdgeListParseError` with the offending line number on
    malformed input and :class:`EmptyGraphError` when no edges are present.
    """
    raw: list[tuple[int, int]] = []
    for line_number, line in enumerate(_read_text(source).splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped[0] in "%#":
            continue
        parts = stripped.split()
        if len(parts) < 2:
            raise EdgeListParseError(line_number, "expected two integer endpoints")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                line_number, f"non-integer endpoint in {stripped!r}"
            ) from None
        raw.append((u, v))
    if not raw:
        raise EmptyGraphError("edge-list source contains no edges")

    dense_of: dict[int, int] = {}
    for u, v in raw:
        if u not in dense_of:
            dense_of[u] = len(dense_of)
        if v not in dense_of:
            dense_of[v] = len(dense_of)
    pairs = np.array([(dense_of[u], dense_of[v]) for u, v in raw], dtype=np.int64)
    labels = np.fromiter(dense_of.keys(), dtype=np.int64, count=len(dense_of))
    edges, loops, dupes = _dedupe(pairs, len(dense_of), directed)
    return Graph(directed, edges, labels, loops, dupes)
