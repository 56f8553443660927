"""Estimator bases, the seed-set record, and shared validation helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .graph import Graph


class ConvergenceError(RuntimeError):
    """An iterative solver did not reach its tolerance within the cap."""

    def __init__(self, message: str, *, residual: float, iterations: int):
        super().__init__(f"{message} (residual {residual:.3e} after {iterations} iterations)")
        self.residual = residual
        self.iterations = iterations


def check_graph(graph) -> Graph:
    if not isinstance(graph, Graph):
        raise TypeError(f"expected a seedspread Graph, got {type(graph).__name__}")
    return graph


def check_positive_int(value, name: str) -> int:
    if value != int(value) or int(value) < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def check_seed_count(graph: Graph, k) -> int:
    k = check_positive_int(k, "k")
    if k > graph.node_count:
        raise ValueError(f"k={k} exceeds node count {graph.node_count}")
    return k


def check_probability(value, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def rank_by_score(scores: np.ndarray) -> np.ndarray:
    """Node ids sorted by descending score, ties broken by ascending id."""
    scores = np.asarray(scores)
    order = np.lexsort((np.arange(scores.shape[0]), -scores))
    return order


@dataclass(frozen=True)
class SeedSet:
    """An ordered seed selection plus the configuration that produced it.

    ``seeds`` holds dense node ids in selection order.  ``complete`` is
    False when the candidate list was exhausted before ``k`` seeds were
    found; that is a valid partial result, not an error.
    """

    method: str
    seeds: tuple[int, ...]
    k: int
    params: dict = field(default_factory=dict)
    complete: bool = True
    candidates_examined: int = 0

    def __post_init__(self):
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError("seed set contains duplicates")
        if len(self.seeds) > self.k:
            raise ValueError("seed set larger than requested k")

    def __len__(self) -> int:
        return len(self.seeds)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seeds)

    def write_text(self, graph: Graph, path) -> None:
        """Serialize as ``# method k d_td theta beta p`` plus one original
        node id per line in selection order."""
        p = self.params
        header = "# {} {} {} {} {} {}".format(
            self.method,
            self.k,
            _fmt(p.get("d_td")),
            _fmt(p.get("theta_resolved", p.get("theta"))),
            _fmt(p.get("beta")),
            _fmt(p.get("p_pair", p.get("p"))),
        )
        lines = [header]
        lines.extend(str(int(x)) for x in graph.to_original(list(self.seeds)))
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return format(value, "g")
    return str(value)


class CentralityEstimator(BaseEstimator):
    """Base class for per-node scorers.

    Subclasses implement ``_score(graph) -> ndarray``.  ``fit`` records
    ``scores_`` (float per node) and ``ranking_`` (ids by descending score,
    ties broken by ascending id, always a permutation of all nodes).
    """

    measure: str = ""

    def fit(self, graph, y=None):
        graph = check_graph(graph)
        scores = np.ascontiguousarray(self._score(graph), dtype=np.float64)
        scores.setflags(write=False)
        ranking = rank_by_score(scores)
        ranking.setflags(write=False)
        self.scores_ = scores
        self.ranking_ = ranking
        self.n_nodes_ = graph.node_count
        return self

    def _score(self, graph: Graph) -> np.ndarray:  # pragma: no cover
        raise NotImplementedError

    def top_k(self, k: int) -> list[int]:
        """The ``k`` best-ranked node ids."""
        check_is_fitted(self, "ranking_")
        k = check_positive_int(k, "k")
        if k > self.n_nodes_:
            raise ValueError(f"k={k} exceeds node count {self.n_nodes_}")
        return [int(v) for v in self.ranking_[:k]]


class SeedSelector(BaseEstimator):
    """Base class for seed-set selectors.

    Subclasses implement ``_select(graph) -> SeedSet``.  ``fit`` records
    ``seed_set_``, ``seeds_`` (dense ids in selection order) and
    ``is_complete_``.
    """

    method: str = ""

    def fit(self, graph, y=None):
        graph = check_graph(graph)
        result = self._select(graph)
        self.seed_set_ = result
        self.seeds_ = list(result.seeds)
        self.is_complete_ = result.complete
        return self

    def _select(self, graph: Graph) -> SeedSet:  # pragma: no cover
        raise NotImplementedError

    def fit_predict(self, graph, y=None) -> list[int]:
        return self.fit(graph).seeds_
