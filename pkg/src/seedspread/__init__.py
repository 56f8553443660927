"""seedspread: influential-node selection and spread estimation.

Centrality measures and seed selectors follow a scikit-learn style
estimator API: construct with parameters, ``fit(graph)``, then read
``scores_`` / ``ranking_`` (measures) or ``seeds_`` / ``seed_set_``
(selectors).
"""

from .base import CentralityEstimator, ConvergenceError, SeedSelector, SeedSet
from .centrality import (
    BetweennessCentrality,
    ClosenessCentrality,
    DegreeCentrality,
    DegreeDiscount,
    EigenvectorCentrality,
    GreedyIC,
    KatzCentrality,
    KShellDecomposition,
    LeaderRank,
    PageRank,
)
from .diffusion import (
    ICParams,
    SpreadEstimate,
    estimate_spread,
    replication_rng,
    simulate_once,
    simulate_with_arc_uniforms,
)
from .graph import (
    UNREACHABLE,
    EdgeListParseError,
    EmptyGraphError,
    Graph,
    load_edge_list,
)
from .metrics import (
    CoverageReport,
    OverlapReport,
    cn12_coverage,
    com_overlap,
    pearson,
    seed_rank_scores,
    unique_influenced_percent,
)
from .seedselect import (
    FIDD,
    SIDD,
    DegreeDistance,
    DegreeDistance2,
    PairwiseInfluence,
    RandomSeeds,
    influence_score,
)

__version__ = "0.1.0"

__all__ = [
    "BetweennessCentrality",
    "CentralityEstimator",
    "ClosenessCentrality",
    "ConvergenceError",
    "CoverageReport",
    "DegreeCentrality",
    "DegreeDiscount",
    "DegreeDistance",
    "DegreeDistance2",
    "EdgeListParseError",
    "EigenvectorCentrality",
    "EmptyGraphError",
    "FIDD",
    "Graph",
    "GreedyIC",
    "ICParams",
    "KShellDecomposition",
    "KatzCentrality",
    "LeaderRank",
    "OverlapReport",
    "PageRank",
    "PairwiseInfluence",
    "RandomSeeds",
    "SIDD",
    "SeedSelector",
    "SeedSet",
    "SpreadEstimate",
    "UNREACHABLE",
    "cn12_coverage",
    "com_overlap",
    "estimate_spread",
    "influence_score",
    "load_edge_list",
    "pearson",
    "replication_rng",
    "seed_rank_scores",
    "simulate_once",
    "simulate_with_arc_uniforms",
    "unique_influenced_percent",
]
