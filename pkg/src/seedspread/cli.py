"""Experiment runner: dataset in, seed sets, spread estimates and CSV out.

Subcommands:

* ``run``     select seeds per method and k, estimate IC spread, emit
              ``report.csv`` plus per-method seed files, ``timings.csv``
              and ``run.log``
* ``overlap`` pairwise seed-overlap matrix and per-method coverage rows
* ``scores``  per-node centrality scores as CSV

``report.csv`` and ``overlap.csv`` are byte-deterministic for a fixed
config and master seed; wall-clock timings therefore live in the separate
``timings.csv``.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import centrality, seedselect
from .base import SeedSet
from .diffusion import ICParams, estimate_spread
from .graph import Graph, load_edge_list
from .metrics import cn12_coverage, com_overlap, unique_influenced_percent

REPORT_VERSION = "# seedspread report v1"
TIMINGS_VERSION = "# seedspread timings v1"
OVERLAP_VERSION = "# seedspread overlap v1"
SCORES_VERSION = "# seedspread scores v1"

MEASURES = {
    "degree": centrality.DegreeCentrality,
    "katz": centrality.KatzCentrality,
    "closeness": centrality.ClosenessCentrality,
    "betweenness": centrality.BetweennessCentrality,
    "eigenvector": centrality.EigenvectorCentrality,
    "pagerank": centrality.PageRank,
    "leaderrank": centrality.LeaderRank,
    "kshell": centrality.KShellDecomposition,
}

SELECTORS = ("degreediscount", "greedy", "random", "degreedistance", "degreedistance2", "fidd", "sidd")
KNOWN_METHODS = tuple(MEASURES) + SELECTORS

DEFAULT_OVERLAP_GRID = (25, 50, 75, 100)


@dataclass
class ExperimentConfig:
    """Everything one campaign needs; validated on construction."""

    dataset: Path
    directed: bool = False
    methods: tuple = ("degree", "degreedistance", "fidd", "sidd", "random")
    k_values: tuple = (50,)
    d_td: int = 2
    theta: object = "auto"
    beta: float = 0.01
    p: float = 0.01
    replications: int = 10000
    seed: int = 0
    out_dir: Path | None = None

    def __post_init__(self):
        self.dataset = Path(self.dataset)
        self.methods = tuple(self.methods)
        if not self.methods:
            raise ValueError("at least one method is required")
        for name in self.methods:
            if name not in KNOWN_METHODS:
                raise ValueError(f"unknown method {name!r}; known: {', '.join(KNOWN_METHODS)}")
        ks = sorted(set(int(k) for k in self.k_values))
        if not ks or ks[0] < 1:
            raise ValueError("k values must be positive integers")
        self.k_values = tuple(ks)
        if self.out_dir is not None:
            self.out_dir = Path(self.out_dir)


def select_seeds(name: str, graph: Graph, k: int, config: ExperimentConfig) -> SeedSet:
    """Run one method and wrap its output as a SeedSet."""
    if name in MEASURES:
        est = MEASURES[name]().fit(graph)
        return SeedSet(name, tuple(est.top_k(k)), k, {"k": k})
    if name == "degreediscount":
        return centrality.DegreeDiscount(k, p=config.p).fit(graph).seed_set_
    if name == "greedy":
        return centrality.GreedyIC(k, p=config.p, seed=config.seed).fit(graph).seed_set_
    if name == "random":
        return seedselect.RandomSeeds(k, seed=config.seed).fit(graph).seed_set_
    if name == "degreedistance":
        return seedselect.DegreeDistance(k, d_td=config.d_td).fit(graph).seed_set_
    if name == "degreedistance2":
        return seedselect.DegreeDistance2(k).fit(graph).seed_set_
    if name == "fidd":
        return seedselect.FIDD(k, d_td=config.d_td, theta=config.theta).fit(graph).seed_set_
    if name == "sidd":
        return (
            seedselect.SIDD(k, d_td=config.d_td, theta=config.theta, beta=config.beta, p_pair=config.p)
            .fit(graph)
            .seed_set_
        )
    raise ValueError(f"unknown method {name!r}")


def _fmt(value, digits: int) -> str:
    if value is None:
        return ""
    return f"{value:.{digits}f}"


@dataclass
class ExperimentReport:
    dataset: str
    methods: tuple
    rows: list

    def report_columns(self) -> list[str]:
        base = [
            "dataset",
            "method",
            "k",
            "status",
            "spread_mean",
            "spread_stddev",
            "cov_percent",
            "unique_influenced_percent",
        ]
        return base + [f"com_vs_{m}" for m in self.methods]

    def write_report(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            fh.write(REPORT_VERSION + "\n")
            writer = csv.writer(fh)
            writer.writerow(self.report_columns())
            for row in self.rows:
                record = [
                    self.dataset,
                    row["method"],
                    row["k"],
                    row["status"],
                    _fmt(row["spread_mean"], 6),
                    _fmt(row["spread_stddev"], 6),
                    _fmt(row["cov_percent"], 4),
                    _fmt(row["unique_influenced_percent"], 4),
                ]
                record += [_fmt(row["com"].get(m), 4) for m in self.methods]
                writer.writerow(record)

    def write_timings(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            fh.write(TIMINGS_VERSION + "\n")
            writer = csv.writer(fh)
            writer.writerow(["dataset", "method", "k", "select_ms", "simulate_ms"])
            for row in self.rows:
                writer.writerow(
                    [
                        self.dataset,
                        row["method"],
                        row["k"],
                        _fmt(row["select_ms"], 3),
                        _fmt(row["simulate_ms"], 3),
                    ]
                )


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Load once, then per (k, method): select (timed), simulate (timed),
    evaluate.  A failing method yields an error row and the campaign
    continues."""
    graph = load_edge_list(config.dataset, config.directed)
    dataset_name = config.dataset.name

    selections: dict = {}
    for k in config.k_values:
        for name in config.methods:
            t0 = time.perf_counter()
            try:
                seed_set = select_seeds(name, graph, k, config)
            except Exception as exc:  # isolate per-method failures
                selections[name, k] = exc
                continue
            selections[name, k] = (seed_set, (time.perf_counter() - t0) * 1000.0)

    rows = []
    for k in config.k_values:
        for name in config.methods:
            entry = selections[name, k]
            row = {
                "method": name,
                "k": k,
                "status": "ok",
                "spread_mean": None,
                "spread_stddev": None,
                "cov_percent": None,
                "unique_influenced_percent": None,
                "select_ms": None,
                "simulate_ms": None,
                "com": {},
                "seeds": None,
            }
            if isinstance(entry, Exception):
                row["status"] = f"error: {entry}"
                rows.append(row)
                continue
            seed_set, select_ms = entry
            row["select_ms"] = select_ms
            row["seeds"] = seed_set
            if not seed_set.complete:
                row["status"] = "partial"
            try:
                t0 = time.perf_counter()
                est = estimate_spread(
                    graph, seed_set.seeds, ICParams(config.p, config.replications, config.seed)
                )
                row["simulate_ms"] = (time.perf_counter() - t0) * 1000.0
                row["spread_mean"] = est.mean
                row["spread_stddev"] = est.stddev
                if len(seed_set):
                    row["cov_percent"] = cn12_coverage(graph, seed_set, len(seed_set)).cov_percent
                    row["unique_influenced_percent"] = unique_influenced_percent(graph, seed_set)
                for other in config.methods:
                    peer = selections[other, k]
                    if isinstance(peer, Exception):
                        continue
                    k_eff = min(k, len(seed_set), len(peer[0]))
                    if k_eff:
                        row["com"][other] = com_overlap(seed_set, peer[0], k_eff).com_percent
            except Exception as exc:
                row["status"] = f"error: {exc}"
            rows.append(row)

    report = ExperimentReport(dataset_name, config.methods, rows)
    if config.out_dir is not None:
        _write_run_outputs(config, graph, report)
    return report


def _write_run_outputs(config: ExperimentConfig, graph: Graph, report: ExperimentReport) -> None:
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    report.write_report(out / "report.csv")
    report.write_timings(out / "timings.csv")
    for row in report.rows:
        if row["seeds"] is not None:
            row["seeds"].write_text(graph, out / f"seeds_{row['method']}_k{row['k']}.txt")
    log_lines = [
        f"dataset: {config.dataset}",
        f"directed: {graph.directed}",
        f"nodes: {graph.node_count}",
        f"edges: {graph.edge_count}",
        f"self_loops_dropped: {graph.self_loops_dropped}",
        f"duplicates_dropped: {graph.duplicates_dropped}",
        f"methods: {','.join(config.methods)}",
        f"k_values: {','.join(str(k) for k in config.k_values)}",
        f"d_td: {config.d_td}  theta: {config.theta}  beta: {config.beta}  p: {config.p}",
        f"replications: {config.replications}  seed: {config.seed}",
    ]
    for row in report.rows:
        log_lines.append(f"{row['method']} k={row['k']}: {row['status']}")
    (out / "run.log").write_text("\n".join(log_lines) + "\n", encoding="utf-8")


def summarize_overlap(config: ExperimentConfig) -> list[dict]:
    """Pairwise COM matrix plus per-method COV rows over the k grid."""
    graph = load_edge_list(config.dataset, config.directed)
    rows: list[dict] = []
    for k in config.k_values:
        selections: dict = {}
        for name in config.methods:
            try:
                selections[name] = select_seeds(name, graph, k, config)
            except Exception as exc:
                selections[name] = exc
        for a in config.methods:
            for b in config.methods:
                row = {"record": "com", "k": k, "method": a, "other": b, "value": None, "status": "ok"}
                sa, sb = selections[a], selections[b]
                if isinstance(sa, Exception) or isinstance(sb, Exception):
                    row["status"] = "error"
                elif len(sa) < k or len(sb) < k:
                    row["status"] = "partial"
                else:
                    row["value"] = com_overlap(sa, sb, k).com_percent
                rows.append(row)
        for a in config.methods:
            row = {"record": "cov", "k": k, "method": a, "other": "", "value": None, "status": "ok"}
            sa = selections[a]
            if isinstance(sa, Exception):
                row["status"] = "error"
            elif len(sa) < k:
                row["status"] = "partial"
            else:
                row["value"] = cn12_coverage(graph, sa, k).cov_percent
            rows.append(row)
    if config.out_dir is not None:
        config.out_dir.mkdir(parents=True, exist_ok=True)
        with open(config.out_dir / "overlap.csv", "w", newline="", encoding="utf-8") as fh:
            fh.write(OVERLAP_VERSION + "\n")
            writer = csv.writer(fh)
            writer.writerow(["record", "k", "method", "other", "value", "status"])
            for row in rows:
                writer.writerow(
                    [row["record"], row["k"], row["method"], row["other"], _fmt(row["value"], 4), row["status"]]
                )
    return rows


def write_scores(config: ExperimentConfig) -> list[Path]:
    """One CSV per measure: original_id, score, rank (best rank first)."""
    graph = load_edge_list(config.dataset, config.directed)
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in config.methods:
        if name not in MEASURES:
            raise ValueError(f"{name!r} is not a measure; scores needs one of {', '.join(MEASURES)}")
        est = MEASURES[name]().fit(graph)
        path = out / f"scores_{name}.csv"
        with open(path, "w", newline="", encoding="utf-8") as fh:
            fh.write(SCORES_VERSION + "\n")
            writer = csv.writer(fh)
            writer.writerow(["original_id", "score", "rank"])
            for rank, node in enumerate(est.ranking_, 1):
                writer.writerow(
                    [int(graph.original_ids[node]), repr(float(est.scores_[node])), rank]
                )
        written.append(path)
    return written


def _parse_k(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _parse_theta(text: str):
    if text == "auto":
        return "auto"
    if text in ("inf", "INF", "Inf"):
        return math.inf
    return int(text)


def _parse_methods(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seedspread", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_k: str):
        p.add_argument("--dataset", required=True, help="edge-list file")
        p.add_argument("--directed", action="store_true", help="treat edges as directed")
        p.add_argument("--methods", default="degree,degreedistance,fidd,sidd,random")
        p.add_argument("--k", default=default_k, help="comma-separated seed counts")
        p.add_argument("--dtd", type=int, default=2, help="distance threshold")
        p.add_argument("--theta", default="auto", help="common-neighbor threshold, integer, 'inf' or 'auto'")
        p.add_argument("--beta", type=float, default=0.01, help="influence-score threshold")
        p.add_argument("--p", type=float, default=0.01, help="activation / pairwise influence probability")
        p.add_argument("--seed", type=int, default=0, help="master rng seed")
        p.add_argument("--out", default=None, help="output directory")

    run_p = sub.add_parser("run", help="select seeds, simulate spread, write report.csv")
    common(run_p, "50")
    run_p.add_argument("--reps", type=int, default=10000, help="IC replications per seed set")

    ov_p = sub.add_parser("overlap", help="pairwise COM matrix and COV rows")
    common(ov_p, ",".join(str(k) for k in DEFAULT_OVERLAP_GRID))

    sc_p = sub.add_parser("scores", help="write per-node centrality scores")
    sc_p.add_argument("--dataset", required=True)
    sc_p.add_argument("--directed", action="store_true")
    sc_p.add_argument("--methods", default="degree")
    sc_p.add_argument("--out", required=True)
    return parser


def _config_from_args(args) -> ExperimentConfig:
    return ExperimentConfig(
        dataset=Path(args.dataset),
        directed=args.directed,
        methods=_parse_methods(args.methods),
        k_values=_parse_k(args.k) if hasattr(args, "k") else (50,),
        d_td=getattr(args, "dtd", 2),
        theta=_parse_theta(getattr(args, "theta", "auto")),
        beta=getattr(args, "beta", 0.01),
        p=getattr(args, "p", 0.01),
        replications=getattr(args, "reps", 10000),
        seed=getattr(args, "seed", 0),
        out_dir=Path(args.out) if getattr(args, "out", None) else None,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            report = run_experiment(_config_from_args(args))
            for row in report.rows:
                mean = _fmt(row["spread_mean"], 2) or "-"
                print(f"{row['method']:>16} k={row['k']:<4} {row['status']:<8} spread={mean}")
        elif args.command == "overlap":
            rows = summarize_overlap(_config_from_args(args))
            for row in rows:
                value = _fmt(row["value"], 2) or "-"
                other = f" vs {row['other']}" if row["other"] else ""
                print(f"{row['record']} k={row['k']:<4} {row['method']}{other}: {value}")
        else:
            config = ExperimentConfig(
                dataset=Path(args.dataset),
                directed=args.directed,
                methods=_parse_methods(args.methods),
                out_dir=Path(args.out),
            )
            for path in write_scores(config):
                print(path)
    except (OSError, ValueError) as exc:
        print(f"seedspread: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
