import csv

import numpy as np
import pytest

import support
from seedspread.cli import (
    DEFAULT_OVERLAP_GRID,
    ExperimentConfig,
    main,
    run_experiment,
    summarize_overlap,
)


@pytest.fixture
def dataset(tmp_path):
    rng = np.random.default_rng(77)
    lines = []
    seen = set()
    while len(seen) < 120:
        u, v = int(rng.integers(60)), int(rng.integers(60))
        if u != v and (min(u, v), max(u, v)) not in seen:
            seen.add((min(u, v), max(u, v)))
            lines.append(f"{u} {v}")
    path = tmp_path / "net.txt"
    path.write_text("% test network\n" + "\n".join(lines) + "\n")
    return path


def read_report(path):
    lines = path.read_text().splitlines()
    assert lines[0] == "# seedspread report v1"
    return list(csv.DictReader(lines[1:]))


class TestRunExperiment:
    def test_p_zero_spread_equals_k(self, dataset, tmp_path):
        config = ExperimentConfig(
            dataset=dataset,
            methods=("degree", "random"),
            k_values=(3, 5),
            p=0.0,
            replications=30,
            out_dir=tmp_path / "out",
        )
        report = run_experiment(config)
        for row in report.rows:
            assert row["status"] == "ok"
            assert row["spread_mean"] == float(row["k"])
            assert row["spread_stddev"] == 0.0

    def test_report_csv_is_byte_identical_across_runs(self, dataset, tmp_path):
        outputs = []
        for name in ("a", "b"):
            config = ExperimentConfig(
                dataset=dataset,
                methods=("degree", "sidd", "random"),
                k_values=(4,),
                p=0.05,
                replications=60,
                seed=42,
                out_dir=tmp_path / name,
            )
            run_experiment(config)
            outputs.append((tmp_path / name / "report.csv").read_bytes())
        assert outputs[0] == outputs[1]

    def test_outputs_exist_and_seed_file_format(self, dataset, tmp_path):
        out = tmp_path / "out"
        config = ExperimentConfig(
            dataset=dataset,
            methods=("sidd",),
            k_values=(4,),
            p=0.02,
            replications=20,
            out_dir=out,
        )
        run_experiment(config)
        assert (out / "report.csv").exists()
        assert (out / "timings.csv").exists()
        assert (out / "run.log").exists()
        seed_lines = (out / "seeds_sidd_k4.txt").read_text().splitlines()
        head = seed_lines[0].split()
        assert head[0] == "#"
        assert head[1] == "sidd"
        assert head[2] == "4"
        assert len(seed_lines) == 1 + 4
        assert all(line.lstrip("-").isdigit() for line in seed_lines[1:])

    def test_run_log_carries_load_summary(self, tmp_path):
        data = tmp_path / "dup.txt"
        data.write_text("0 1\n0 1\n2 2\n1 2\n")
        out = tmp_path / "out"
        config = ExperimentConfig(
            dataset=data, methods=("degree",), k_values=(1,), replications=5, out_dir=out
        )
        run_experiment(config)
        log = (out / "run.log").read_text()
        assert "duplicates_dropped: 1" in log
        assert "self_loops_dropped: 1" in log

    def test_method_failure_is_isolated(self, tmp_path):
        # a single self-loop yields an edgeless graph: eigenvector fails,
        # degree still reports
        data = tmp_path / "loop.txt"
        data.write_text("5 5\n")
        config = ExperimentConfig(
            dataset=data, methods=("degree", "eigenvector"), k_values=(1,), replications=5
        )
        report = run_experiment(config)
        by_method = {row["method"]: row for row in report.rows}
        assert by_method["degree"]["status"] == "ok"
        assert by_method["eigenvector"]["status"].startswith("error:")
        assert by_method["degree"]["spread_mean"] == 1.0

    def test_partial_selection_flagged(self, tmp_path):
        data = tmp_path / "k5.txt"
        data.write_text("\n".join(f"{i} {j}" for i in range(5) for j in range(i + 1, 5)))
        config = ExperimentConfig(
            dataset=data, methods=("degreedistance",), k_values=(3,), replications=5
        )
        report = run_experiment(config)
        assert report.rows[0]["status"] == "partial"

    def test_com_diagonal_is_100(self, dataset):
        config = ExperimentConfig(
            dataset=dataset, methods=("degree", "kshell"), k_values=(5,), replications=5
        )
        report = run_experiment(config)
        for row in report.rows:
            assert row["com"][row["method"]] == 100.0

    def test_unknown_method_rejected(self, dataset):
        with pytest.raises(ValueError):
            ExperimentConfig(dataset=dataset, methods=("degree", "mystery"))

    def test_k_values_sorted_and_deduplicated(self, dataset):
        config = ExperimentConfig(dataset=dataset, k_values=(50, 25, 50))
        assert config.k_values == (25, 50)


class TestOverlapCommand:
    def test_default_grid(self):
        config = ExperimentConfig(dataset="unused", k_values=DEFAULT_OVERLAP_GRID)
        assert config.k_values == (25, 50, 75, 100)

    def test_single_measure_against_itself(self, dataset):
        config = ExperimentConfig(
            dataset=dataset, methods=("degree",), k_values=(5, 10), replications=1
        )
        rows = summarize_overlap(config)
        com_rows = [r for r in rows if r["record"] == "com"]
        assert {r["k"] for r in com_rows} == {5, 10}
        assert all(r["value"] == 100.0 for r in com_rows)

    def test_matrix_and_cov_rows(self, dataset, tmp_path):
        config = ExperimentConfig(
            dataset=dataset,
            methods=("degree", "pagerank", "degreedistance"),
            k_values=(6,),
            out_dir=tmp_path / "ov",
        )
        rows = summarize_overlap(config)
        com_rows = [r for r in rows if r["record"] == "com"]
        cov_rows = [r for r in rows if r["record"] == "cov"]
        assert len(com_rows) == 9
        assert len(cov_rows) == 3
        assert (tmp_path / "ov" / "overlap.csv").exists()
        by_pair = {(r["method"], r["other"]): r["value"] for r in com_rows}
        assert by_pair[("degree", "pagerank")] == by_pair[("pagerank", "degree")]


class TestMainEntry:
    def test_run_subcommand(self, dataset, tmp_path, capsys):
        code = main(
            [
                "run",
                "--dataset",
                str(dataset),
                "--methods",
                "degree,random",
                "--k",
                "3",
                "--p",
                "0",
                "--reps",
                "10",
                "--seed",
                "1",
                "--out",
                str(tmp_path / "cli_out"),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "degree" in out and "random" in out
        assert (tmp_path / "cli_out" / "report.csv").exists()

    def test_missing_dataset_is_startup_error(self, tmp_path, capsys):
        code = main(["run", "--dataset", str(tmp_path / "nope.txt"), "--k", "2"])
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_bad_method_is_startup_error(self, dataset, capsys):
        code = main(["run", "--dataset", str(dataset), "--methods", "nope"])
        assert code == 2

    def test_overlap_subcommand(self, dataset, tmp_path):
        code = main(
            [
                "overlap",
                "--dataset",
                str(dataset),
                "--methods",
                "degree,kshell",
                "--k",
                "4,8",
                "--out",
                str(tmp_path / "ov_out"),
            ]
        )
        assert code == 0
        lines = (tmp_path / "ov_out" / "overlap.csv").read_text().splitlines()
        assert lines[0] == "# seedspread overlap v1"
        assert lines[1] == "record,k,method,other,value,status"

    def test_scores_subcommand(self, dataset, tmp_path):
        out = tmp_path / "scores_out"
        code = main(
            ["scores", "--dataset", str(dataset), "--methods", "degree,pagerank", "--out", str(out)]
        )
        assert code == 0
        lines = (out / "scores_degree.csv").read_text().splitlines()
        assert lines[0] == "# seedspread scores v1"
        assert lines[1] == "original_id,score,rank"
        first = lines[2].split(",")
        assert first[2] == "1"
        assert (out / "scores_pagerank.csv").exists()

    def test_scores_rejects_selectors(self, dataset, tmp_path, capsys):
        code = main(
            ["scores", "--dataset", str(dataset), "--methods", "sidd", "--out", str(tmp_path / "x")]
        )
        assert code == 2
