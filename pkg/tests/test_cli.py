"""
Tests for the command line front end.
"""

import json

import numpy as np
import pytest

from cojump import __version__
from cojump.cli import MANIFEST_NAME, build_parser, main
from cojump.core.grid import SampledPath, TimeGrid
from cojump.core.tabular import write_path
from cojump.exceptions import EXIT_DEGENERATE, EXIT_PARSE_ERROR, EXIT_SUCCESS, EXIT_VALIDATION_ERROR

pytestmark = pytest.mark.cli


def _manifest(out_dir):
    return json.loads((out_dir / MANIFEST_NAME).read_text())


def test_parser_requires_command():
    """Test that a subcommand is required."""
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_estimate_prints_json(examples_dir, capsys):
    """Test synchronous estimation on two files."""
    code = main(["estimate", str(examples_dir / "path_x1.csv"), str(examples_dir / "path_x2.csv"),
                 "--c", "0.1", "--beta", "0.99"])
    assert code == EXIT_SUCCESS
    report = json.loads(capsys.readouterr().out)
    assert report["mode"] == "sync"
    assert report["ic_hat"] == pytest.approx(-0.0003, abs=1e-12)
    assert report["cojump_sum"] == pytest.approx(0.2, abs=1e-12)
    assert report["n"] == 4
    assert report["c"] == 0.1


def test_estimate_writes_manifest(examples_dir, tmp_path):
    """Test that an output directory gets the report and one manifest."""
    out_dir = tmp_path / "estimate"
    code = main(["estimate", str(examples_dir / "path_x1.csv"), str(examples_dir / "path_x2.csv"),
                 "--upto", "0.5", "--out", str(out_dir)])
    assert code == EXIT_SUCCESS
    report = json.loads((out_dir / "estimates.json").read_text())
    assert report["n"] == 2
    assert report["upto"] == 0.5
    manifest = _manifest(out_dir)
    assert manifest["command"] == "estimate"
    assert manifest["outputs"] == ["estimates.json"]
    assert manifest["version"] == __version__


def test_estimate_grid_mismatch(examples_dir, capsys):
    """Test that different grids without --async fail naming the timestamp."""
    code = main(["estimate", str(examples_dir / "path_x1.csv"), str(examples_dir / "path_x2_async.csv")])
    assert code == EXIT_VALIDATION_ERROR
    assert "0.25" in capsys.readouterr().err


def test_estimate_async(examples_dir, capsys):
    """Test the asynchronous estimator on different grids."""
    code = main(["estimate", str(examples_dir / "path_x1.csv"), str(examples_dir / "path_x2_async.csv"), "--async"])
    assert code == EXIT_SUCCESS
    report = json.loads(capsys.readouterr().out)
    assert report["mode"] == "async"
    assert report["h"] == pytest.approx(0.4)


def test_estimate_errors(examples_dir):
    """Test the exit codes of parse and validation errors."""
    x1 = str(examples_dir / "path_x1.csv")
    assert main(["estimate", x1, str(examples_dir / "bad_header.csv")]) == EXIT_PARSE_ERROR
    assert main(["estimate", x1, str(examples_dir / "path_x2.csv"), "--beta", "1.0"]) == EXIT_VALIDATION_ERROR
    assert main(["estimate", x1, str(examples_dir / "path_x2.csv"), "--c", "0"]) == EXIT_VALIDATION_ERROR


def test_estimate_strict(examples_dir, tmp_path):
    """Test that --strict turns an undefined correlation into a failure."""
    flat = write_path(SampledPath(TimeGrid.regular(4), np.zeros(5)), tmp_path / "flat.csv")
    x1 = str(examples_dir / "path_x1.csv")
    assert main(["estimate", x1, str(flat)]) == EXIT_SUCCESS
    assert main(["estimate", x1, str(flat), "--strict"]) == EXIT_DEGENERATE


def test_simulate(tmp_path, monkeypatch):
    """Test simulating one path with overrides."""
    monkeypatch.delenv("COJUMP_SEED", raising=False)
    out_dir = tmp_path / "sim"
    code = main(["simulate", "--lambda1", "5", "--rho", "0.3", "--seed", "11", "--out", str(out_dir)])
    assert code == EXIT_SUCCESS
    for name in ("bundle.csv", "panel.csv", "truths.json", MANIFEST_NAME):
        assert (out_dir / name).exists()
    manifest = _manifest(out_dir)
    assert manifest["seed"] == 11
    assert manifest["config"]["lambda1"] == 5.0
    assert manifest["config"]["rho"] == 0.3
    assert manifest["outputs"] == ["bundle.csv", "panel.csv", "truths.json"]


def test_simulate_invalid_parameter(tmp_path):
    """Test that invalid model parameters exit with the validation code."""
    assert main(["simulate", "--lambda1", "-1", "--out", str(tmp_path / "bad")]) == EXIT_VALIDATION_ERROR
    assert main(["simulate", "--rho", "1.5", "--out", str(tmp_path / "bad")]) == EXIT_VALIDATION_ERROR


def test_config_file_errors(tmp_path):
    """Test missing and unknown-key configuration files."""
    assert main(["simulate", "--config", str(tmp_path / "none.cfg"), "--out", str(tmp_path / "o")]) == EXIT_PARSE_ERROR
    bad = tmp_path / "bad.cfg"
    bad.write_text("[model]\nlambda2 = 0.1\n")
    assert main(["simulate", "--config", str(bad), "--out", str(tmp_path / "o")]) == EXIT_VALIDATION_ERROR


def test_mc(configs_dir, tmp_path):
    """Test a small Monte Carlo run from a configuration file."""
    out_dir = tmp_path / "mc"
    code = main(["mc", "--config", str(configs_dir / "model1.cfg"), "--lambda1", "20",
                 "--n-paths", "3", "--seed", "4", "--out", str(out_dir)])
    assert code == EXIT_SUCCESS
    summary = json.loads((out_dir / "summary.json").read_text())
    assert summary["n_paths"] == 3
    assert summary["threshold"] == {"c": 0.1, "beta": 0.99}
    manifest = _manifest(out_dir)
    assert "summary.json" in manifest["outputs"]
    assert "records.csv" in manifest["outputs"]
    assert manifest["config"]["n_paths"] == 3


def test_mc_same_bytes_for_any_thread_count(tmp_path):
    """Test that the summary does not depend on --threads."""
    outputs = []
    for threads in ("1", "2"):
        out_dir = tmp_path / f"threads{threads}"
        code = main(["mc", "--n-paths", "2", "--seed", "9", "--threads", threads, "--out", str(out_dir)])
        assert code == EXIT_SUCCESS
        outputs.append((out_dir / "summary.json").read_bytes())
    assert outputs[0] == outputs[1]


def test_sweep(tmp_path):
    """Test a one row sweep."""
    out_dir = tmp_path / "sweep"
    code = main(["sweep", "--c-values", "0.1", "--beta-values", "0.5", "0.99",
                 "--n-paths", "2", "--seed", "1", "--out", str(out_dir)])
    assert code == EXIT_SUCCESS
    document = json.loads((out_dir / "sweep.json").read_text())
    assert document["c_values"] == [0.1]
    assert document["beta_values"] == [0.5, 0.99]
    assert len(document["matrix"][0]) == 2
    assert _manifest(out_dir)["outputs"] == ["sweep.csv", "sweep.json"]


def test_sweep_invalid_grid(tmp_path):
    """Test that an inadmissible grid value is rejected."""
    code = main(["sweep", "--beta-values", "1.2", "--n-paths", "1", "--out", str(tmp_path / "s")])
    assert code == EXIT_VALIDATION_ERROR


def test_classify(tmp_path):
    """Test the classification command."""
    out_dir = tmp_path / "classify"
    code = main(["classify", "--n-paths", "1", "--steps", "300", "--seed", "2", "--out", str(out_dir)])
    assert code == EXIT_SUCCESS
    document = json.loads((out_dir / "classification.json").read_text())
    assert document["steps"]["300"]["intervals"] == 2 * 84
