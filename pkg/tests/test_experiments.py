"""
Tests for the Monte Carlo experiments, their statistics and exports.
"""

import json
import math
import os

import numpy as np
import pandas as pd
import pytest

from cojump.core.threshold import ThresholdSpec
from cojump.enums import BiasKind, CojumpVariant
from cojump.exceptions import InsufficientDataError, InvalidParameterError, ThresholdAdmissibilityError
from cojump.experiments import (
    SCHEMA_VERSION,
    PathRecord,
    SweepGrid,
    bias,
    classification_study,
    cojump_variant_study,
    evaluate_bundle,
    normalized_bias_stats,
    qq_points,
    run_monte_carlo,
    summarize,
    summarize_records,
    sweep_thresholds,
)
from cojump.experiments import export
from cojump.experiments.pool import parallel_map, resolve_threads


@pytest.fixture(scope="module")
def jumpy_config():
    """Model 1 with frequent jumps, so that every path carries co-jumps."""
    from cojump.simulate.config import Model1Config
    return Model1Config(lambda1=20.0, lambda3=20.0)


@pytest.fixture(scope="module")
def small_summary(jumpy_config):
    """A four path Monte Carlo run."""
    return run_monte_carlo(jumpy_config, ThresholdSpec(0.1, 0.99), n_paths=4, seed=3)


def test_bias():
    """Test relative and absolute bias."""
    assert bias(1.1, 1.0, BiasKind.RELATIVE) == pytest.approx(10.0)
    assert bias(1.1, 1.0, BiasKind.ABSOLUTE) == pytest.approx(0.1)


def test_summarize():
    """Test sample summaries."""
    summary = summarize([1.0, 2.0, 3.0, 4.0])
    assert summary.count == 4
    assert summary.mean == 2.5
    assert summary.median == 2.5
    assert summary.std == pytest.approx(math.sqrt(5.0 / 3.0))
    assert summary.minimum == 1.0 and summary.maximum == 4.0
    assert len(summary.quantiles) == len(summary.quantile_levels)

    assert summarize([2.0]).std == 0.0
    assert summarize([]) is None


def test_normalized_bias_stats():
    """Test normalized bias statistics and their QQ pairs."""
    stats = normalized_bias_stats([-1.0, None, 0.0, 1.0, float("nan"), 2.0])
    assert stats.count == 4
    assert stats.mean == pytest.approx(0.5)
    assert not stats.degenerate
    level_index = stats.quantile_levels.index(0.5)
    assert stats.normal_quantiles[level_index] == pytest.approx(0.0, abs=1e-12)
    assert stats.quantile_gap(0.5) == pytest.approx(0.5)
    assert len(stats.quantile_pairs) == len(stats.quantile_levels)

    assert normalized_bias_stats([1.0, 1.0, 1.0]).degenerate
    with pytest.raises(InsufficientDataError):
        normalized_bias_stats([1.0, None])


def test_qq_points():
    """Test full QQ data against the standard normal."""
    theoretical, ordered = qq_points([3.0, 1.0, 2.0])
    assert list(ordered) == [1.0, 2.0, 3.0]
    assert theoretical[0] < 0 < theoretical[2]
    with pytest.raises(InsufficientDataError):
        qq_points([])


def test_resolve_threads():
    """Test worker count resolution."""
    assert resolve_threads(3) == 3
    assert resolve_threads(0) == (os.cpu_count() or 1)
    with pytest.raises(InvalidParameterError):
        resolve_threads(-2)


def test_parallel_map_keeps_order():
    """Test that results come back in task order with one or several workers."""
    tasks = [-3, 1, -2, 5, 0, -7]
    assert parallel_map(abs, tasks, threads=1) == [3, 1, 2, 5, 0, 7]
    assert parallel_map(abs, tasks, threads=2) == [3, 1, 2, 5, 0, 7]


def test_evaluate_bundle(model1_bundle, spec):
    """Test the per-path record of one bundle."""
    record = evaluate_bundle(model1_bundle, spec)
    assert not record.failed
    assert record.index == 0
    assert record.ic_true == model1_bundle.truths.ic
    assert record.ic_hat + record.cojump_hat == pytest.approx(record.rc, rel=1e-12, abs=1e-18)
    assert 0.0 <= record.truncated_fraction <= 1.0
    for variant in CojumpVariant:
        assert record.variant_error(variant) is not None


def test_run_monte_carlo(small_summary):
    """Test the aggregate of a small run."""
    summary = small_summary
    assert summary.n_paths == 4
    assert summary.n_failed == 0
    assert summary.kind == BiasKind.RELATIVE
    assert [record.index for record in summary.records] == [0, 1, 2, 3]
    assert summary.ic_bias.count == 4
    assert summary.h == pytest.approx(1.0 / 84)
    assert summary.threshold == (0.1, 0.99)
    assert summary.variants.n_paths == 4
    diffs = [
        bias(r.ic_hat, r.ic_true, BiasKind.RELATIVE) - bias(r.rc, r.ic_true, BiasKind.RELATIVE)
        for r in summary.records
    ]
    assert summary.paired_difference.mean == pytest.approx(np.mean(diffs))


def test_run_monte_carlo_does_not_depend_on_threads(jumpy_config, small_summary):
    """Test that the worker count does not change the results."""
    parallel = run_monte_carlo(jumpy_config, ThresholdSpec(0.1, 0.99), n_paths=4, seed=3, threads=2)
    assert export.dumps(parallel.to_dict()) == export.dumps(small_summary.to_dict())


def test_run_monte_carlo_validates_paths(jumpy_config):
    """Test that at least one path is required."""
    with pytest.raises(InvalidParameterError):
        run_monte_carlo(jumpy_config, ThresholdSpec(0.1, 0.99), n_paths=0, seed=1)


def test_summarize_records_switches_to_absolute_bias():
    """Test absolute bias when a true IC is zero, and failure counting."""
    records = [
        PathRecord(index=1, ic_true=0.0, iv1_true=1.0, iv2_true=1.0, cojump_true=0.0,
                   ic_hat=0.1, rc=0.2, cojump_hat=0.1, truncated_fraction=0.0),
        PathRecord(index=0, ic_true=1.0, iv1_true=1.0, iv2_true=1.0, cojump_true=0.0,
                   ic_hat=1.5, rc=2.0, cojump_hat=0.5, truncated_fraction=0.0),
        PathRecord(index=2, ic_true=math.nan, iv1_true=math.nan, iv2_true=math.nan,
                   cojump_true=math.nan, error="failed"),
    ]
    summary = summarize_records(records)
    assert summary.kind == BiasKind.ABSOLUTE
    assert summary.n_failed == 1
    assert summary.n_completed == 2
    assert [record.index for record in summary.records] == [0, 1, 2]
    assert summary.ic_bias.mean == pytest.approx(0.3)
    assert summary.normalized_bias is None
    assert summary.n_normalized_undefined == 2
    assert summary.variants.n_excluded == 2


def test_sweep_grid():
    """Test the default grid and its validation."""
    grid = SweepGrid()
    assert grid.shape == (12, 19)
    assert grid.c_values[0] == 0.1 and grid.c_values[-1] == 5.6
    assert grid.beta_values[0] == 0.05 and grid.beta_values[-2] == 0.9 and grid.beta_values[-1] == 0.99
    with pytest.raises(ThresholdAdmissibilityError):
        SweepGrid((0.1,), (1.0,))
    with pytest.raises(InvalidParameterError):
        SweepGrid((), (0.5,))


def test_one_cell_sweep_matches_monte_carlo(jumpy_config, small_summary):
    """Test that a single cell reproduces the Monte Carlo mean bias on the same paths."""
    result = sweep_thresholds(jumpy_config, SweepGrid((0.1,), (0.99,)), n_paths=4, seed=3)
    assert result.kind == BiasKind.RELATIVE
    assert result.cell(0.1, 0.99) == pytest.approx(small_summary.ic_bias.mean, rel=1e-12)
    assert result.unthresholded_bias == pytest.approx(small_summary.unthresholded_bias.mean, rel=1e-12)


def test_sweep_matrix(jumpy_config):
    """Test the shape and frame of a sweep."""
    grid = SweepGrid((0.1, 1.1), (0.5, 0.99))
    result = sweep_thresholds(jumpy_config, grid, n_paths=2, seed=5)
    assert result.matrix.shape == (2, 2)
    frame = result.to_frame()
    assert list(frame.index) == [0.1, 1.1]
    assert list(frame.columns) == [0.5, 0.99]


def test_classification_study(jumpy_config, spec):
    """Test misclassification counts at two observation steps."""
    result = classification_study(jumpy_config, spec, n_paths=2, seed=1, steps_seconds=(300, 60))
    assert result.intervals == {300: 2 * 2 * 84, 60: 2 * 2 * 420}
    for step in (300, 60):
        assert 0.0 <= result.rates[step] <= 1.0
        assert result.rates[step] == result.misclassified[step] / result.intervals[step]

    with pytest.raises(InvalidParameterError):
        classification_study(jumpy_config, spec, n_paths=1, seed=1, steps_seconds=(0,))


def test_cojump_variant_study(jumpy_config, spec):
    """Test the comparison of the single co-jump estimators."""
    study = cojump_variant_study(jumpy_config, spec, n_paths=3, seed=2)
    assert study.n_paths == 3
    assert study.n_excluded == 0
    assert study.best_variant() in set(CojumpVariant)
    assert set(study.to_dict()["variants"]) == {"5", "6", "7"}


def test_cojump_variant_study_needs_cojumps(model1_config, spec):
    """Test that a model without co-jumps is rejected."""
    config = model1_config.model_copy(update={"lambda1": 0.0})
    with pytest.raises(InvalidParameterError):
        cojump_variant_study(config, spec, n_paths=2, seed=1)


def test_dumps_is_deterministic():
    """Test sorted keys, schema version and non finite values."""
    text = export.dumps({"b": float("nan"), "a": np.float64(1.5), "c": np.int64(2)})
    document = json.loads(text)
    assert document == {"schema_version": SCHEMA_VERSION, "a": 1.5, "b": None, "c": 2}
    assert list(document) == ["a", "b", "c", "schema_version"]


def test_write_summary(small_summary, tmp_path):
    """Test the summary JSON and the per-path CSV."""
    export.write_summary(small_summary, tmp_path / "summary.json", tmp_path / "records.csv")
    document = json.loads((tmp_path / "summary.json").read_text())
    assert document["schema_version"] == SCHEMA_VERSION
    assert document["n_paths"] == 4
    assert document["kind"] == "relative"
    assert "threads" not in document

    records = pd.read_csv(tmp_path / "records.csv")
    assert len(records) == 4
    assert {"ic_true", "ic_hat", "normalized_bias"} <= set(records.columns)


def test_write_normalized_stats(tmp_path):
    """Test the normalized bias exports."""
    stats = normalized_bias_stats([-1.0, 0.0, 1.0, 2.0])
    export.write_normalized_stats(stats, tmp_path / "normalized.json", tmp_path / "qq.csv")
    assert json.loads((tmp_path / "normalized.json").read_text())["count"] == 4
    assert list(pd.read_csv(tmp_path / "qq.csv").columns) == ["level", "empirical", "normal"]
