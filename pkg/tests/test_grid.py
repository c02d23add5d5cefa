"""
Tests for time grids, sampled paths and observation panels.
"""

import math

import numpy as np
import pytest

from cojump.core.grid import (
    AsyncPanel,
    SampledPath,
    SyncPanel,
    TimeGrid,
    first_mismatch,
    resample,
)
from cojump.exceptions import GridError, GridMismatchError


def test_regular_grid():
    """Test building an equally spaced grid."""
    grid = TimeGrid.regular(84)
    assert grid.n_intervals == 84
    assert len(grid) == 85
    assert grid.horizon == 1.0
    assert grid.mesh == pytest.approx(1.0 / 84)
    assert grid.times[0] == 0.0
    assert grid.times[-1] == 1.0


def test_grid_is_read_only():
    """Test that grid timestamps cannot be modified in place."""
    grid = TimeGrid.regular(4)
    with pytest.raises(ValueError):
        grid.times[1] = 0.3


@pytest.mark.parametrize("times", [
    [0.0],
    [0.1, 0.5, 1.0],
    [0.0, 0.5, 0.5, 1.0],
    [0.0, 0.6, 0.4, 1.0],
    [0.0, np.nan, 1.0],
])
def test_invalid_grids(times):
    """Test that malformed grids are rejected."""
    with pytest.raises(GridError):
        TimeGrid(times)


def test_horizon_must_match_last_timestamp():
    """Test that an explicit horizon must equal the last timestamp."""
    with pytest.raises(GridError):
        TimeGrid([0.0, 0.5, 1.0], horizon=2.0)


def test_irregular_grid_mesh():
    """Test that the mesh is the largest step."""
    grid = TimeGrid([0.0, 0.1, 0.5, 0.6, 1.0])
    assert grid.mesh == pytest.approx(0.4)
    assert np.allclose(grid.steps, [0.1, 0.4, 0.1, 0.4])


def test_grid_upto():
    """Test restricting a grid to a prefix."""
    grid = TimeGrid.regular(4)
    prefix = grid.upto(0.5)
    assert list(prefix.times) == [0.0, 0.25, 0.5]
    assert prefix.horizon == 0.5

    with pytest.raises(GridError):
        grid.upto(0.1)


def test_first_mismatch():
    """Test locating the first differing timestamp."""
    grid = TimeGrid.regular(4)
    assert first_mismatch(grid, TimeGrid.regular(4)) is None
    assert first_mismatch(grid, TimeGrid([0.0, 0.25, 0.6, 1.0])) == pytest.approx(0.5)
    assert first_mismatch(grid.upto(0.5), grid) == pytest.approx(0.75)


def test_sampled_path_returns():
    """Test increments of a sampled path."""
    path = SampledPath(TimeGrid.regular(3), [0.0, 1.0, 0.5, 2.0])
    assert np.allclose(path.returns, [1.0, -0.5, 1.5])

    rebuilt = SampledPath.from_returns(TimeGrid.regular(3), [1.0, -0.5, 1.5])
    assert np.allclose(rebuilt.values, path.values)


def test_sampled_path_validation():
    """Test that values must match the grid and be finite."""
    grid = TimeGrid.regular(3)
    with pytest.raises(GridError):
        SampledPath(grid, [0.0, 1.0])
    with pytest.raises(GridError):
        SampledPath(grid, [0.0, 1.0, np.inf, 2.0])


def test_resample_takes_last_observation():
    """Test that coarse timestamps take the last fine value at or before them."""
    fine = SampledPath(TimeGrid.regular(6), [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
    coarse = resample(fine, TimeGrid.regular(3))
    assert list(coarse.values) == [0.0, 2.0, 4.0, 6.0]

    between = resample(fine, TimeGrid([0.0, 0.25, 1.0]))
    assert list(between.values) == [0.0, 1.0, 6.0]


def test_resample_is_idempotent():
    """Test that resampling twice onto the same grid changes nothing."""
    rng = np.random.default_rng(3)
    fine = SampledPath(TimeGrid(np.concatenate(([0.0], np.sort(rng.uniform(0.0, 1.0, 500)), [1.0]))),
                       rng.standard_normal(502).cumsum())
    for coarse in (TimeGrid.regular(84), TimeGrid([0.0, 0.013, 0.5, 0.77, 1.0])):
        once = resample(fine, coarse)
        assert np.array_equal(resample(once, coarse).values, once.values)


def test_returns_telescope_to_the_levels():
    """Test that partial sums of the increments rebuild the observed levels."""
    rng = np.random.default_rng(5)
    grid = TimeGrid.regular(390)
    path1 = SampledPath.from_returns(grid, 0.001 * rng.standard_normal(390), start=4.6)
    path2 = SampledPath.from_returns(grid, 0.001 * rng.standard_normal(390), start=3.2)
    panel = SyncPanel.from_paths(path1, path2)
    for path, returns in ((path1, panel.returns1), (path2, panel.returns2)):
        assert np.array_equal(returns, path.returns)
        assert np.allclose(path.values[0] + np.cumsum(returns), path.values[1:], rtol=0.0, atol=1e-12)
        assert math.fsum(returns) == pytest.approx(path.values[-1] - path.values[0], abs=1e-12)


def test_resample_rejects_longer_horizon():
    """Test that the coarse horizon may not exceed the path horizon."""
    fine = SampledPath(TimeGrid.regular(2), [0.0, 1.0, 2.0])
    with pytest.raises(GridError):
        resample(fine, TimeGrid([0.0, 1.0, 2.0]))


def test_sync_panel(small_panel):
    """Test synchronous panel properties."""
    assert small_panel.n == 4
    assert small_panel.h == pytest.approx(0.25)
    swapped = small_panel.swap()
    assert np.array_equal(swapped.returns1, small_panel.returns2)
    assert np.array_equal(swapped.returns2, small_panel.returns1)

    window = small_panel.upto(0.5)
    assert window.n == 2
    assert np.array_equal(window.returns1, small_panel.returns1[:2])


def test_sync_panel_length_mismatch():
    """Test that both return series must match the grid."""
    with pytest.raises(GridError):
        SyncPanel(TimeGrid.regular(3), [0.1, 0.2, 0.3], [0.1, 0.2])


def test_sync_panel_from_mismatching_paths():
    """Test that mismatching grids name the first differing timestamp."""
    path1 = SampledPath(TimeGrid.regular(4), [0.0, 0.1, 0.2, 0.3, 0.4])
    path2 = SampledPath(TimeGrid([0.0, 0.25, 0.6, 1.0]), [0.0, 0.1, 0.2, 0.3])
    with pytest.raises(GridMismatchError) as excinfo:
        SyncPanel.from_paths(path1, path2)
    assert excinfo.value.timestamp == pytest.approx(0.5)
    assert "0.5" in str(excinfo.value)


def test_async_panel():
    """Test asynchronous panels, their combined mesh and windows."""
    path1 = SampledPath(TimeGrid.regular(4), [0.0, 0.1, 0.2, 0.3, 0.4])
    path2 = SampledPath(TimeGrid([0.0, 0.3, 0.6, 1.0]), [0.0, 0.1, 0.2, 0.3])
    panel = AsyncPanel(path1, path2)
    assert panel.h == pytest.approx(0.4)

    window = panel.upto(0.5)
    assert window.path1.grid.horizon == 0.5
    assert window.path2.grid.horizon == pytest.approx(0.3)

    with pytest.raises(GridMismatchError):
        panel.synchronized()


def test_async_panel_different_horizons():
    """Test that asynchronous paths must cover the same horizon."""
    path1 = SampledPath(TimeGrid.regular(4), [0.0, 0.1, 0.2, 0.3, 0.4])
    path2 = SampledPath(TimeGrid([0.0, 0.3, 0.6]), [0.0, 0.1, 0.2])
    with pytest.raises(GridMismatchError):
        AsyncPanel(path1, path2)
