"""
Time grids, sampled paths and observation panels.

Time is measured in trading days: a 5-minute step over a 7-hour day is
h = 1/84. All types are immutable once built; their arrays are flagged
read-only so they can be shared between workers.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from cojump.exceptions import GridError, GridMismatchError

# Configure logger
logger = logging.getLogger("cojump.core.grid")

# Absolute tolerance for timestamp equality, in days
TIME_TOLERANCE = 1e-12

ArrayLike = Union[Sequence[float], np.ndarray]


def _frozen(values: ArrayLike) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class TimeGrid:
    """
    A partition 0 = t_0 < t_1 < ... < t_n = T of [0, T].

    Attributes:
        times: Strictly increasing timestamps, first one 0, last one T
        horizon: The horizon T
    """

    times: np.ndarray
    horizon: float

    def __init__(self, times: ArrayLike, horizon: Optional[float] = None):
        array = _frozen(times)
        if array.ndim != 1 or array.size < 2:
            raise GridError("A time grid needs at least two timestamps", component="core")
        if not np.all(np.isfinite(array)):
            raise GridError("Time grid contains non finite timestamps", component="core")
        if abs(array[0]) > TIME_TOLERANCE:
            raise GridError(f"Time grid must start at 0, got {array[0]!r}", component="core")
        steps = np.diff(array)
        if np.any(steps <= 0):
            first = int(np.argmax(steps <= 0)) + 1
            raise GridError(
                f"Time grid is not strictly increasing at index {first} (t={array[first]!r})",
                component="core",
            )
        if horizon is None:
            horizon = float(array[-1])
        elif abs(array[-1] - horizon) > TIME_TOLERANCE:
            raise GridError(
                f"Last timestamp {array[-1]!r} does not equal the horizon {horizon!r}",
                component="core",
            )
        object.__setattr__(self, "times", array)
        object.__setattr__(self, "horizon", float(horizon))

    @classmethod
    def regular(cls, n_intervals: int, horizon: float = 1.0) -> "TimeGrid":
        """
        Create an equally spaced grid.

        Args:
            n_intervals: Number of intervals n (h = horizon / n)
            horizon: The horizon T in days

        Returns:
            The grid with n + 1 timestamps
        """
        if n_intervals < 1:
            raise GridError(f"A regular grid needs at least one interval, got {n_intervals}", component="core")
        if horizon <= 0:
            raise GridError(f"Horizon must be positive, got {horizon}", component="core")
        return cls(np.linspace(0.0, horizon, n_intervals + 1), horizon)

    @property
    def n_intervals(self) -> int:
        """Number of intervals n."""
        return int(self.times.size - 1)

    @property
    def steps(self) -> np.ndarray:
        """Interval lengths t_j - t_{j-1}."""
        return np.diff(self.times)

    @property
    def mesh(self) -> float:
        """Mesh h = max_j (t_j - t_{j-1})."""
        return float(self.steps.max())

    def __len__(self) -> int:
        return int(self.times.size)

    def upto(self, t: float) -> "TimeGrid":
        """
        Restrict the grid to the timestamps t_j <= t.

        Raises:
            GridError: If fewer than two timestamps remain
        """
        keep = self.times <= t + TIME_TOLERANCE
        return TimeGrid(self.times[keep])


def first_mismatch(grid1: TimeGrid, grid2: TimeGrid) -> Optional[float]:
    """
    Find the first timestamp at which two grids differ.

    Returns:
        None when the grids coincide, otherwise the first differing
        timestamp (taken from whichever grid is longer when one is a
        prefix of the other)
    """
    common = min(len(grid1), len(grid2))
    differs = np.abs(grid1.times[:common] - grid2.times[:common]) > TIME_TOLERANCE
    if np.any(differs):
        index = int(np.argmax(differs))
        return float(min(grid1.times[index], grid2.times[index]))
    if len(grid1) != len(grid2):
        longer = grid1 if len(grid1) > len(grid2) else grid2
        return float(longer.times[common])
    return None


@dataclass(frozen=True, eq=False)
class SampledPath:
    """
    Observations X_{t_0}, ..., X_{t_n} of one process (log-price levels).

    Attributes:
        grid: The observation times
        values: The observed levels, same length as the grid
    """

    grid: TimeGrid
    values: np.ndarray

    def __init__(self, grid: TimeGrid, values: ArrayLike):
        array = _frozen(values)
        if array.shape != grid.times.shape:
            raise GridError(
                f"Path has {array.size} values for a grid of {len(grid)} timestamps",
                component="core",
            )
        if not np.all(np.isfinite(array)):
            raise GridError("Path contains non finite values", component="core")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", array)

    @classmethod
    def from_returns(cls, grid: TimeGrid, returns: ArrayLike, start: float = 0.0) -> "SampledPath":
        """Rebuild levels from increments by cumulative summation."""
        increments = np.asarray(returns, dtype=np.float64)
        values = np.concatenate(([start], start + np.cumsum(increments)))
        return cls(grid, values)

    @property
    def returns(self) -> np.ndarray:
        """Increments Delta_j X = X_{t_j} - X_{t_{j-1}}."""
        return np.diff(self.values)

    def upto(self, t: float) -> "SampledPath":
        """Restrict the path to the observations at t_j <= t."""
        grid = self.grid.upto(t)
        return SampledPath(grid, self.values[: len(grid)])


def resample(path: SampledPath, coarse: TimeGrid) -> SampledPath:
    """
    Sample a path at coarser timestamps.

    A coarse timestamp that is not an exact fine timestamp takes the last
    fine observation at or before it (cadlag convention).

    Args:
        path: The finely observed path
        coarse: The target grid; its horizon may not exceed the path's

    Returns:
        The path observed on the coarse grid

    Raises:
        GridError: If the coarse horizon exceeds the fine horizon
    """
    if coarse.horizon > path.grid.horizon + TIME_TOLERANCE:
        raise GridError(
            f"Coarse horizon {coarse.horizon!r} exceeds the path horizon {path.grid.horizon!r}",
            component="core",
        )
    index = np.searchsorted(path.grid.times, coarse.times + TIME_TOLERANCE, side="right") - 1
    logger.debug(f"Resampled {len(path.grid)} observations onto {len(coarse)} timestamps")
    return SampledPath(coarse, path.values[index])


@dataclass(frozen=True, eq=False)
class SyncPanel:
    """
    Synchronous increments of two processes on a common grid.

    Attributes:
        grid: The common observation grid
        returns1: Increments of process 1, length n
        returns2: Increments of process 2, length n
    """

    grid: TimeGrid
    returns1: np.ndarray
    returns2: np.ndarray

    def __init__(self, grid: TimeGrid, returns1: ArrayLike, returns2: ArrayLike):
        r1 = _frozen(returns1)
        r2 = _frozen(returns2)
        n = grid.n_intervals
        if r1.shape != (n,) or r2.shape != (n,):
            raise GridError(
                f"Panel needs {n} returns per process, got {r1.size} and {r2.size}",
                component="core",
            )
        if not (np.all(np.isfinite(r1)) and np.all(np.isfinite(r2))):
            raise GridError("Panel contains non finite returns", component="core")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "returns1", r1)
        object.__setattr__(self, "returns2", r2)

    @classmethod
    def from_returns(cls, returns1: ArrayLike, returns2: ArrayLike, horizon: float = 1.0) -> "SyncPanel":
        """Build a panel on the regular grid matching the number of returns."""
        n = len(returns1)
        return cls(TimeGrid.regular(n, horizon), returns1, returns2)

    @classmethod
    def from_paths(cls, path1: SampledPath, path2: SampledPath) -> "SyncPanel":
        """
        Build a panel from two paths observed on the same grid.

        Raises:
            GridMismatchError: If the grids differ, naming the first mismatching timestamp
        """
        mismatch = first_mismatch(path1.grid, path2.grid)
        if mismatch is not None:
            raise GridMismatchError(
                "Paths are not observed on the same grid; use the asynchronous estimator",
                timestamp=mismatch,
                component="core",
            )
        return cls(path1.grid, path1.returns, path2.returns)

    @property
    def n(self) -> int:
        """Number of intervals."""
        return self.grid.n_intervals

    @property
    def h(self) -> float:
        """Mesh of the panel grid."""
        return self.grid.mesh

    def upto(self, t: float) -> "SyncPanel":
        """Keep the intervals ]t_{j-1}, t_j] with t_j <= t."""
        grid = self.grid.upto(t)
        n = grid.n_intervals
        return SyncPanel(grid, self.returns1[:n], self.returns2[:n])

    def swap(self) -> "SyncPanel":
        """Exchange the roles of the two processes."""
        return SyncPanel(self.grid, self.returns2, self.returns1)


@dataclass(frozen=True, eq=False)
class AsyncPanel:
    """
    Two paths observed at their own times tau_j and nu_i over the same horizon.
    """

    path1: SampledPath
    path2: SampledPath
    windowed: bool = field(default=False, repr=False)

    def __post_init__(self):
        if not self.windowed and abs(self.path1.grid.horizon - self.path2.grid.horizon) > TIME_TOLERANCE:
            raise GridMismatchError(
                f"Asynchronous paths have different horizons "
                f"({self.path1.grid.horizon!r} and {self.path2.grid.horizon!r})",
                component="core",
            )

    @property
    def h(self) -> float:
        """Combined mesh: the larger of the two grids' meshes."""
        return max(self.path1.grid.mesh, self.path2.grid.mesh)

    def upto(self, t: float) -> "AsyncPanel":
        """Restrict both paths to the observations at times <= t; their last timestamps may differ."""
        return AsyncPanel(self.path1.upto(t), self.path2.upto(t), windowed=True)

    def synchronized(self) -> SyncPanel:
        """Convert to a synchronous panel when both grids coincide."""
        return SyncPanel.from_paths(self.path1, self.path2)
