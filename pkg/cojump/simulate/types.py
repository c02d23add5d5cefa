"""
Types produced by the simulation engine.
"""

import json
import logging
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd

from cojump.core.grid import SampledPath, SyncPanel, TimeGrid, resample
from cojump.enums import ModelKind
from cojump.exceptions import GridError, InvalidParameterError

# Configure logger
logger = logging.getLogger("cojump.simulate.types")

BUNDLE_COLUMNS = ("time", "X1", "X2", "D1", "D2", "J1", "J2", "sigma1", "sigma2")

_MAX_SEED = 2 ** 64


@dataclass(frozen=True)
class RngSeed:
    """
    Identifies the random stream of one simulated path.

    The pair (master, path_index) seeds a ``numpy.random.SeedSequence``; two
    different pairs give independent streams and the same pair always
    gives the same stream, whichever worker draws it.
    """

    master: int
    path_index: int = 0

    def __post_init__(self):
        if not 0 <= int(self.master) < _MAX_SEED:
            raise InvalidParameterError("seed", self.master, message=f"Seed must be in [0, 2^64), got {self.master}",
                                        component="simulate")
        if int(self.path_index) < 0:
            raise InvalidParameterError("path_index", self.path_index, component="simulate")

    def generator(self) -> np.random.Generator:
        """Create the generator of this stream."""
        return np.random.default_rng(np.random.SeedSequence([int(self.master), int(self.path_index)]))


@dataclass(frozen=True, eq=False)
class JumpArrivals:
    """Jump times (sorted, in days) and sizes of a compound Poisson process."""

    times: np.ndarray
    sizes: np.ndarray

    def __len__(self) -> int:
        return int(self.times.size)


@dataclass(frozen=True)
class BundleTruths:
    """
    Ground truths recorded while simulating a bundle.

    IC and IV are left-endpoint Riemann sums on the fine grid; the co-jump
    sum is the sum of the fine-step cross products of the jump increments.
    """

    ic: float
    iv1: float
    iv2: float
    cojump: float
    n_jumps1: int = 0
    n_jumps3: int = 0

    @property
    def quadratic_covariation(self) -> float:
        """IC plus the sum of co-jumps."""
        return self.ic + self.cojump

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class PathBundle:
    """
    A simulated bivariate path on the fine grid with its ground truths.

    Levels start at 0 and X = D + J holds pointwise; dj1, dj2 are the fine
    step jump increments the J levels are accumulated from. Volatilities are given
    at the grid times; the value at t_k drives the step ]t_k, t_{k+1}].
    """

    kind: ModelKind
    seed: RngSeed
    grid: TimeGrid
    coarse_step: int
    x1: np.ndarray
    x2: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    j1: np.ndarray
    j2: np.ndarray
    sigma1: np.ndarray
    sigma2: np.ndarray
    dj1: np.ndarray
    dj2: np.ndarray
    truths: BundleTruths
    jump_times1: np.ndarray = field(default_factory=lambda: np.empty(0))
    jump_times3: np.ndarray = field(default_factory=lambda: np.empty(0))

    @property
    def n_fine(self) -> int:
        return self.grid.n_intervals

    @property
    def path1(self) -> SampledPath:
        return SampledPath(self.grid, self.x1)

    @property
    def path2(self) -> SampledPath:
        return SampledPath(self.grid, self.x2)

    def coarse_grid(self, step: Optional[int] = None) -> TimeGrid:
        """
        Grid of the observations every ``step`` fine steps.

        Args:
            step: Number of fine steps per observation (default: the configured coarse step)
        """
        step = self.coarse_step if step is None else int(step)
        if step < 1 or self.n_fine % step != 0:
            raise GridError(f"Observation step {step} does not divide {self.n_fine} fine steps", component="simulate")
        return TimeGrid(self.grid.times[::step], self.grid.horizon)

    def panel(self, step: Optional[int] = None) -> SyncPanel:
        """Synchronous panel of X1, X2 observed every ``step`` fine steps."""
        coarse = self.coarse_grid(step)
        return SyncPanel.from_paths(resample(self.path1, coarse), resample(self.path2, coarse))

    def _per_interval(self, values: np.ndarray, step: Optional[int]) -> np.ndarray:
        step = self.coarse_step if step is None else int(step)
        self.coarse_grid(step)
        return values.reshape(-1, step)

    def interval_cojumps(self, step: Optional[int] = None) -> np.ndarray:
        """True co-jump of every observation interval, sum of fine Delta J1 Delta J2."""
        products = self._per_interval(self.dj1 * self.dj2, step)
        return np.array([math.fsum(row) for row in products])

    def jump_intervals(self, step: Optional[int] = None) -> np.ndarray:
        """
        Flag the observation intervals in which each process jumps.

        Returns:
            Boolean array of shape (2, n) for processes 1 and 2
        """
        jumps1 = self._per_interval(self.dj1 != 0, step).any(axis=1)
        jumps2 = self._per_interval(self.dj2 != 0, step).any(axis=1)
        return np.vstack([jumps1, jumps2])

    def to_frame(self) -> pd.DataFrame:
        """Fine grid series as a frame with the bundle CSV columns."""
        return pd.DataFrame({
            "time": self.grid.times,
            "X1": self.x1, "X2": self.x2,
            "D1": self.d1, "D2": self.d2,
            "J1": self.j1, "J2": self.j2,
            "sigma1": self.sigma1, "sigma2": self.sigma2,
        }, columns=list(BUNDLE_COLUMNS))

    def write_csv(self, destination: Union[str, Path]) -> Path:
        """Write the fine grid series as CSV."""
        destination = Path(destination)
        destination.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(destination, index=False, float_format="%.17g")
        logger.debug(f"Wrote bundle of {len(self.grid)} rows to {destination}")
        return destination

    def write_panel_csv(self, destination: Union[str, Path], step: Optional[int] = None) -> Path:
        """Write the coarse panel levels as CSV with columns time, X1, X2."""
        destination = Path(destination)
        destination.parent.mkdir(parents=True, exist_ok=True)
        coarse = self.coarse_grid(step)
        frame = pd.DataFrame({
            "time": coarse.times,
            "X1": resample(self.path1, coarse).values,
            "X2": resample(self.path2, coarse).values,
        })
        frame.to_csv(destination, index=False, float_format="%.17g")
        return destination

    def write_truths(self, destination: Union[str, Path]) -> Path:
        """Write the truths, seed and jump times as JSON."""
        destination = Path(destination)
        destination.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "model": self.kind.value,
            "seed": {"master": self.seed.master, "path_index": self.seed.path_index},
            "truths": self.truths.to_dict(),
            "jump_times1": self.jump_times1.tolist(),
            "jump_times3": self.jump_times3.tolist(),
        }
        destination.write_text(json.dumps(payload, indent=2, sort_keys=True))
        return destination
