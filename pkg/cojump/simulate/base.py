"""
Base path model: Euler assembly of the diffusion and jump parts.
"""

import logging
import math
from abc import abstractmethod
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from cojump.core.grid import TimeGrid
from cojump.simulate.config import ModelConfig
from cojump.simulate.interface import PathModel
from cojump.simulate.processes import correlated_brownian_increments
from cojump.simulate.types import BundleTruths, PathBundle, RngSeed

# Configure logger
logger = logging.getLogger("cojump.simulate.base")


@dataclass
class JumpIncrements:
    """Fine step jump increments of both processes and the arrival times behind them."""

    dj1: np.ndarray
    dj2: np.ndarray
    jump_times1: np.ndarray = field(default_factory=lambda: np.empty(0))
    jump_times3: np.ndarray = field(default_factory=lambda: np.empty(0))


def _levels(increments: np.ndarray) -> np.ndarray:
    return np.concatenate(([0.0], np.cumsum(increments)))


def _read_only(*arrays: np.ndarray) -> None:
    for array in arrays:
        array.setflags(write=False)


class BasePathModel(PathModel):
    """
    Base class for path models.

    Draws, in this order, the two volatility paths, the Brownian increments
    and the jump increments, then assembles
    X = integral of a dt + integral of sigma dW + J with volatility and drift
    taken at the left end of every fine step.
    """

    def __init__(self, config: ModelConfig):
        """Initialize the model with its configuration."""
        super().__init__(config)
        self.model_name = self.__class__.__name__.lower()
        self._fine_grid = TimeGrid.regular(config.n_fine, config.horizon_days)
        self._steps = np.full(config.n_fine, config.fine_dt)
        _read_only(self._steps)

    @property
    def fine_grid(self) -> TimeGrid:
        return self._fine_grid

    @property
    def coarse_step(self) -> int:
        """Fine steps per coarse observation."""
        return self.config.coarse_step_seconds // self.config.fine_step_seconds

    @abstractmethod
    def _volatilities(self, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
        """Volatility paths at the grid times (n + 1 values each)."""
        pass

    @abstractmethod
    def _jumps(self, rng: np.random.Generator) -> JumpIncrements:
        """Fine step jump increments."""
        pass

    def simulate(self, seed: RngSeed) -> PathBundle:
        rng = seed.generator()
        sigma1, sigma2 = self._volatilities(rng)
        dw1, dw2 = correlated_brownian_increments(self.config.rho, self._steps, rng)
        jumps = self._jumps(rng)

        drift = self.config.drift * self._steps
        d1 = _levels(drift + sigma1[:-1] * dw1)
        d2 = _levels(drift + sigma2[:-1] * dw2)
        j1 = _levels(jumps.dj1)
        j2 = _levels(jumps.dj2)
        x1 = d1 + j1
        x2 = d2 + j2
        _read_only(x1, x2, d1, d2, j1, j2, sigma1, sigma2, jumps.dj1, jumps.dj2)

        truths = BundleTruths(
            ic=math.fsum(self.config.rho * sigma1[:-1] * sigma2[:-1] * self._steps),
            iv1=math.fsum(sigma1[:-1] ** 2 * self._steps),
            iv2=math.fsum(sigma2[:-1] ** 2 * self._steps),
            cojump=math.fsum(jumps.dj1 * jumps.dj2),
            n_jumps1=int(jumps.jump_times1.size),
            n_jumps3=int(jumps.jump_times3.size),
        )
        logger.debug(f"{self.model_name} path {seed.master}/{seed.path_index}: {truths}")
        return PathBundle(
            kind=self.kind,
            seed=seed,
            grid=self._fine_grid,
            coarse_step=self.coarse_step,
            x1=x1, x2=x2, d1=d1, d2=d2, j1=j1, j2=j2,
            sigma1=sigma1, sigma2=sigma2,
            dj1=jumps.dj1, dj2=jumps.dj2,
            truths=truths,
            jump_times1=jumps.jump_times1,
            jump_times3=jumps.jump_times3,
        )
