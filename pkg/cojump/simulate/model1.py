"""
Model 1: stochastic volatility diffusions with compound Poisson jumps.
"""

import logging
from typing import Tuple

import numpy as np

from cojump.simulate.base import BasePathModel, JumpIncrements
from cojump.simulate.config import Model1Config
from cojump.simulate.processes import correlate_jumps, place_jumps, simulate_compound_poisson, simulate_sv_path

# Configure logger
logger = logging.getLogger("cojump.simulate.model1")


class Model1(BasePathModel):
    """
    Finite activity model.

    Each process has an exponential OU volatility. J1 and J3 are independent
    compound Poisson processes and J2 = rho_j J1 + sqrt(1 - rho_j^2) J3, so
    every jump of J1 is a co-jump when rho_j != 0.
    """

    config: Model1Config

    def _volatilities(self, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
        return (simulate_sv_path(self.config.sv1, self._steps, rng),
                simulate_sv_path(self.config.sv2, self._steps, rng))

    def _jumps(self, rng: np.random.Generator) -> JumpIncrements:
        horizon = self.config.horizon_days
        arrivals1 = simulate_compound_poisson(self.config.lambda1, self.config.jump_size, horizon, rng)
        arrivals3 = simulate_compound_poisson(self.config.lambda3, self.config.jump_size, horizon, rng)
        dj1 = place_jumps(arrivals1, self.fine_grid)
        dj3 = place_jumps(arrivals3, self.fine_grid)
        return JumpIncrements(
            dj1=dj1,
            dj2=correlate_jumps(dj1, dj3, self.config.rho_j),
            jump_times1=arrivals1.times,
            jump_times3=arrivals3.times,
        )
