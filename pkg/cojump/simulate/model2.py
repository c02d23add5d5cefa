"""
Model 2: constant volatility diffusions with Variance Gamma jumps.
"""

from typing import Tuple

import numpy as np

from cojump.simulate.base import BasePathModel, JumpIncrements
from cojump.simulate.config import Model2Config
from cojump.simulate.processes import correlate_jumps, simulate_vg_increments


class Model2(BasePathModel):
    """Infinite activity model; J1 and J3 are independent VG processes."""

    config: Model2Config

    def _volatilities(self, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
        size = self.config.n_fine + 1
        return np.full(size, self.config.sigma1), np.full(size, self.config.sigma2)

    def _jumps(self, rng: np.random.Generator) -> JumpIncrements:
        vg1, vg3 = self.config.vg1, self.config.vg3
        dj1 = simulate_vg_increments(vg1.kappa, vg1.theta, vg1.varsigma, self._steps, rng)
        dj3 = simulate_vg_increments(vg3.kappa, vg3.theta, vg3.varsigma, self._steps, rng)
        return JumpIncrements(dj1=dj1, dj2=correlate_jumps(dj1, dj3, self.config.rho_j))
