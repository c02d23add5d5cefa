"""
Building blocks of the simulation models.

Every generator takes the ``numpy.random.Generator`` of the path being built
and draws from it in a fixed order, so a path is a pure function of its
seed.
"""

import logging
import math
from typing import Tuple, Union

import numpy as np
from scipy import signal

from cojump.core.grid import TimeGrid
from cojump.exceptions import GridMismatchError, InvalidParameterError
from cojump.simulate.config import JumpSizeDistribution, StochasticVolatility
from cojump.simulate.types import JumpArrivals

# Configure logger
logger = logging.getLogger("cojump.simulate.processes")

GridOrSteps = Union[TimeGrid, np.ndarray]


def _steps(grid: GridOrSteps) -> np.ndarray:
    if isinstance(grid, TimeGrid):
        return grid.steps
    steps = np.asarray(grid, dtype=np.float64)
    if steps.ndim != 1 or np.any(steps <= 0):
        raise InvalidParameterError("steps", "array", message="Step lengths must be a 1-d array of positive values",
                                    component="simulate")
    return steps


def _check_correlation(name: str, value: float) -> None:
    if not (math.isfinite(value) and -1.0 <= value <= 1.0):
        raise InvalidParameterError(name, value, message=f"Correlation {name} must lie in [-1, 1], got {value}",
                                    component="simulate")


def correlated_brownian_increments(rho: float, grid: GridOrSteps,
                                   rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw Brownian increments with correlation rho.

    dW2 = rho dW1 + sqrt(1 - rho^2) dW3 with dW1, dW3 independent N(0, dt).

    Args:
        rho: Correlation in [-1, 1]
        grid: The time grid, or the array of step lengths
        rng: Generator of the path

    Returns:
        (dW1, dW2)
    """
    _check_correlation("rho", rho)
    root_dt = np.sqrt(_steps(grid))
    dw1 = root_dt * rng.standard_normal(root_dt.size)
    dw3 = root_dt * rng.standard_normal(root_dt.size)
    return dw1, rho * dw1 + math.sqrt(1.0 - rho * rho) * dw3


def simulate_sv_path(sv: StochasticVolatility, grid: GridOrSteps, rng: np.random.Generator) -> np.ndarray:
    """
    Simulate sigma_t = level * exp(vol_of_vol * v_t) at the grid times.

    v is an Ornstein-Uhlenbeck process with unit diffusion, started from its
    stationary law N(0, 1 / (2 mean_reversion)) and advanced with its exact
    AR(1) transition, so any step length is admissible.

    Returns:
        Positive volatilities, one per grid time (n + 1 values)
    """
    if not sv.level > 0:
        raise InvalidParameterError("level", sv.level, component="simulate")
    steps = _steps(grid)
    kappa = sv.mean_reversion
    decay = np.exp(-kappa * steps)
    innovation_std = np.sqrt(-np.expm1(-2.0 * kappa * steps) / (2.0 * kappa))
    shocks = np.empty(steps.size + 1)
    shocks[0] = rng.standard_normal() / math.sqrt(2.0 * kappa)
    shocks[1:] = innovation_std * rng.standard_normal(steps.size)
    if np.all(decay == decay[0]):
        v = signal.lfilter([1.0], [1.0, -decay[0]], shocks)
    else:
        v = np.empty_like(shocks)
        v[0] = shocks[0]
        for k in range(steps.size):
            v[k + 1] = decay[k] * v[k] + shocks[k + 1]
    return sv.level * np.exp(sv.vol_of_vol * v)


def simulate_compound_poisson(intensity: float, size_dist: JumpSizeDistribution, horizon: float,
                              rng: np.random.Generator) -> JumpArrivals:
    """
    Simulate a compound Poisson process on [0, horizon].

    The count is Poisson(intensity * horizon), times are i.i.d. uniform and
    sorted, sizes are i.i.d. from ``size_dist``.

    Raises:
        InvalidParameterError: If the intensity is negative or the size law has an atom at 0
    """
    if not (math.isfinite(intensity) and intensity >= 0):
        raise InvalidParameterError("lambda", intensity, message=f"Jump intensity must be >= 0, got {intensity}",
                                    component="simulate")
    if size_dist.std == 0 and size_dist.mean == 0:
        raise InvalidParameterError("jump_size", size_dist,
                                    message="Jump size law has an atom at 0", component="simulate")
    count = int(rng.poisson(intensity * horizon))
    times = np.sort(rng.uniform(0.0, horizon, count))
    sizes = rng.normal(size_dist.mean, size_dist.std, count)
    if size_dist.symmetric:
        sizes = np.where(rng.random(count) < 0.5, -sizes, sizes)
    return JumpArrivals(times=times, sizes=sizes)


def place_jumps(arrivals: JumpArrivals, grid: TimeGrid) -> np.ndarray:
    """
    Aggregate jumps into fine step increments.

    A jump at time tau lands in the step ]t_{k-1}, t_k] containing it.
    """
    increments = np.zeros(grid.n_intervals)
    index = np.searchsorted(grid.times, arrivals.times, side="left") - 1
    np.add.at(increments, np.clip(index, 0, grid.n_intervals - 1), arrivals.sizes)
    return increments


def simulate_vg_increments(kappa: float, theta: float, varsigma: float, grid: GridOrSteps,
                           rng: np.random.Generator) -> np.ndarray:
    """
    Simulate Variance Gamma increments by subordination.

    For a step of length dt: dG ~ Gamma(shape dt / kappa, scale kappa), so
    E[dG] = dt and Var[dG] = kappa dt, then dJ = theta dG + varsigma sqrt(dG) Z.

    Raises:
        InvalidParameterError: If kappa <= 0 or varsigma < 0
    """
    if not (math.isfinite(kappa) and kappa > 0):
        raise InvalidParameterError("kappa", kappa, message=f"VG kappa must be positive, got {kappa}",
                                    component="simulate")
    if not (math.isfinite(varsigma) and varsigma >= 0):
        raise InvalidParameterError("varsigma", varsigma, message=f"VG varsigma must be >= 0, got {varsigma}",
                                    component="simulate")
    steps = _steps(grid)
    subordinator = rng.gamma(shape=steps / kappa, scale=kappa)
    normals = rng.standard_normal(steps.size)
    return theta * subordinator + varsigma * np.sqrt(subordinator) * normals


def correlate_jumps(j1: np.ndarray, j3: np.ndarray, rho_j: float) -> np.ndarray:
    """
    Build J2 = rho_j J1 + sqrt(1 - rho_j^2) J3, pointwise.

    Works on levels and on increments alike.

    Raises:
        GridMismatchError: If J1 and J3 have different lengths
    """
    _check_correlation("rho_j", rho_j)
    j1 = np.asarray(j1, dtype=np.float64)
    j3 = np.asarray(j3, dtype=np.float64)
    if j1.shape != j3.shape:
        raise GridMismatchError(f"J1 and J3 live on different grids ({j1.size} and {j3.size} points)",
                                component="simulate")
    return rho_j * j1 + math.sqrt(1.0 - rho_j * rho_j) * j3
