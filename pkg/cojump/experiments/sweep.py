"""
Threshold sweeps over a (c, beta) grid with common random numbers.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from cojump.core.threshold import threshold_value
from cojump.enums import BiasKind
from cojump.estimators.threshold import realized_covariation, threshold_ic
from cojump.experiments.monte_carlo import check_n_paths
from cojump.experiments.pool import parallel_map
from cojump.experiments.statistics import bias
from cojump.experiments.types import SweepGrid, SweepResult
from cojump.simulate.config import ModelConfig
from cojump.simulate.factory import build_paths
from cojump.simulate.types import RngSeed

# Configure logger
logger = logging.getLogger("cojump.experiments.sweep")


def _sweep_path(task: Tuple[ModelConfig, SweepGrid, int, int]) -> Tuple[float, float, np.ndarray]:
    config, grid, master, index = task
    bundle = build_paths(config, RngSeed(master, index))
    panel = bundle.panel()
    estimates = np.array([threshold_ic(panel, threshold_value(spec, panel.h)) for spec in grid.specs()])
    return bundle.truths.ic, realized_covariation(panel), estimates.reshape(grid.shape)


def sweep_thresholds(config: ModelConfig, grid: Optional[SweepGrid], n_paths: int, seed: int,
                     threads: Optional[int] = 1, progress: bool = False) -> SweepResult:
    """
    Mean IC bias for every cell of a threshold grid.

    Every cell is evaluated on the same simulated paths, path i using
    RngSeed(seed, i) as in ``run_monte_carlo``; a one-cell grid therefore
    reproduces the Monte Carlo mean bias.

    Args:
        config: The model configuration
        grid: The (c, beta) grid (default: SweepGrid())
        n_paths: Paths per cell, at least 1
        seed: Master seed
        threads: Worker processes
        progress: Show a progress bar

    Returns:
        The SweepResult with the matrix of mean biases
    """
    grid = grid if grid is not None else SweepGrid()
    n_paths = check_n_paths(n_paths)
    tasks: List[Tuple[ModelConfig, SweepGrid, int, int]] = [
        (config, grid, int(seed), index) for index in range(n_paths)
    ]
    results = parallel_map(_sweep_path, tasks, threads=threads, progress=progress, desc="Sweeping thresholds")

    truths = [truth for truth, _, _ in results]
    kind = BiasKind.ABSOLUTE if any(truth == 0 for truth in truths) else BiasKind.RELATIVE
    rows, columns = grid.shape
    matrix = np.empty(grid.shape)
    for row in range(rows):
        for column in range(columns):
            matrix[row, column] = np.mean([bias(estimates[row, column], truth, kind)
                                           for truth, _, estimates in results])
    unthresholded = float(np.mean([bias(rc, truth, kind) for truth, rc, _ in results]))
    matrix.setflags(write=False)
    logger.info(f"Swept {rows}x{columns} thresholds on {n_paths} paths")
    return SweepResult(grid=grid, kind=kind, n_paths=n_paths, matrix=matrix, unthresholded_bias=unthresholded)
