"""
Jump classification study: how often the threshold indicator flags the right intervals.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from cojump.core.threshold import Threshold, threshold_value
from cojump.estimators.threshold import classify_jump_intervals
from cojump.exceptions import InvalidParameterError
from cojump.experiments.monte_carlo import check_n_paths
from cojump.experiments.pool import parallel_map
from cojump.experiments.types import ClassificationResult
from cojump.simulate.config import ModelConfig
from cojump.simulate.factory import build_paths
from cojump.simulate.types import RngSeed

# Configure logger
logger = logging.getLogger("cojump.experiments.classification")

# 5 minutes, 1 minute, 1 second
DEFAULT_STEPS_SECONDS = (300, 60, 1)


def _classify_path(task: Tuple[ModelConfig, Threshold, int, int, Tuple[int, ...]]) -> Dict[int, Tuple[int, int]]:
    config, spec, master, index, steps_seconds = task
    bundle = build_paths(config, RngSeed(master, index))
    counts = {}
    for seconds in steps_seconds:
        step = seconds // config.fine_step_seconds
        panel = bundle.panel(step)
        r_h = threshold_value(spec, panel.h)
        flagged = np.vstack([
            classify_jump_intervals(panel.returns1, r_h),
            classify_jump_intervals(panel.returns2, r_h),
        ])
        truth = bundle.jump_intervals(step)
        counts[seconds] = (int(np.count_nonzero(flagged != truth)), int(truth.size))
    return counts


def classification_study(config: ModelConfig, spec: Threshold, n_paths: int, seed: int,
                         steps_seconds: Sequence[int] = DEFAULT_STEPS_SECONDS,
                         threads: Optional[int] = 1, progress: bool = False) -> ClassificationResult:
    """
    Misclassification rate of the jump indicator (Delta X)^2 > r_h at several observation steps.

    The threshold is evaluated at each step's own mesh. The same paths are
    used for every step.

    Raises:
        InvalidParameterError: If a step is not a multiple of the fine step
    """
    n_paths = check_n_paths(n_paths)
    steps_seconds = tuple(int(s) for s in steps_seconds)
    for seconds in steps_seconds:
        if seconds <= 0 or seconds % config.fine_step_seconds != 0:
            raise InvalidParameterError("steps_seconds", seconds,
                                        message=f"Observation step {seconds}s is not a multiple of the fine step",
                                        component="experiments")
    tasks: List[Tuple[ModelConfig, Threshold, int, int, Tuple[int, ...]]] = [
        (config, spec, int(seed), index, steps_seconds) for index in range(n_paths)
    ]
    results = parallel_map(_classify_path, tasks, threads=threads, progress=progress, desc="Classifying jumps")

    misclassified = {s: sum(r[s][0] for r in results) for s in steps_seconds}
    intervals = {s: sum(r[s][1] for r in results) for s in steps_seconds}
    rates = {s: misclassified[s] / intervals[s] for s in steps_seconds}
    logger.info(f"Misclassification rates: {rates}")
    return ClassificationResult(n_paths=n_paths, rates=rates, misclassified=misclassified, intervals=intervals)
