"""
Threshold Hayashi-Yoshida estimator for asynchronously observed processes.

Sums the cross products of the truncated increments of every pair of
observation intervals ]tau_{j-1}, tau_j] and ]nu_{i-1}, nu_i] that
overlap. On a common grid only the diagonal pairs overlap, so the estimator
coincides with ``threshold_ic``.
"""

import logging
import math
from typing import Iterator, Optional, Tuple

import numpy as np

from cojump.core.grid import TIME_TOLERANCE, AsyncPanel
from cojump.core.threshold import Threshold, ThresholdLevel, threshold_levels, threshold_value

# Configure logger
logger = logging.getLogger("cojump.estimators.asynchronous")


def _window(panel: AsyncPanel, upto: Optional[float]) -> AsyncPanel:
    if upto is None:
        return panel
    return panel.upto(upto)


def _truncated_increments(panel: AsyncPanel, r_h: ThresholdLevel) -> Tuple[np.ndarray, np.ndarray]:
    r1, r2 = threshold_levels(r_h)
    x1 = panel.path1.returns
    x2 = panel.path2.returns
    return np.where(x1 * x1 <= r1, x1, 0.0), np.where(x2 * x2 <= r2, x2, 0.0)


def _overlap(a: float, b: float, c: float, d: float) -> bool:
    return a < d - TIME_TOLERANCE and c < b - TIME_TOLERANCE


def overlapping_pairs(times1: np.ndarray, times2: np.ndarray) -> Iterator[Tuple[int, int]]:
    """
    Enumerate the overlapping interval pairs of two grids with a merge sweep.

    Intervals are left-open, so pairs that only share an endpoint do not
    overlap. Runs in O(m + k) and yields each pair (j, i) of 0-based
    interval indices once, ordered by j then i.
    """
    j, i = 0, 0
    m, k = times1.size - 1, times2.size - 1
    while j < m and i < k:
        a, b = times1[j], times1[j + 1]
        c, d = times2[i], times2[i + 1]
        if _overlap(a, b, c, d):
            yield j, i
        if b < d - TIME_TOLERANCE:
            j += 1
        elif d < b - TIME_TOLERANCE:
            i += 1
        else:
            j += 1
            i += 1


def hy_threshold_level(panel: AsyncPanel, threshold: Threshold) -> float:
    """Evaluate a threshold at the combined mesh of an asynchronous panel."""
    return threshold_value(threshold, panel.h)


def hy_threshold_ic(panel: AsyncPanel, r_h: ThresholdLevel, upto: Optional[float] = None) -> float:
    """
    Threshold Hayashi-Yoshida estimate of the integrated covariation.

    Args:
        panel: The two asynchronously observed paths
        r_h: Threshold level (see ``hy_threshold_level``), or a pair of levels
        upto: Optional cutoff t, only observations at times <= t are used

    Returns:
        sum over overlapping pairs of the truncated cross products
    """
    panel = _window(panel, upto)
    x1, x2 = _truncated_increments(panel, r_h)
    terms = [x1[j] * x2[i] for j, i in overlapping_pairs(panel.path1.grid.times, panel.path2.grid.times)]
    logger.debug(f"Hayashi-Yoshida sum over {len(terms)} overlapping pairs")
    return math.fsum(terms)


def hy_threshold_ic_bruteforce(panel: AsyncPanel, r_h: ThresholdLevel, upto: Optional[float] = None) -> float:
    """
    Reference O(m k) version of ``hy_threshold_ic`` checking every pair of intervals.
    """
    panel = _window(panel, upto)
    x1, x2 = _truncated_increments(panel, r_h)
    t1 = panel.path1.grid.times
    t2 = panel.path2.grid.times
    overlaps = (t1[:-1, None] < t2[None, 1:] - TIME_TOLERANCE) & (t2[None, :-1] < t1[1:, None] - TIME_TOLERANCE)
    products = x1[:, None] * x2[None, :]
    return math.fsum(products[overlaps])
