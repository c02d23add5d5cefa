"""
Summary statistics of per-path Monte Carlo quantities.
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy import stats

from cojump.enums import BiasKind
from cojump.exceptions import InsufficientDataError
from cojump.experiments.types import (
    DEFAULT_QUANTILE_LEVELS,
    BiasSummary,
    DistributionSummary,
    NormalizedBiasStats,
)

# Configure logger
logger = logging.getLogger("cojump.experiments.statistics")


def bias(estimate: float, truth: float, kind: BiasKind) -> float:
    """100 (estimate - truth) / truth for relative bias, estimate - truth otherwise."""
    if kind == BiasKind.RELATIVE:
        return 100.0 * (estimate - truth) / truth
    return estimate - truth


def summarize(values: Union[Sequence[float], np.ndarray],
              quantile_levels: Tuple[float, ...] = DEFAULT_QUANTILE_LEVELS) -> Optional[DistributionSummary]:
    """
    Summarize a sample; None for an empty sample.

    The standard deviation uses ddof = 1 (0 for a single value).
    """
    sample = np.asarray(values, dtype=np.float64)
    if sample.size == 0:
        return None
    return DistributionSummary(
        count=int(sample.size),
        mean=float(np.mean(sample)),
        median=float(np.median(sample)),
        std=float(np.std(sample, ddof=1)) if sample.size > 1 else 0.0,
        minimum=float(np.min(sample)),
        maximum=float(np.max(sample)),
        quantile_levels=tuple(quantile_levels),
        quantiles=tuple(float(q) for q in np.quantile(sample, quantile_levels)),
    )


def normalized_bias_stats(source: Union[BiasSummary, Sequence[Optional[float]], np.ndarray],
                          quantile_levels: Tuple[float, ...] = DEFAULT_QUANTILE_LEVELS) -> NormalizedBiasStats:
    """
    Mean, standard deviation and QQ pairs of normalized biases.

    Args:
        source: A BiasSummary, or normalized biases where None marks an undefined value
        quantile_levels: Probability levels of the exported quantile pairs

    Returns:
        NormalizedBiasStats; ``degenerate`` is set when the std is 0

    Raises:
        InsufficientDataError: If fewer than two values are defined
    """
    if isinstance(source, BiasSummary):
        values = [record.normalized_bias for record in source.records if not record.failed]
    else:
        values = list(source)
    sample = np.array([v for v in values if v is not None and np.isfinite(v)], dtype=np.float64)
    if sample.size < 2:
        raise InsufficientDataError(
            f"Normalized bias statistics need at least 2 defined values, got {sample.size}",
            component="experiments",
        )

    std = float(np.std(sample, ddof=1))
    if std == 0:
        logger.warning("Normalized bias sample has zero spread")
    return NormalizedBiasStats(
        count=int(sample.size),
        mean=float(np.mean(sample)),
        std=std,
        degenerate=std == 0,
        quantile_levels=tuple(quantile_levels),
        empirical_quantiles=tuple(float(q) for q in np.quantile(sample, quantile_levels)),
        normal_quantiles=tuple(float(q) for q in stats.norm.ppf(quantile_levels)),
    )


def qq_points(values: Union[Sequence[float], np.ndarray]) -> Tuple[np.ndarray, np.ndarray]:
    """
    Full QQ plot data against the standard normal.

    Returns:
        (theoretical quantiles, ordered sample)
    """
    sample = np.asarray(values, dtype=np.float64)
    if sample.size == 0:
        raise InsufficientDataError("QQ points need a non empty sample", component="experiments")
    theoretical, ordered = stats.probplot(sample, dist="norm", fit=False)
    return np.asarray(theoretical), np.asarray(ordered)
