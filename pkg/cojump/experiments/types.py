"""
Result types of the Monte Carlo experiments.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd

from cojump.core.threshold import ThresholdSpec, validate_threshold_spec
from cojump.enums import BiasKind, CojumpVariant
from cojump.exceptions import InvalidParameterError

DEFAULT_C_VALUES = tuple(round(0.1 + 0.5 * k, 10) for k in range(12))
DEFAULT_BETA_VALUES = tuple(round(0.05 * k, 10) for k in range(1, 19)) + (0.99,)

# Quantile levels exported for QQ comparisons against the standard normal
DEFAULT_QUANTILE_LEVELS = (0.01, 0.025, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.975, 0.99)


@dataclass(frozen=True)
class SweepGrid:
    """
    The (c, beta) pairs of a threshold sweep.

    Every pair is validated when the grid is built.
    """

    c_values: Tuple[float, ...] = DEFAULT_C_VALUES
    beta_values: Tuple[float, ...] = DEFAULT_BETA_VALUES

    def __post_init__(self):
        object.__setattr__(self, "c_values", tuple(float(c) for c in self.c_values))
        object.__setattr__(self, "beta_values", tuple(float(b) for b in self.beta_values))
        if not self.c_values or not self.beta_values:
            raise InvalidParameterError("grid", (self.c_values, self.beta_values),
                                        message="Sweep grid needs at least one c and one beta", component="experiments")
        for c in self.c_values:
            for beta in self.beta_values:
                validate_threshold_spec(c, beta)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.c_values), len(self.beta_values)

    def specs(self) -> Iterator[ThresholdSpec]:
        """Threshold specs in row-major (c, beta) order."""
        for c in self.c_values:
            for beta in self.beta_values:
                yield ThresholdSpec(c, beta)


@dataclass(frozen=True)
class PathRecord:
    """
    Estimates and truths of one simulated path.

    Co-jump variant errors refer to the observation interval with the
    largest true |co-jump| and are None when the path has no co-jump.
    """

    index: int
    ic_true: float
    iv1_true: float
    iv2_true: float
    cojump_true: float
    ic_hat: float = math.nan
    iv1_hat: float = math.nan
    iv2_hat: float = math.nan
    rc: float = math.nan
    cojump_hat: float = math.nan
    avar_hat: float = math.nan
    avar_clamped: bool = False
    normalized_bias: Optional[float] = None
    rho_hat: Optional[float] = None
    beta12_hat: Optional[float] = None
    beta21_hat: Optional[float] = None
    truncated_fraction: float = math.nan
    variant5_error: Optional[float] = None
    variant6_error: Optional[float] = None
    variant7_error: Optional[float] = None
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None

    def variant_error(self, variant: CojumpVariant) -> Optional[float]:
        return getattr(self, f"variant{int(variant)}_error")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class DistributionSummary:
    """Sample statistics of one per-path quantity."""

    count: int
    mean: float
    median: float
    std: float
    minimum: float
    maximum: float
    quantile_levels: Tuple[float, ...] = DEFAULT_QUANTILE_LEVELS
    quantiles: Tuple[float, ...] = ()

    @property
    def mean_abs(self) -> float:
        return abs(self.mean)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["quantile_levels"] = list(self.quantile_levels)
        data["quantiles"] = list(self.quantiles)
        return data


@dataclass(frozen=True)
class NormalizedBiasStats:
    """
    Mean, standard deviation and QQ pairs of normalized biases.

    ``degenerate`` is set when the sample has zero spread.
    """

    count: int
    mean: float
    std: float
    degenerate: bool
    quantile_levels: Tuple[float, ...]
    empirical_quantiles: Tuple[float, ...]
    normal_quantiles: Tuple[float, ...]

    @property
    def quantile_pairs(self) -> List[Tuple[float, float]]:
        """(empirical, standard normal) quantile pairs."""
        return list(zip(self.empirical_quantiles, self.normal_quantiles))

    def quantile_gap(self, level: float) -> float:
        """|empirical - normal| at one of the exported levels."""
        index = self.quantile_levels.index(level)
        return abs(self.empirical_quantiles[index] - self.normal_quantiles[index])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": self.count,
            "mean": self.mean,
            "std": self.std,
            "degenerate": self.degenerate,
            "quantile_levels": list(self.quantile_levels),
            "empirical_quantiles": list(self.empirical_quantiles),
            "normal_quantiles": list(self.normal_quantiles),
        }


@dataclass(frozen=True)
class CojumpVariantStudy:
    """
    Relative errors (in %) of the single co-jump estimators, one value per path.

    Paths without any co-jump are excluded and counted in ``n_excluded``.
    """

    n_paths: int
    n_excluded: int
    summaries: Dict[CojumpVariant, Optional[DistributionSummary]]
    mean_abs_errors: Dict[CojumpVariant, Optional[float]]

    def best_variant(self) -> Optional[CojumpVariant]:
        """The variant with the smallest mean |relative error|."""
        defined = {v: e for v, e in self.mean_abs_errors.items() if e is not None}
        if not defined:
            return None
        return min(defined, key=lambda v: (defined[v], int(v)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_paths": self.n_paths,
            "n_excluded": self.n_excluded,
            "variants": {
                str(int(v)): {
                    "mean_abs_error": self.mean_abs_errors[v],
                    "summary": s.to_dict() if s is not None else None,
                }
                for v, s in self.summaries.items()
            },
        }


@dataclass(frozen=True)
class BiasSummary:
    """
    Aggregated Monte Carlo results of one (model, threshold) pair.

    ``ic_bias`` holds 100 (IC_hat - IC) / IC per path, or IC_hat - IC when
    ``kind`` is absolute. ``unthresholded_bias`` is the same quantity for
    the plain realized covariation on the same paths and
    ``paired_difference`` their per-path difference.
    """

    kind: BiasKind
    n_paths: int
    n_failed: int
    records: Tuple[PathRecord, ...]
    ic_bias: Optional[DistributionSummary]
    unthresholded_bias: Optional[DistributionSummary]
    paired_difference: Optional[DistributionSummary]
    normalized_bias: Optional[DistributionSummary]
    n_normalized_undefined: int
    cojump_bias: Optional[DistributionSummary]
    variants: CojumpVariantStudy
    mean_truncated_fraction: float
    threshold: Tuple[float, float] = (math.nan, math.nan)
    h: float = math.nan
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def n_completed(self) -> int:
        return self.n_paths - self.n_failed

    def records_frame(self) -> pd.DataFrame:
        """Per-path records as a frame, one row per path in index order."""
        return pd.DataFrame([record.to_dict() for record in self.records])

    def to_dict(self) -> Dict[str, Any]:
        """Aggregates only; per-path records go to CSV."""
        def _maybe(summary: Optional[DistributionSummary]) -> Optional[Dict[str, Any]]:
            return summary.to_dict() if summary is not None else None

        return {
            "kind": self.kind.value,
            "n_paths": self.n_paths,
            "n_failed": self.n_failed,
            "n_completed": self.n_completed,
            "threshold": {"c": self.threshold[0], "beta": self.threshold[1]},
            "h": self.h,
            "ic_bias": _maybe(self.ic_bias),
            "unthresholded_bias": _maybe(self.unthresholded_bias),
            "paired_difference": _maybe(self.paired_difference),
            "normalized_bias": _maybe(self.normalized_bias),
            "n_normalized_undefined": self.n_normalized_undefined,
            "cojump_bias": _maybe(self.cojump_bias),
            "cojump_variants": self.variants.to_dict(),
            "mean_truncated_fraction": self.mean_truncated_fraction,
            **self.extra,
        }


@dataclass(frozen=True, eq=False)
class SweepResult:
    """
    Mean IC bias for every (c, beta) cell, rows indexed by c and columns by beta.
    """

    grid: SweepGrid
    kind: BiasKind
    n_paths: int
    matrix: np.ndarray
    unthresholded_bias: float

    def cell(self, c: float, beta: float) -> float:
        """Mean bias at one grid cell."""
        row = self.grid.c_values.index(float(c))
        column = self.grid.beta_values.index(float(beta))
        return float(self.matrix[row, column])

    def to_frame(self) -> pd.DataFrame:
        """Matrix as a frame with c as index and beta as columns."""
        frame = pd.DataFrame(self.matrix, index=list(self.grid.c_values), columns=list(self.grid.beta_values))
        frame.index.name = "c"
        return frame


@dataclass(frozen=True)
class ClassificationResult:
    """
    Misclassification rates of the jump indicator per observation step.

    A misclassified interval is flagged without a jump, or carries a jump
    without being flagged; rates are over the intervals of both processes.
    """

    n_paths: int
    rates: Dict[int, float]
    misclassified: Dict[int, int]
    intervals: Dict[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_paths": self.n_paths,
            "steps": {
                str(step): {
                    "rate": self.rates[step],
                    "misclassified": self.misclassified[step],
                    "intervals": self.intervals[step],
                }
                for step in sorted(self.rates)
            },
        }
