"""
Data model: time grids, sampled paths, observation panels and thresholds.
"""

from cojump.core.grid import (
    TIME_TOLERANCE,
    AsyncPanel,
    SampledPath,
    SyncPanel,
    TimeGrid,
    first_mismatch,
    resample,
)
from cojump.core.threshold import (
    Threshold,
    ThresholdFunction,
    ThresholdLevel,
    ThresholdSpec,
    admissibility_ratios,
    threshold_levels,
    threshold_value,
    validate_threshold_spec,
)
from cojump.core.tabular import TabularPath, read_async_panel, read_path, write_path

__all__ = [
    "TIME_TOLERANCE",
    "TimeGrid",
    "SampledPath",
    "SyncPanel",
    "AsyncPanel",
    "first_mismatch",
    "resample",
    "Threshold",
    "ThresholdFunction",
    "ThresholdLevel",
    "ThresholdSpec",
    "admissibility_ratios",
    "threshold_levels",
    "threshold_value",
    "validate_threshold_spec",
    "TabularPath",
    "read_path",
    "read_async_panel",
    "write_path",
]
