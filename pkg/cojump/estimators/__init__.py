"""
Threshold estimators of integrated covariation, variances and co-jumps.
"""

from cojump.estimators.asynchronous import (
    hy_threshold_ic,
    hy_threshold_ic_bruteforce,
    hy_threshold_level,
    overlapping_pairs,
)
from cojump.estimators.threshold import (
    avar_ic,
    avar_iv,
    beta_rho,
    beta_rho_standard_errors,
    classify_jump_intervals,
    cojump_sum,
    estimate_covariation,
    ic_confidence_interval,
    joint_avar,
    realized_covariation,
    single_cojumps,
    standardized_ic_error,
    standardized_iv_error,
    threshold_adjacent_cross,
    threshold_cross_power,
    threshold_ic,
    threshold_iv,
)
from cojump.estimators.types import (
    AvarEstimate,
    BetaRho,
    CojumpEstimates,
    CovariationEstimates,
    JointAvar,
)

__all__ = [
    "realized_covariation",
    "threshold_ic",
    "threshold_iv",
    "threshold_cross_power",
    "threshold_adjacent_cross",
    "avar_ic",
    "avar_iv",
    "joint_avar",
    "standardized_ic_error",
    "standardized_iv_error",
    "ic_confidence_interval",
    "beta_rho",
    "beta_rho_standard_errors",
    "cojump_sum",
    "single_cojumps",
    "classify_jump_intervals",
    "estimate_covariation",
    "hy_threshold_ic",
    "hy_threshold_ic_bruteforce",
    "hy_threshold_level",
    "overlapping_pairs",
    "AvarEstimate",
    "BetaRho",
    "CojumpEstimates",
    "CovariationEstimates",
    "JointAvar",
]
