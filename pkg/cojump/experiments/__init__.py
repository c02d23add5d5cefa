"""
Monte Carlo experiments: bias studies, threshold sweeps, co-jump and classification studies.
"""

from cojump.experiments.classification import classification_study
from cojump.experiments.cojumps import cojump_variant_study, variant_study_from_records
from cojump.experiments.export import SCHEMA_VERSION, write_json
from cojump.experiments.monte_carlo import evaluate_bundle, run_monte_carlo, summarize_records
from cojump.experiments.statistics import bias, normalized_bias_stats, qq_points, summarize
from cojump.experiments.sweep import sweep_thresholds
from cojump.experiments.types import (
    BiasSummary,
    ClassificationResult,
    CojumpVariantStudy,
    DistributionSummary,
    NormalizedBiasStats,
    PathRecord,
    SweepGrid,
    SweepResult,
)

__all__ = [
    "classification_study",
    "cojump_variant_study",
    "variant_study_from_records",
    "SCHEMA_VERSION",
    "write_json",
    "evaluate_bundle",
    "run_monte_carlo",
    "summarize_records",
    "bias",
    "normalized_bias_stats",
    "qq_points",
    "summarize",
    "sweep_thresholds",
    "BiasSummary",
    "ClassificationResult",
    "CojumpVariantStudy",
    "DistributionSummary",
    "NormalizedBiasStats",
    "PathRecord",
    "SweepGrid",
    "SweepResult",
]
