"""
Comparison of the single co-jump estimators.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from cojump.core.threshold import ThresholdSpec
from cojump.enums import CojumpVariant, ModelKind
from cojump.exceptions import InvalidParameterError
from cojump.experiments.statistics import summarize
from cojump.experiments.types import CojumpVariantStudy, PathRecord
from cojump.simulate.config import ModelConfig

# Configure logger
logger = logging.getLogger("cojump.experiments.cojumps")


def variant_study_from_records(records: Sequence[PathRecord]) -> CojumpVariantStudy:
    """
    Pool the per-path variant errors; paths without a co-jump are excluded and counted.
    """
    included = [record for record in records if record.variant6_error is not None]
    summaries = {}
    mean_abs = {}
    for variant in CojumpVariant:
        errors = np.array([record.variant_error(variant) for record in included], dtype=np.float64)
        summaries[variant] = summarize(errors)
        mean_abs[variant] = float(np.mean(np.abs(errors))) if errors.size else None
    return CojumpVariantStudy(
        n_paths=len(records),
        n_excluded=len(records) - len(included),
        summaries=summaries,
        mean_abs_errors=mean_abs,
    )


def _produces_cojumps(config: ModelConfig) -> bool:
    if config.kind == ModelKind.MODEL1:
        return config.lambda1 > 0 and config.rho_j != 0
    return any(vg.theta != 0 or vg.varsigma != 0 for vg in (config.vg1, config.vg3)) and config.rho_j != 0


def cojump_variant_study(config: ModelConfig, spec: ThresholdSpec, n_paths: int, seed: int,
                         threads: Optional[int] = 1, progress: bool = False) -> CojumpVariantStudy:
    """
    Relative errors of the three single co-jump estimators over simulated paths.

    On each path the interval with the largest true |co-jump| is estimated
    with every variant; the truth is the sum of the fine-step cross products
    of the jump increments over that interval.

    Raises:
        InvalidParameterError: If the model cannot produce co-jumps
    """
    if not _produces_cojumps(config):
        raise InvalidParameterError(
            "model", config.kind.value,
            message="Co-jump study needs a model with co-jumps (lambda1 > 0 or active VG, and rho_j != 0)",
            component="experiments",
        )
    from cojump.experiments.monte_carlo import run_monte_carlo

    study = run_monte_carlo(config, spec, n_paths, seed, threads=threads, progress=progress).variants
    logger.info(f"Co-jump study: {study.n_paths - study.n_excluded} paths used, {study.n_excluded} excluded")
    return study
