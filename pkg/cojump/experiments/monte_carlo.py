"""
Monte Carlo driver: simulate paths, estimate on the coarse panel, compare to truths.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from cojump.core.threshold import ThresholdSpec
from cojump.enums import BiasKind, CojumpVariant
from cojump.estimators.threshold import estimate_covariation, single_cojumps, standardized_ic_error
from cojump.exceptions import CojumpError, InvalidParameterError
from cojump.experiments.cojumps import variant_study_from_records
from cojump.experiments.pool import parallel_map
from cojump.experiments.statistics import bias, summarize
from cojump.experiments.types import BiasSummary, PathRecord
from cojump.simulate.config import ModelConfig
from cojump.simulate.factory import build_paths
from cojump.simulate.types import PathBundle, RngSeed

# Configure logger
logger = logging.getLogger("cojump.experiments.monte_carlo")


def check_n_paths(n_paths: int) -> int:
    if int(n_paths) < 1:
        raise InvalidParameterError("n_paths", n_paths, message=f"n_paths must be >= 1, got {n_paths}",
                                    component="experiments")
    return int(n_paths)


def evaluate_bundle(bundle: PathBundle, spec: ThresholdSpec, step: Optional[int] = None) -> PathRecord:
    """
    Estimate on the coarse panel of a bundle and record the results next to its truths.

    Args:
        bundle: The simulated path
        spec: The threshold
        step: Fine steps per observation (default: the bundle's coarse step)
    """
    panel = bundle.panel(step)
    estimates = estimate_covariation(panel, spec)
    truths = bundle.truths

    normalized = None
    if estimates.avar_hat > 0:
        normalized = standardized_ic_error(estimates.ic_hat, truths.ic, estimates.avar_hat, estimates.h)

    variant_errors = {variant: None for variant in CojumpVariant}
    interval_truths = bundle.interval_cojumps(step)
    largest = int(np.argmax(np.abs(interval_truths)))
    truth = float(interval_truths[largest])
    if truth != 0:
        cojumps = single_cojumps(panel, estimates.r_h)
        for variant in CojumpVariant:
            estimate = float(cojumps.estimates(variant)[largest])
            variant_errors[variant] = 100.0 * (estimate - truth) / truth

    return PathRecord(
        index=bundle.seed.path_index,
        ic_true=truths.ic,
        iv1_true=truths.iv1,
        iv2_true=truths.iv2,
        cojump_true=truths.cojump,
        ic_hat=estimates.ic_hat,
        iv1_hat=estimates.iv1_hat,
        iv2_hat=estimates.iv2_hat,
        rc=estimates.qcov,
        cojump_hat=estimates.cojump_sum,
        avar_hat=estimates.avar_hat,
        avar_clamped=estimates.avar_clamped,
        normalized_bias=normalized,
        rho_hat=estimates.rho_hat,
        beta12_hat=estimates.beta12_hat,
        beta21_hat=estimates.beta21_hat,
        truncated_fraction=estimates.truncated_fraction,
        variant5_error=variant_errors[CojumpVariant.LEAVE_OUT],
        variant6_error=variant_errors[CojumpVariant.OVER_THRESHOLD],
        variant7_error=variant_errors[CojumpVariant.RAW],
    )


def _simulate_record(task: Tuple[ModelConfig, ThresholdSpec, int, int, Optional[int]]) -> PathRecord:
    config, spec, master, index, step = task
    try:
        bundle = build_paths(config, RngSeed(master, index))
    except CojumpError as e:
        logger.warning(f"Path {index} failed to simulate: {e}")
        return PathRecord(index=index, ic_true=math.nan, iv1_true=math.nan, iv2_true=math.nan,
                          cojump_true=math.nan, error=str(e))
    try:
        return evaluate_bundle(bundle, spec, step)
    except CojumpError as e:
        logger.warning(f"Path {index} failed to estimate: {e}")
        truths = bundle.truths
        return PathRecord(index=index, ic_true=truths.ic, iv1_true=truths.iv1, iv2_true=truths.iv2,
                          cojump_true=truths.cojump, error=str(e))


def summarize_records(records: Sequence[PathRecord], spec: Optional[ThresholdSpec] = None,
                      h: float = math.nan) -> BiasSummary:
    """
    Aggregate per-path records, sorted by path index.

    The bias is relative unless some completed path has a zero true IC, in
    which case every path reports absolute bias.
    """
    records = tuple(sorted(records, key=lambda record: record.index))
    completed = [record for record in records if not record.failed]
    kind = BiasKind.ABSOLUTE if any(record.ic_true == 0 for record in completed) else BiasKind.RELATIVE

    ic_bias = [bias(record.ic_hat, record.ic_true, kind) for record in completed]
    rc_bias = [bias(record.rc, record.ic_true, kind) for record in completed]
    normalized = [record.normalized_bias for record in completed if record.normalized_bias is not None]
    cojump_bias = [
        100.0 * (record.cojump_hat - record.cojump_true) / record.cojump_true
        for record in completed if record.cojump_true != 0
    ]
    fractions = [record.truncated_fraction for record in completed]

    summary = BiasSummary(
        kind=kind,
        n_paths=len(records),
        n_failed=len(records) - len(completed),
        records=records,
        ic_bias=summarize(ic_bias),
        unthresholded_bias=summarize(rc_bias),
        paired_difference=summarize(np.subtract(ic_bias, rc_bias)),
        normalized_bias=summarize(normalized),
        n_normalized_undefined=len(completed) - len(normalized),
        cojump_bias=summarize(cojump_bias),
        variants=variant_study_from_records(completed),
        mean_truncated_fraction=float(np.mean(fractions)) if fractions else math.nan,
        threshold=(spec.c, spec.beta) if spec is not None else (math.nan, math.nan),
        h=h,
    )
    if summary.n_failed:
        logger.warning(f"{summary.n_failed} of {summary.n_paths} paths failed")
    return summary


def run_monte_carlo(config: ModelConfig, spec: ThresholdSpec, n_paths: int, seed: int,
                    threads: Optional[int] = 1, progress: bool = False,
                    step: Optional[int] = None) -> BiasSummary:
    """
    Simulate ``n_paths`` paths and aggregate the estimation errors.

    Path i uses the stream RngSeed(seed, i), so the summary depends only on
    the inputs, never on ``threads``.

    Args:
        config: The model configuration
        spec: The threshold r_h = c h^beta
        n_paths: Number of paths, at least 1
        seed: Master seed
        threads: Worker processes
        progress: Show a progress bar
        step: Fine steps per observation (default: the configured coarse step)

    Returns:
        The BiasSummary, per-path failures included in ``n_failed``
    """
    n_paths = check_n_paths(n_paths)
    tasks: List[Tuple[ModelConfig, ThresholdSpec, int, int, Optional[int]]] = [
        (config, spec, int(seed), index, step) for index in range(n_paths)
    ]
    records = parallel_map(_simulate_record, tasks, threads=threads, progress=progress)
    fine_steps = step if step is not None else config.coarse_step_seconds // config.fine_step_seconds
    h = fine_steps * config.fine_dt
    summary = summarize_records(records, spec, h)
    logger.info(
        f"Monte Carlo {config.kind.value}: {summary.n_completed}/{n_paths} paths, "
        f"mean {summary.kind.value} bias {summary.ic_bias.mean if summary.ic_bias else math.nan:.4g}"
    )
    return summary
