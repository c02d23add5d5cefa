"""
Threshold statistics on synchronous panels.

An increment Delta is kept when Delta^2 <= r_h (ties are kept) and zeroed
otherwise; Delta_star below denotes the kept value. Sums go through
``math.fsum`` so that the exact identity

    threshold_ic + cojump_sum = realized_covariation

holds to rounding for any panel size.
"""

import logging
import math
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy import stats

from cojump.core.grid import SyncPanel
from cojump.core.threshold import Threshold, ThresholdLevel, threshold_levels, threshold_value
from cojump.enums import CojumpVariant
from cojump.estimators.types import (
    AvarEstimate,
    BetaRho,
    CojumpEstimates,
    CovariationEstimates,
    JointAvar,
)
from cojump.exceptions import DegenerateStatisticError, InsufficientDataError, InvalidParameterError

# Configure logger
logger = logging.getLogger("cojump.estimators.threshold")


def _window(panel: SyncPanel, upto: Optional[float]) -> SyncPanel:
    return panel if upto is None else panel.upto(upto)


def _mesh(panel: SyncPanel, h: Optional[float]) -> float:
    if h is None:
        return panel.h
    if not (math.isfinite(h) and h > 0):
        raise InvalidParameterError("h", h, message=f"Mesh h must be positive, got {h}", component="estimators")
    return float(h)


def _kept(returns: np.ndarray, r_h: float) -> np.ndarray:
    return returns * returns <= r_h


def _masks(panel: SyncPanel, r_h: ThresholdLevel) -> Tuple[np.ndarray, np.ndarray]:
    r1, r2 = threshold_levels(r_h)
    return _kept(panel.returns1, r1), _kept(panel.returns2, r2)


def _star(returns: np.ndarray, kept: np.ndarray) -> np.ndarray:
    return np.where(kept, returns, 0.0)


def realized_covariation(panel: SyncPanel, upto: Optional[float] = None) -> float:
    """
    Sum of cross products of the increments, sum_j Delta_j X1 Delta_j X2.

    Args:
        panel: The synchronous panel
        upto: Optional cutoff t, only intervals with t_j <= t are summed

    Returns:
        The realized covariation
    """
    panel = _window(panel, upto)
    return math.fsum(panel.returns1 * panel.returns2)


def threshold_ic(panel: SyncPanel, r_h: ThresholdLevel, upto: Optional[float] = None) -> float:
    """
    Threshold estimator of the integrated covariation.

    Sums Delta_j X1 Delta_j X2 over the intervals where both squared
    increments are at most r_h.

    Args:
        panel: The synchronous panel
        r_h: Threshold level, or a pair of levels (one per process)
        upto: Optional cutoff t

    Returns:
        IC_hat

    Raises:
        InvalidParameterError: If r_h is not positive
    """
    panel = _window(panel, upto)
    kept1, kept2 = _masks(panel, r_h)
    products = panel.returns1 * panel.returns2
    return math.fsum(np.where(kept1 & kept2, products, 0.0))


def threshold_iv(returns: Union[Sequence[float], np.ndarray], r_h: float) -> float:
    """
    Threshold estimator of the integrated variance of one process.

    Args:
        returns: Increments of the process
        r_h: Threshold level

    Returns:
        Sum of the squared increments not exceeding r_h; 0 for no returns

    Raises:
        InvalidParameterError: If r_h is not positive
    """
    level, _ = threshold_levels(r_h)
    returns = np.asarray(returns, dtype=np.float64)
    squares = returns * returns
    return math.fsum(np.where(squares <= level, squares, 0.0))


def threshold_cross_power(panel: SyncPanel, r: int, l: int, r_h: ThresholdLevel,
                          h: Optional[float] = None, upto: Optional[float] = None) -> float:
    """
    Threshold cross power variation h^{1-(r+l)/2} sum_j (Delta_j X1_star)^r (Delta_j X2_star)^l.

    Both indicators enter every term, whatever r and l. With r = l = 1 the
    statistic is IC_hat.

    Args:
        panel: The synchronous panel
        r: Power of the process 1 increments
        l: Power of the process 2 increments
        r_h: Threshold level, or a pair of levels
        h: Mesh used for the normalization (default: the panel mesh)
        upto: Optional cutoff t

    Raises:
        InvalidParameterError: If r = l = 0, a power is negative, or h is not positive
    """
    if r < 0 or l < 0 or (r == 0 and l == 0):
        raise InvalidParameterError("r,l", (r, l), message=f"Powers must be natural with r + l >= 1, got ({r}, {l})",
                                    component="estimators")
    h = _mesh(panel, h)
    panel = _window(panel, upto)
    kept = np.logical_and(*_masks(panel, r_h))
    terms = np.where(kept, panel.returns1 ** r * panel.returns2 ** l, 0.0)
    return h ** (1.0 - (r + l) / 2.0) * math.fsum(terms)


def threshold_adjacent_cross(panel: SyncPanel, r_h: ThresholdLevel, h: Optional[float] = None,
                             upto: Optional[float] = None) -> float:
    """
    Threshold adjacent cross statistic
    h^{-1} sum_j Delta_j X1_star Delta_{j+1} X1_star Delta_j X2_star Delta_{j+1} X2_star.

    Raises:
        InsufficientDataError: If the panel has fewer than two intervals
    """
    h = _mesh(panel, h)
    panel = _window(panel, upto)
    if panel.n < 2:
        raise InsufficientDataError(f"Adjacent cross statistic needs at least 2 intervals, got {panel.n}",
                                    component="estimators")
    kept1, kept2 = _masks(panel, r_h)
    x1 = _star(panel.returns1, kept1)
    x2 = _star(panel.returns2, kept2)
    terms = x1[:-1] * x1[1:] * x2[:-1] * x2[1:]
    return math.fsum(terms) / h


def avar_ic(panel: SyncPanel, r_h: ThresholdLevel, h: Optional[float] = None,
            upto: Optional[float] = None) -> AvarEstimate:
    """
    Estimate the asymptotic variance int (1 + rho^2) sigma1^2 sigma2^2 dt of IC_hat.

    Computed as v22 - w, clamped at 0; the clamp flag records whether
    clamping occurred.

    Raises:
        InsufficientDataError: If the panel has fewer than two intervals
    """
    v22 = threshold_cross_power(panel, 2, 2, r_h, h=h, upto=upto)
    w = threshold_adjacent_cross(panel, r_h, h=h, upto=upto)
    estimate = AvarEstimate.from_components(v22, w)
    if estimate.clamped:
        logger.warning(f"Asymptotic variance estimate clamped at 0 (v22={v22!r}, w={w!r})")
    return estimate


def avar_iv(returns: Union[Sequence[float], np.ndarray], r_h: float, h: float) -> float:
    """
    Estimate the asymptotic variance 2 int sigma^4 dt of IV_hat for one process.

    Uses the threshold quarticity (2/3) h^{-1} sum (Delta_j X)^4 1{(Delta_j X)^2 <= r_h}.
    """
    if not (math.isfinite(h) and h > 0):
        raise InvalidParameterError("h", h, message=f"Mesh h must be positive, got {h}", component="estimators")
    level, _ = threshold_levels(r_h)
    returns = np.asarray(returns, dtype=np.float64)
    squares = returns * returns
    return 2.0 / 3.0 * math.fsum(np.where(squares <= level, squares * squares, 0.0)) / h


def joint_avar(panel: SyncPanel, r_h: ThresholdLevel, h: Optional[float] = None,
               upto: Optional[float] = None) -> JointAvar:
    """
    Estimate the asymptotic covariance of the threshold estimators (IV1_hat, IC_hat, IV2_hat).

    Entries: Var(IV_q) from the threshold quarticity, Cov(IV1, IC) as
    (2/3) v31, Cov(IC, IV2) as (2/3) v13, Var(IC) as v22 - w and
    Cov(IV1, IV2) as 2 w.
    """
    h = _mesh(panel, h)
    panel = _window(panel, upto)
    r1, r2 = threshold_levels(r_h)
    avar_ic_value = avar_ic(panel, r_h, h=h).value
    w = threshold_adjacent_cross(panel, r_h, h=h)
    cov_iv1_ic = 2.0 / 3.0 * threshold_cross_power(panel, 3, 1, r_h, h=h)
    cov_ic_iv2 = 2.0 / 3.0 * threshold_cross_power(panel, 1, 3, r_h, h=h)
    matrix = np.array([
        [avar_iv(panel.returns1, r1, h), cov_iv1_ic, 2.0 * w],
        [cov_iv1_ic, avar_ic_value, cov_ic_iv2],
        [2.0 * w, cov_ic_iv2, avar_iv(panel.returns2, r2, h)],
    ])
    matrix.setflags(write=False)
    return JointAvar(matrix)


def standardized_ic_error(ic_hat: float, ic_true: float, avar_hat: float, h: float) -> float:
    """
    Normalized bias (IC_hat - IC) / (sqrt(h) sqrt(avar_hat)).

    Asymptotically standard normal under finite activity jumps.

    Raises:
        DegenerateStatisticError: If avar_hat is not positive
        InvalidParameterError: If h is not positive
    """
    if not (math.isfinite(h) and h > 0):
        raise InvalidParameterError("h", h, message=f"Mesh h must be positive, got {h}", component="estimators")
    if not (avar_hat > 0):
        raise DegenerateStatisticError(
            f"Standardized error undefined: variance estimate is {avar_hat!r}", component="estimators",
        )
    return (ic_hat - ic_true) / (math.sqrt(h) * math.sqrt(avar_hat))


def standardized_iv_error(iv_hat: float, iv_true: float, avar_hat: float, h: float) -> float:
    """Normalized error of IV_hat, (IV_hat - IV) / sqrt(h avar_hat)."""
    return standardized_ic_error(iv_hat, iv_true, avar_hat, h)


def ic_confidence_interval(ic_hat: float, avar_hat: float, h: float, level: float = 0.95) -> Tuple[float, float]:
    """
    Plug-in confidence interval IC_hat -/+ z sqrt(h avar_hat) for empirical data.

    Raises:
        DegenerateStatisticError: If avar_hat is not positive
        InvalidParameterError: If level is not in (0, 1)
    """
    if not 0.0 < level < 1.0:
        raise InvalidParameterError("level", level, component="estimators")
    if not (avar_hat > 0):
        raise DegenerateStatisticError(
            f"Confidence interval undefined: variance estimate is {avar_hat!r}", component="estimators",
        )
    half_width = float(stats.norm.ppf(0.5 + level / 2.0)) * math.sqrt(h * avar_hat)
    return ic_hat - half_width, ic_hat + half_width


def beta_rho(ic_hat: float, iv1_hat: float, iv2_hat: float) -> BetaRho:
    """
    Realized diffusion regression coefficients and correlation.

    beta12 = IC/IV2, beta21 = IC/IV1, rho = IC/sqrt(IV1 IV2); each is None
    when its denominator is 0. rho is kept inside [-1, 1] against rounding.
    """
    beta12 = ic_hat / iv2_hat if iv2_hat != 0 else None
    beta21 = ic_hat / iv1_hat if iv1_hat != 0 else None
    rho = None
    if iv1_hat * iv2_hat > 0:
        rho = max(-1.0, min(1.0, ic_hat / math.sqrt(iv1_hat * iv2_hat)))
    return BetaRho(beta12=beta12, beta21=beta21, rho=rho)


def beta_rho_standard_errors(ic_hat: float, iv1_hat: float, iv2_hat: float,
                             joint: JointAvar, h: float) -> BetaRho:
    """
    Delta-method standard errors of beta12, beta21 and rho.

    Each entry is None where the corresponding estimator is undefined.
    """
    def _se(gradient: np.ndarray) -> float:
        variance = float(gradient @ joint.matrix @ gradient)
        return math.sqrt(h * max(variance, 0.0))

    point = beta_rho(ic_hat, iv1_hat, iv2_hat)
    beta12 = beta21 = rho = None
    if point.beta12 is not None:
        beta12 = _se(np.array([0.0, 1.0 / iv2_hat, -ic_hat / iv2_hat ** 2]))
    if point.beta21 is not None:
        beta21 = _se(np.array([-ic_hat / iv1_hat ** 2, 1.0 / iv1_hat, 0.0]))
    if point.rho is not None:
        rho_value = ic_hat / math.sqrt(iv1_hat * iv2_hat)
        rho = _se(np.array([
            -rho_value / (2.0 * iv1_hat),
            1.0 / math.sqrt(iv1_hat * iv2_hat),
            -rho_value / (2.0 * iv2_hat),
        ]))
    return BetaRho(beta12=beta12, beta21=beta21, rho=rho)


def cojump_sum(panel: SyncPanel, r_h: ThresholdLevel, upto: Optional[float] = None) -> float:
    """
    Estimate the sum of co-jumps as realized_covariation - threshold_ic.

    Summed as the cross products of the intervals dropped by threshold_ic,
    which is the same quantity without cancellation.
    """
    panel = _window(panel, upto)
    kept1, kept2 = _masks(panel, r_h)
    products = panel.returns1 * panel.returns2
    return math.fsum(np.where(kept1 & kept2, 0.0, products))


def single_cojumps(panel: SyncPanel, r_h: ThresholdLevel,
                   variant: Union[CojumpVariant, int] = CojumpVariant.OVER_THRESHOLD,
                   upto: Optional[float] = None) -> CojumpEstimates:
    """
    Estimate the co-jump of every interval with the three single co-jump estimators.

    Args:
        panel: The synchronous panel
        r_h: Threshold level, or a pair of levels
        variant: Variant selected by ``CojumpEstimates.values`` (5, 6 or 7)
        upto: Optional cutoff t

    Raises:
        InvalidParameterError: If the variant is unknown
    """
    try:
        variant = CojumpVariant(variant)
    except ValueError as e:
        raise InvalidParameterError("variant", variant,
                                    message=f"Unknown co-jump variant {variant!r}, expected 5, 6 or 7",
                                    component="estimators", original_exception=e)
    panel = _window(panel, upto)
    kept1, kept2 = _masks(panel, r_h)
    products = panel.returns1 * panel.returns2
    return CojumpEstimates(
        index=np.arange(1, panel.n + 1),
        leave_out=np.where(kept1 & kept2, 0.0, products),
        over_threshold=np.where(~kept1 & ~kept2, products, 0.0),
        raw=products,
        flagged=~kept1 | ~kept2,
        variant=variant,
    )


def classify_jump_intervals(returns: Union[Sequence[float], np.ndarray], r_h: float) -> np.ndarray:
    """
    Flag the intervals where a jump is suspected, (Delta_j X)^2 > r_h.

    Returns:
        Boolean array, True where the increment exceeds the threshold
    """
    level, _ = threshold_levels(r_h)
    returns = np.asarray(returns, dtype=np.float64)
    return returns * returns > level


def estimate_covariation(panel: SyncPanel, threshold: Union[Threshold, ThresholdLevel],
                         threshold2: Optional[Threshold] = None,
                         upto: Optional[float] = None) -> CovariationEstimates:
    """
    Compute every statistic of one panel.

    Args:
        panel: The synchronous panel
        threshold: A threshold evaluated at the mesh of the (windowed) panel, or an explicit level
        threshold2: Optional separate threshold for process 2
        upto: Optional cutoff t

    Returns:
        The CovariationEstimates of the panel
    """
    window = _window(panel, upto)
    h = window.h
    if isinstance(threshold, (int, float, tuple)):
        r_h = threshold_levels(threshold)
    else:
        r1 = threshold_value(threshold, h)
        r2 = threshold_value(threshold2, h) if threshold2 is not None else r1
        r_h = (r1, r2)

    kept1, kept2 = _masks(window, r_h)
    ic_hat = threshold_ic(window, r_h)
    iv1_hat = threshold_iv(window.returns1, r_h[0])
    iv2_hat = threshold_iv(window.returns2, r_h[1])
    point = beta_rho(ic_hat, iv1_hat, iv2_hat)

    if window.n >= 2:
        joint = joint_avar(window, r_h, h=h)
        avar = avar_ic(window, r_h, h=h)
        errors = beta_rho_standard_errors(ic_hat, iv1_hat, iv2_hat, joint, h)
        avar_iv1, avar_iv2 = joint.var_iv1, joint.var_iv2
    else:
        avar = AvarEstimate(0.0, 0.0, False)
        errors = BetaRho(None, None, None)
        avar_iv1 = avar_iv2 = 0.0

    estimates = CovariationEstimates(
        ic_hat=ic_hat,
        iv1_hat=iv1_hat,
        iv2_hat=iv2_hat,
        qcov=realized_covariation(window),
        cojump_sum=cojump_sum(window, r_h),
        beta12_hat=point.beta12,
        beta21_hat=point.beta21,
        rho_hat=point.rho,
        avar_hat=avar.value,
        avar_clamped=avar.clamped,
        h=h,
        r_h=r_h,
        n=window.n,
        avar_iv1=avar_iv1,
        avar_iv2=avar_iv2,
        beta12_se=errors.beta12,
        beta21_se=errors.beta21,
        rho_se=errors.rho,
        truncated1=int((~kept1).sum()),
        truncated2=int((~kept2).sum()),
    )
    logger.debug(f"Estimated covariation on {window.n} intervals: ic_hat={ic_hat!r}, r_h={r_h}")
    return estimates
