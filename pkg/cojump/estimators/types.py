"""
Result types of the threshold estimators.
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from cojump.enums import CojumpVariant


@dataclass(frozen=True)
class AvarEstimate:
    """
    Estimate of the asymptotic variance of h^{-1/2}(IC_hat - IC).

    Attributes:
        value: max(v22 - w, 0)
        raw: v22 - w before clamping
        clamped: True when the raw value was negative and got set to 0
    """

    value: float
    raw: float
    clamped: bool

    @classmethod
    def from_components(cls, v22: float, w: float) -> "AvarEstimate":
        """Combine the cross-power and adjacent-cross statistics."""
        raw = v22 - w
        return cls(value=max(raw, 0.0), raw=raw, clamped=raw < 0.0)

    @property
    def degenerate(self) -> bool:
        """True when the estimate cannot standardize an error."""
        return self.value <= 0.0


@dataclass(frozen=True)
class BetaRho:
    """Realized diffusion regression coefficients and correlation; None when undefined."""

    beta12: Optional[float]
    beta21: Optional[float]
    rho: Optional[float]


@dataclass(frozen=True, eq=False)
class JointAvar:
    """
    Estimated asymptotic covariance of h^{-1/2}(IV1_hat - IV1, IC_hat - IC, IV2_hat - IV2).

    Attributes:
        matrix: 3 x 3 symmetric matrix, order (IV1, IC, IV2)
    """

    matrix: np.ndarray

    @property
    def var_iv1(self) -> float:
        return float(self.matrix[0, 0])

    @property
    def var_ic(self) -> float:
        return float(self.matrix[1, 1])

    @property
    def var_iv2(self) -> float:
        return float(self.matrix[2, 2])


@dataclass(frozen=True)
class CovariationEstimates:
    """
    All statistics computed from one synchronous panel.

    ``ic_hat + cojump_sum`` equals ``qcov`` up to floating rounding, and
    ``|ic_hat| <= sqrt(iv1_hat * iv2_hat)``.
    """

    ic_hat: float
    iv1_hat: float
    iv2_hat: float
    qcov: float
    cojump_sum: float
    beta12_hat: Optional[float]
    beta21_hat: Optional[float]
    rho_hat: Optional[float]
    avar_hat: float
    avar_clamped: bool
    h: float
    r_h: Tuple[float, float]
    n: int
    avar_iv1: float = 0.0
    avar_iv2: float = 0.0
    beta12_se: Optional[float] = None
    beta21_se: Optional[float] = None
    rho_se: Optional[float] = None
    truncated1: int = 0
    truncated2: int = 0

    @property
    def truncated_fraction(self) -> float:
        """Fraction of increments, over both processes, whose square exceeds r_h."""
        if self.n == 0:
            return 0.0
        return (self.truncated1 + self.truncated2) / (2.0 * self.n)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON friendly dictionary."""
        data = asdict(self)
        data["r_h"] = list(self.r_h)
        return data


@dataclass(frozen=True, eq=False)
class CojumpEstimates:
    """
    Per-interval estimates of the co-jump Delta J1 Delta J2 over ]t_{j-1}, t_j].

    Attributes:
        index: Interval numbers j (1-based)
        leave_out: Full cross product minus the doubly truncated one
        over_threshold: Product of the over-threshold factors only
        raw: Plain cross products
        flagged: True where either increment exceeds its threshold
        variant: The variant returned by ``values``
    """

    index: np.ndarray
    leave_out: np.ndarray
    over_threshold: np.ndarray
    raw: np.ndarray
    flagged: np.ndarray
    variant: CojumpVariant = CojumpVariant.OVER_THRESHOLD

    def estimates(self, variant: CojumpVariant) -> np.ndarray:
        """Return the per-interval estimates of one variant."""
        return {
            CojumpVariant.LEAVE_OUT: self.leave_out,
            CojumpVariant.OVER_THRESHOLD: self.over_threshold,
            CojumpVariant.RAW: self.raw,
        }[CojumpVariant(variant)]

    @property
    def values(self) -> np.ndarray:
        """Estimates of the selected variant."""
        return self.estimates(self.variant)

    def __len__(self) -> int:
        return int(self.index.size)
