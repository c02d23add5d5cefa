"""
Threshold functions r_h used to separate jumps from diffusive increments.

An increment is kept by the threshold estimators when its square does not
exceed r_h. Admissible thresholds have r_h -> 0 and h log(1/h) / r_h -> 0 as h -> 0; within
the power family r_h = c h^beta this is c > 0 and 0 < beta < 1.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

from cojump.exceptions import InvalidParameterError, ThresholdAdmissibilityError

# Configure logger
logger = logging.getLogger("cojump.core.threshold")


@dataclass(frozen=True)
class ThresholdSpec:
    """
    The power threshold r_h = c h^beta.

    Attributes:
        c: Positive scale constant
        beta: Power, strictly inside (0, 1)
    """

    c: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c > 0):
            raise ThresholdAdmissibilityError(
                "c", self.c, message=f"Threshold constant c must be positive, got {self.c}",
                component="core",
            )
        if not (math.isfinite(self.beta) and 0.0 < self.beta < 1.0):
            raise ThresholdAdmissibilityError(
                "beta", self.beta,
                message=(
                    f"Threshold power beta must lie strictly inside (0, 1), got {self.beta}: "
                    "admissible thresholds need r_h -> 0 and h log(1/h) / r_h -> 0"
                ),
                component="core",
            )

    def __call__(self, h: float) -> float:
        return threshold_value(self, h)


@dataclass(frozen=True)
class ThresholdFunction:
    """
    A user supplied threshold h -> r_h.

    Only positivity of the returned value is checked; admissibility is the caller's
    responsibility.
    """

    function: Callable[[float], float]
    name: str = "custom"

    def __call__(self, h: float) -> float:
        return threshold_value(self, h)


Threshold = Union[ThresholdSpec, ThresholdFunction]

# One r_h for both processes, or one per process
ThresholdLevel = Union[float, Tuple[float, float]]


def validate_threshold_spec(c: float, beta: float) -> ThresholdSpec:
    """
    Build a power threshold after checking admissibility.

    Args:
        c: Scale constant, must be positive
        beta: Power, must lie strictly inside (0, 1)

    Returns:
        The validated ThresholdSpec

    Raises:
        ThresholdAdmissibilityError: If c <= 0 or beta is outside (0, 1)
    """
    return ThresholdSpec(float(c), float(beta))


def threshold_value(spec: Threshold, h: float) -> float:
    """
    Evaluate r_h.

    Args:
        spec: A power threshold or a custom threshold function
        h: The mesh, must be positive

    Returns:
        The positive threshold level r_h

    Raises:
        InvalidParameterError: If h <= 0 or a custom function returns a nonpositive value
    """
    if not (math.isfinite(h) and h > 0):
        raise InvalidParameterError("h", h, message=f"Mesh h must be positive, got {h}", component="core")
    if isinstance(spec, ThresholdSpec):
        return spec.c * h ** spec.beta
    value = float(spec.function(h))
    if not (value > 0):
        raise InvalidParameterError(
            "r_h", value, message=f"Threshold function '{spec.name}' returned nonpositive r_h={value} at h={h}",
            component="core",
        )
    return value


def threshold_levels(level: ThresholdLevel) -> Tuple[float, float]:
    """
    Expand a threshold level into one r_h per process.

    Raises:
        InvalidParameterError: If any level is not positive
    """
    if isinstance(level, tuple):
        r1, r2 = float(level[0]), float(level[1])
    else:
        r1 = r2 = float(level)
    for name, value in (("r_h", r1), ("r_h2", r2)):
        if not (value > 0):
            raise InvalidParameterError(name, value, message=f"Threshold level must be positive, got {value}",
                                        component="estimators")
    return r1, r2


def admissibility_ratios(spec: Threshold, h: float) -> Tuple[float, float]:
    """
    Return (r_h, h log(1/h) / r_h), the two quantities that must vanish as h -> 0.

    Useful to check numerically that a threshold behaves on a sequence of
    shrinking meshes.
    """
    r = threshold_value(spec, h)
    return r, h * math.log(1.0 / h) / r
