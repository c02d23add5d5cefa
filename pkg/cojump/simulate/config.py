"""
Validated configurations of the simulation models.

Time is measured in days; jump intensities are per day and volatilities are
per square root of a day. The jump defaults are documented, non
authoritative choices and can be overridden from a config file.
"""

import math
from typing import Any, Dict, Literal, Mapping, Type, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from cojump.enums import ModelKind
from cojump.exceptions import ConfigValidationError

# Daily volatility level: with the default log-vol dispersion the central 95%
# of sigma falls inside [0.013, 0.019]
DEFAULT_VOL_LEVEL = 0.0157

SECONDS_PER_DAY = 25200  # 7 hour trading day


class StochasticVolatility(BaseModel):
    """
    Exponential Ornstein-Uhlenbeck volatility sigma_t = level * exp(vol_of_vol * v_t),
    dv_t = -mean_reversion * v_t dt + dB_t, started from its stationary law.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    level: float = Field(DEFAULT_VOL_LEVEL, gt=0, description="Volatility level (geometric mean of sigma)")
    mean_reversion: float = Field(5.0, gt=0, description="Mean reversion speed of v, per day")
    vol_of_vol: float = Field(0.3, ge=0, description="Loading of v on log sigma")

    @property
    def stationary_log_std(self) -> float:
        """Standard deviation of log sigma under the stationary law."""
        return self.vol_of_vol / math.sqrt(2.0 * self.mean_reversion)


class JumpSizeDistribution(BaseModel):
    """
    Gaussian jump sizes N(mean, std^2), with an optional fair random sign.

    The law may not put mass on 0, so std = 0 together with mean = 0 is rejected.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    mean: float = Field(0.08, description="Mean of the Gaussian size, in return units")
    std: float = Field(0.008, ge=0, description="Standard deviation of the Gaussian size")
    symmetric: bool = Field(True, description="Multiply every size by an independent random sign")

    @model_validator(mode="after")
    def _no_atom_at_zero(self) -> "JumpSizeDistribution":
        if self.std == 0 and self.mean == 0:
            raise ValueError("jump size law has an atom at 0 (mean = 0 and std = 0)")
        return self


class VarianceGammaParams(BaseModel):
    """
    Variance Gamma process theta G_t + varsigma B_{G_t}, G a gamma process with
    E[G_t] = t and Var[G_t] = kappa t.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kappa: float = Field(0.125, gt=0, description="Variance rate of the gamma subordinator")
    theta: float = Field(-0.02, description="Drift of the subordinated Brownian motion")
    varsigma: float = Field(0.6, ge=0, description="Volatility of the subordinated Brownian motion")


class SamplingConfig(BaseModel):
    """Horizon and sampling steps shared by both models."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    horizon_days: float = Field(1.0, gt=0, description="Simulated horizon T in days")
    seconds_per_day: int = Field(SECONDS_PER_DAY, gt=0, description="Length of a day in seconds")
    fine_step_seconds: int = Field(1, gt=0, description="Euler step in seconds")
    coarse_step_seconds: int = Field(300, gt=0, description="Observation step of the panels in seconds")

    @model_validator(mode="after")
    def _steps_nest(self) -> "SamplingConfig":
        if self.coarse_step_seconds % self.fine_step_seconds != 0:
            raise ValueError(
                f"fine step ({self.fine_step_seconds}s) must divide the coarse step ({self.coarse_step_seconds}s)"
            )
        total = self.horizon_days * self.seconds_per_day
        if abs(total - round(total)) > 1e-9 or round(total) % self.coarse_step_seconds != 0:
            raise ValueError(
                f"coarse step ({self.coarse_step_seconds}s) must divide the horizon ({total}s)"
            )
        return self

    @property
    def total_seconds(self) -> int:
        return int(round(self.horizon_days * self.seconds_per_day))

    @property
    def n_fine(self) -> int:
        """Number of Euler steps."""
        return self.total_seconds // self.fine_step_seconds

    @property
    def n_coarse(self) -> int:
        """Number of coarse observation intervals."""
        return self.total_seconds // self.coarse_step_seconds

    @property
    def fine_dt(self) -> float:
        """Euler step in days."""
        return self.fine_step_seconds / self.seconds_per_day

    @property
    def coarse_h(self) -> float:
        """Coarse mesh h in days."""
        return self.coarse_step_seconds / self.seconds_per_day


class Model1Config(SamplingConfig):
    """
    Stochastic volatility diffusions plus finite activity compound Poisson jumps.

    J2 = rho_j J1 + sqrt(1 - rho_j^2) J3 with J1, J3 independent compound
    Poisson processes of intensities lambda1, lambda3.

    With the default sizes both legs of a co-jump (about 0.08 and 0.064) stay
    clear of the 5 minute threshold level sqrt(0.1 h^0.99), close to 0.035.
    """

    kind: Literal[ModelKind.MODEL1] = ModelKind.MODEL1
    drift: float = Field(0.0, description="Drift a, per day")
    rho: float = Field(0.5, ge=-1, le=1, description="Correlation of the Brownian drivers")
    sv1: StochasticVolatility = Field(default_factory=StochasticVolatility)
    sv2: StochasticVolatility = Field(default_factory=StochasticVolatility)
    lambda1: float = Field(0.118, ge=0, allow_inf_nan=False, description="Intensity of J1, per day")
    lambda3: float = Field(0.118, ge=0, allow_inf_nan=False, description="Intensity of J3, per day")
    jump_size: JumpSizeDistribution = Field(default_factory=JumpSizeDistribution)
    rho_j: float = Field(0.8, ge=-1, le=1, description="Correlation used to build J2")


class Model2Config(SamplingConfig):
    """
    Constant volatility diffusions plus infinite activity Variance Gamma jumps.

    The VG defaults put the process in a heavy jump regime: in Levy measure
    terms C = 1/kappa = 8 per day and tail scales 1/G, 1/M close to 0.15, so a
    few large jumps carry most of the daily jump variation.
    """

    kind: Literal[ModelKind.MODEL2] = ModelKind.MODEL2
    drift: float = Field(0.0, description="Drift a, per day")
    rho: float = Field(0.5, ge=-1, le=1, description="Correlation of the Brownian drivers")
    sigma1: float = Field(DEFAULT_VOL_LEVEL, gt=0, description="Volatility of process 1")
    sigma2: float = Field(DEFAULT_VOL_LEVEL, gt=0, description="Volatility of process 2")
    vg1: VarianceGammaParams = Field(default_factory=VarianceGammaParams)
    vg3: VarianceGammaParams = Field(default_factory=VarianceGammaParams)
    rho_j: float = Field(0.8, ge=-1, le=1, description="Correlation used to build J2")


ModelConfig = Union[Model1Config, Model2Config]

_CONFIG_CLASSES: Dict[ModelKind, Type[SamplingConfig]] = {
    ModelKind.MODEL1: Model1Config,
    ModelKind.MODEL2: Model2Config,
}


def validation_fields(error: ValidationError) -> Dict[str, str]:
    """Map every offending field of a pydantic error to its message."""
    fields = {}
    for item in error.errors():
        name = ".".join(str(part) for part in item["loc"]) or "__root__"
        fields[name] = item["msg"]
    return fields


def load_model_config(data: Mapping[str, Any]) -> ModelConfig:
    """
    Build a validated model configuration from nested data.

    Args:
        data: Field values; ``kind`` selects the model (default model1)

    Returns:
        The Model1Config or Model2Config

    Raises:
        ConfigValidationError: Listing every invalid field in ``details["fields"]``
    """
    data = dict(data)
    kind = data.get("kind", ModelKind.MODEL1)
    try:
        kind = ModelKind(kind)
    except ValueError as e:
        raise ConfigValidationError(
            f"Unknown model '{kind}'. Available models: {', '.join(m.value for m in ModelKind)}",
            component="simulate", original_exception=e, details={"fields": {"kind": "unknown model"}},
        )
    data["kind"] = kind
    try:
        return _CONFIG_CLASSES[kind].model_validate(data)
    except ValidationError as e:
        fields = validation_fields(e)
        summary = "; ".join(f"{name}: {message}" for name, message in fields.items())
        raise ConfigValidationError(
            f"Invalid {kind.value} configuration: {summary}",
            component="simulate", original_exception=e, details={"fields": fields},
        )
