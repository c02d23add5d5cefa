"""
Enums for cojump.
"""

from enum import Enum


class SimulationParameter(str, Enum):
    """Parameters that can be set in a configuration file or on the command line."""
    # Model selection and sampling
    MODEL = "model"  # model1 (SV + compound Poisson) or model2 (constant vol + VG)
    HORIZON_DAYS = "horizon_days"  # Number of simulated days (time unit = 1 day)
    SECONDS_PER_DAY = "seconds_per_day"  # Length of a trading day in seconds
    FINE_STEP_SECONDS = "fine_step_seconds"  # Euler step
    COARSE_STEP_SECONDS = "coarse_step_seconds"  # Observation step of the panels

    # Diffusion part
    DRIFT = "drift"  # Drift a, per day
    RHO = "rho"  # Correlation of the Brownian drivers
    SIGMA1 = "sigma1"  # Constant volatility of process 1 (model2)
    SIGMA2 = "sigma2"  # Constant volatility of process 2 (model2)

    # Stochastic volatility (model1), one set per process
    SV_LEVEL1 = "sv_level1"
    SV_MEAN_REVERSION1 = "sv_mean_reversion1"
    SV_VOL_OF_VOL1 = "sv_vol_of_vol1"
    SV_LEVEL2 = "sv_level2"
    SV_MEAN_REVERSION2 = "sv_mean_reversion2"
    SV_VOL_OF_VOL2 = "sv_vol_of_vol2"

    # Jump part
    RHO_J = "rho_j"  # Correlation used to build J2 from J1 and J3
    LAMBDA1 = "lambda1"  # Intensity of J1 (model1)
    LAMBDA3 = "lambda3"  # Intensity of J3 (model1)
    JUMP_MEAN = "jump_mean"
    JUMP_STD = "jump_std"
    JUMP_SYMMETRIC = "jump_symmetric"  # Random sign on N(mean, std^2) sizes
    VG_KAPPA1 = "vg_kappa1"
    VG_THETA1 = "vg_theta1"
    VG_VARSIGMA1 = "vg_varsigma1"
    VG_KAPPA3 = "vg_kappa3"
    VG_THETA3 = "vg_theta3"
    VG_VARSIGMA3 = "vg_varsigma3"

    # Estimation and experiment
    C = "c"  # Threshold constant in r_h = c h^beta
    BETA = "beta"  # Threshold power in r_h = c h^beta
    N_PATHS = "n_paths"
    SEED = "seed"
    THREADS = "threads"


class ModelKind(str, Enum):
    """Simulation models available in cojump."""
    MODEL1 = "model1"  # Stochastic volatility + finite activity compound Poisson jumps
    MODEL2 = "model2"  # Constant volatility + infinite activity Variance Gamma jumps


class CojumpVariant(int, Enum):
    """Estimators of a single co-jump over one observation interval."""
    LEAVE_OUT = 5  # Full cross product minus the doubly truncated one
    OVER_THRESHOLD = 6  # Product of the over-threshold parts only
    RAW = 7  # Plain cross product


class BiasKind(str, Enum):
    """How estimation errors are reported."""
    RELATIVE = "relative"  # 100 * (estimate - truth) / truth
    ABSOLUTE = "absolute"  # estimate - truth, used when the truth is zero
