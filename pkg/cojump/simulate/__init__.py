"""
Simulation engine for bivariate jump-diffusion paths with recorded ground truths.
"""

from cojump.simulate.config import (
    JumpSizeDistribution,
    Model1Config,
    Model2Config,
    ModelConfig,
    SamplingConfig,
    StochasticVolatility,
    VarianceGammaParams,
    load_model_config,
)
from cojump.simulate.factory import build_paths, create_model, get_models
from cojump.simulate.interface import PathModel
from cojump.simulate.processes import (
    correlate_jumps,
    correlated_brownian_increments,
    place_jumps,
    simulate_compound_poisson,
    simulate_sv_path,
    simulate_vg_increments,
)
from cojump.simulate.types import BundleTruths, JumpArrivals, PathBundle, RngSeed

__all__ = [
    "JumpSizeDistribution",
    "Model1Config",
    "Model2Config",
    "ModelConfig",
    "SamplingConfig",
    "StochasticVolatility",
    "VarianceGammaParams",
    "load_model_config",
    "build_paths",
    "create_model",
    "get_models",
    "PathModel",
    "correlate_jumps",
    "correlated_brownian_increments",
    "place_jumps",
    "simulate_compound_poisson",
    "simulate_sv_path",
    "simulate_vg_increments",
    "BundleTruths",
    "JumpArrivals",
    "PathBundle",
    "RngSeed",
]
