"""
cojump: threshold estimation of integrated covariation and co-jumps from
discretely observed bivariate jump-diffusions, with a simulation engine and
Monte Carlo experiments.
"""

__version__ = "0.1.0"

from cojump.core import AsyncPanel, SampledPath, SyncPanel, ThresholdSpec, TimeGrid, validate_threshold_spec
from cojump.estimators import estimate_covariation, hy_threshold_ic, threshold_ic
from cojump.simulate import build_paths, create_model, load_model_config
from cojump.experiments import run_monte_carlo, sweep_thresholds
from cojump.utils.logging import configure_logging

__all__ = [
    "TimeGrid",
    "SampledPath",
    "SyncPanel",
    "AsyncPanel",
    "ThresholdSpec",
    "validate_threshold_spec",
    "estimate_covariation",
    "threshold_ic",
    "hy_threshold_ic",
    "build_paths",
    "create_model",
    "load_model_config",
    "run_monte_carlo",
    "sweep_thresholds",
    "configure_logging",
]
