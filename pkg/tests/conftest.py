"""
pytest configuration file.
"""

from pathlib import Path
from typing import Generator

import numpy as np
import pytest

from cojump.core.grid import SyncPanel, TimeGrid
from cojump.core.threshold import ThresholdSpec
from cojump.simulate.config import Model1Config, Model2Config
from cojump.simulate.factory import build_paths
from cojump.simulate.types import PathBundle, RngSeed

EXAMPLES_DIR = Path(__file__).parent / "examples"
CONFIGS_DIR = Path(__file__).parent.parent / "configs"


@pytest.fixture(scope="session")
def examples_dir() -> Path:
    """
    Directory of the example path files.

    Returns:
        Path of tests/examples
    """
    return EXAMPLES_DIR


@pytest.fixture(scope="session")
def configs_dir() -> Path:
    """Directory of the shipped model configurations."""
    return CONFIGS_DIR


@pytest.fixture
def small_panel() -> SyncPanel:
    """
    A four interval panel with one large co-jump in the third interval.

    Returns:
        Panel with returns1 = (0.01, -0.02, 0.5, 0.03) and returns2 = (0.02, 0.01, 0.4, -0.01)
    """
    return SyncPanel(TimeGrid.regular(4), [0.01, -0.02, 0.5, 0.03], [0.02, 0.01, 0.4, -0.01])


@pytest.fixture
def random_panel() -> SyncPanel:
    """
    A diffusive panel with a few jumps planted at fixed intervals.
    """
    rng = np.random.default_rng(12345)
    n = 84
    h = 1.0 / n
    returns1 = 0.0157 * np.sqrt(h) * rng.standard_normal(n)
    returns2 = 0.5 * returns1 + 0.0157 * np.sqrt(h) * np.sqrt(0.75) * rng.standard_normal(n)
    returns1[10] += 0.08
    returns2[10] -= 0.06
    returns1[40] += 0.09
    returns2[70] += 0.07
    return SyncPanel(TimeGrid.regular(n), returns1, returns2)


@pytest.fixture(scope="session")
def model1_config() -> Model1Config:
    """Model 1 with its default parameters."""
    return Model1Config()


@pytest.fixture(scope="session")
def model2_config() -> Model2Config:
    """Model 2 with its default parameters."""
    return Model2Config()


@pytest.fixture(scope="session")
def model1_bundle(model1_config) -> PathBundle:
    """
    One Model 1 path forced to jump often so that co-jumps are present.
    """
    config = model1_config.model_copy(update={"lambda1": 20.0, "lambda3": 20.0})
    return build_paths(config, RngSeed(7, 0))


@pytest.fixture
def spec() -> ThresholdSpec:
    """The default threshold r_h = 0.1 h^0.99."""
    return ThresholdSpec(0.1, 0.99)


@pytest.fixture
def clean_seed_env(monkeypatch) -> Generator[None, None, None]:
    """Remove COJUMP_SEED for the duration of a test."""
    monkeypatch.delenv("COJUMP_SEED", raising=False)
    yield
