"""
Tests for the ConfigurationManager.
"""

import pytest

from cojump.enums import ModelKind, SimulationParameter
from cojump.exceptions import ConfigValidationError, DataParseError
from cojump.simulate.config import Model1Config, Model2Config
from cojump.utils.config import DEFAULT_N_PATHS, SEED_ENV_VAR, ConfigurationManager


def test_defaults(clean_seed_env):
    """Test the values used when nothing is configured."""
    manager = ConfigurationManager()
    assert manager.model_kind() == ModelKind.MODEL1
    assert isinstance(manager.to_model_config(), Model1Config)
    spec = manager.threshold_spec()
    assert (spec.c, spec.beta) == (0.1, 0.99)
    assert manager.n_paths() == DEFAULT_N_PATHS
    assert manager.threads() == 1
    assert manager.resolve_seed() == 0


def test_get_param():
    """Test parameter retrieval with enum and string keys."""
    manager = ConfigurationManager({"lambda1": 0.5})
    assert manager.get_param(SimulationParameter.LAMBDA1) == 0.5
    assert manager.get_param("lambda1") == 0.5
    assert manager.get_param("LAMBDA1") == 0.5
    assert manager.get_param(SimulationParameter.RHO, 0.3) == 0.3


def test_update_config_ignores_none():
    """Test that unset overrides keep the configured values."""
    manager = ConfigurationManager({SimulationParameter.RHO: 0.2})
    manager.update_config({SimulationParameter.RHO: None, SimulationParameter.RHO_J: 0.1})
    assert manager.get_param(SimulationParameter.RHO) == 0.2
    assert manager.get_param(SimulationParameter.RHO_J) == 0.1


def test_unknown_key():
    """Test that unknown parameters are rejected."""
    with pytest.raises(ConfigValidationError) as excinfo:
        ConfigurationManager({"temperature": 0.7})
    assert "temperature" in excinfo.value.details["fields"]


def test_merge_with_defaults():
    """Test that defaults only fill unset parameters."""
    manager = ConfigurationManager({"c": 0.5})
    manager.merge_with_defaults({"c": 1.0, "beta": 0.5})
    assert manager.get_param("c") == 0.5
    assert manager.get_param("beta") == 0.5


def test_snapshot_is_sorted():
    """Test the plain view written to manifests."""
    manager = ConfigurationManager({"rho": 0.1, "beta": 0.5, "lambda1": 1.0})
    snapshot = manager.snapshot()
    assert list(snapshot) == ["beta", "lambda1", "rho"]

    copy = manager.get_config()
    copy[SimulationParameter.RHO] = 0.9
    assert manager.get_param("rho") == 0.1


def test_model1_file(configs_dir, clean_seed_env):
    """Test loading the shipped Model 1 configuration."""
    manager = ConfigurationManager.from_file(configs_dir / "model1.cfg")
    config = manager.to_model_config()
    assert isinstance(config, Model1Config)
    assert config.lambda1 == 0.118
    assert config.sv1.level == 0.0157
    assert config.jump_size.symmetric is True
    assert config == Model1Config()
    assert config.coarse_step_seconds == 300
    assert manager.n_paths() == 500
    assert manager.resolve_seed() == 20240601


def test_other_shipped_files(configs_dir):
    """Test the rare jump, continuous and Model 2 configurations."""
    rare = ConfigurationManager.from_file(configs_dir / "model1_lambda0014.cfg").to_model_config()
    assert rare.lambda1 == 0.014
    assert rare.lambda3 == 0.014

    continuous = ConfigurationManager.from_file(configs_dir / "model1_nojumps.cfg").to_model_config()
    assert continuous.lambda1 == 0.0

    model2 = ConfigurationManager.from_file(configs_dir / "model2.cfg").to_model_config()
    assert isinstance(model2, Model2Config)
    assert model2.vg1.theta == -0.02
    assert model2 == Model2Config()


def test_file_errors(tmp_path):
    """Test missing, malformed and unknown-key files."""
    with pytest.raises(DataParseError):
        ConfigurationManager.from_file(tmp_path / "missing.cfg")

    malformed = tmp_path / "malformed.cfg"
    malformed.write_text("lambda1 = 0.1\n")
    with pytest.raises(DataParseError):
        ConfigurationManager.from_file(malformed)

    unknown = tmp_path / "unknown.cfg"
    unknown.write_text("[model]\nlambda1 = 0.1\nlambda2 = 0.2\nmodel_name = x\n")
    with pytest.raises(ConfigValidationError) as excinfo:
        ConfigurationManager.from_file(unknown)
    assert set(excinfo.value.details["fields"]) == {"lambda2", "model_name"}


def test_invalid_values():
    """Test that invalid values name their fields."""
    manager = ConfigurationManager({"rho": "2.0", "lambda1": "-1"})
    with pytest.raises(ConfigValidationError) as excinfo:
        manager.to_model_config()
    assert {"rho", "lambda1"} <= set(excinfo.value.details["fields"])

    with pytest.raises(ConfigValidationError):
        ConfigurationManager({"n_paths": "many"}).n_paths()
    with pytest.raises(ConfigValidationError):
        ConfigurationManager({"model": "model9"}).model_kind()


def test_model2_keys_rejected_for_model1():
    """Test that a parameter of the other model is an error."""
    with pytest.raises(ConfigValidationError) as excinfo:
        ConfigurationManager({"model": "model1", "sigma1": 0.02}).to_model_config()
    assert "sigma1" in excinfo.value.details["fields"]


def test_nested_keys():
    """Test flat keys mapped onto nested model fields."""
    config = ConfigurationManager({"sv_vol_of_vol2": 0.5, "jump_std": 0.02}).to_model_config()
    assert config.sv2.vol_of_vol == 0.5
    assert config.sv1.vol_of_vol == 0.3
    assert config.jump_size.std == 0.02


def test_seed_resolution(monkeypatch):
    """Test seed precedence: command line, environment, configuration."""
    manager = ConfigurationManager({"seed": 11})
    monkeypatch.delenv(SEED_ENV_VAR, raising=False)
    assert manager.resolve_seed() == 11
    monkeypatch.setenv(SEED_ENV_VAR, "5")
    assert manager.resolve_seed() == 5
    assert manager.resolve_seed(9) == 9

    monkeypatch.setenv(SEED_ENV_VAR, "abc")
    with pytest.raises(ConfigValidationError):
        manager.resolve_seed()
