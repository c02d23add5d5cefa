"""
Configuration management utilities for cojump.

Configuration files are flat ``key = value`` INI files; section headers only
group keys for readability. Every key is a SimulationParameter value:

    [model]
    model = model1
    lambda1 = 0.118

    [threshold]
    c = 0.1
    beta = 0.99
"""

import configparser
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, TypeVar, Union

from cojump.core.threshold import ThresholdSpec, validate_threshold_spec
from cojump.enums import ModelKind, SimulationParameter
from cojump.exceptions import ConfigValidationError, DataParseError
from cojump.simulate.config import ModelConfig, load_model_config

# Configure logger
logger = logging.getLogger("cojump.utils.config")

# Generic value type for configuration
T = TypeVar('T')

SEED_ENV_VAR = "COJUMP_SEED"

DEFAULT_C = 0.1
DEFAULT_BETA = 0.99
DEFAULT_N_PATHS = 500

# Flat keys that map to nested model fields
_NESTED_FIELDS: Dict[SimulationParameter, tuple] = {
    SimulationParameter.SV_LEVEL1: ("sv1", "level"),
    SimulationParameter.SV_MEAN_REVERSION1: ("sv1", "mean_reversion"),
    SimulationParameter.SV_VOL_OF_VOL1: ("sv1", "vol_of_vol"),
    SimulationParameter.SV_LEVEL2: ("sv2", "level"),
    SimulationParameter.SV_MEAN_REVERSION2: ("sv2", "mean_reversion"),
    SimulationParameter.SV_VOL_OF_VOL2: ("sv2", "vol_of_vol"),
    SimulationParameter.JUMP_MEAN: ("jump_size", "mean"),
    SimulationParameter.JUMP_STD: ("jump_size", "std"),
    SimulationParameter.JUMP_SYMMETRIC: ("jump_size", "symmetric"),
    SimulationParameter.VG_KAPPA1: ("vg1", "kappa"),
    SimulationParameter.VG_THETA1: ("vg1", "theta"),
    SimulationParameter.VG_VARSIGMA1: ("vg1", "varsigma"),
    SimulationParameter.VG_KAPPA3: ("vg3", "kappa"),
    SimulationParameter.VG_THETA3: ("vg3", "theta"),
    SimulationParameter.VG_VARSIGMA3: ("vg3", "varsigma"),
}

# Keys that configure the experiment rather than the model
_EXPERIMENT_FIELDS = {
    SimulationParameter.C,
    SimulationParameter.BETA,
    SimulationParameter.N_PATHS,
    SimulationParameter.SEED,
    SimulationParameter.THREADS,
}


def _parameter(key: Union[str, SimulationParameter]) -> SimulationParameter:
    if isinstance(key, SimulationParameter):
        return key
    try:
        return SimulationParameter(str(key).strip().lower())
    except ValueError:
        raise ConfigValidationError(
            f"Unknown configuration key '{key}'",
            component="config", details={"fields": {str(key): "unknown parameter"}},
        )


class ConfigurationManager:
    """
    Parameter management for simulations and experiments.

    Stores values under SimulationParameter keys (string keys are accepted
    and converted) and turns them into validated model configurations.
    """

    def __init__(self, initial_config: Optional[Dict[Union[str, SimulationParameter], Any]] = None):
        """
        Initialize the configuration manager.

        Args:
            initial_config: Optional initial configuration
        """
        self._config: Dict[SimulationParameter, Any] = {}

        if initial_config:
            self.update_config(initial_config)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ConfigurationManager":
        """
        Read a configuration file.

        Raises:
            DataParseError: If the file is missing or is not valid INI
            ConfigValidationError: If the file holds unknown keys, all named in details["fields"]
        """
        path = Path(path)
        if not path.exists():
            raise DataParseError(f"Configuration file not found: {path}", file_path=str(path), component="config")
        parser = configparser.ConfigParser(interpolation=None)
        try:
            parser.read(path, encoding="utf-8")
        except configparser.Error as e:
            raise DataParseError(f"Failed to parse configuration file: {e}", file_path=str(path),
                                 component="config", original_exception=e)

        values: Dict[str, str] = {}
        for section in [parser.default_section] + parser.sections():
            for key, value in parser[section].items():
                values[key] = value

        known = {p.value for p in SimulationParameter}
        unknown = {key: "unknown parameter" for key in values if key not in known}
        if unknown:
            raise ConfigValidationError(
                f"Unknown keys in {path}: {', '.join(sorted(unknown))}",
                component="config", details={"fields": unknown, "file_path": str(path)},
            )
        logger.info(f"Loaded {len(values)} parameters from {path}")
        return cls(values)

    def get_param(self, param: Union[str, SimulationParameter], default: Optional[T] = None) -> Optional[T]:
        """
        Get a parameter value from configuration, supporting both enum and string keys.

        Args:
            param: Parameter to retrieve (either SimulationParameter enum or string)
            default: Default value if parameter is not found

        Returns:
            Parameter value or default
        """
        return self._config.get(_parameter(param), default)

    def update_config(self, updates: Dict[Union[str, SimulationParameter], Any]) -> None:
        """
        Update configuration with new values; None values are ignored.

        Args:
            updates: Updates to apply

        Raises:
            ConfigValidationError: If a key is unknown
        """
        for key, value in updates.items():
            if value is not None:
                self._config[_parameter(key)] = value

    def get_config(self) -> Dict[SimulationParameter, Any]:
        """Get a copy of the current configuration."""
        return self._config.copy()

    def merge_with_defaults(self, defaults: Dict[Union[str, SimulationParameter], Any]) -> None:
        """
        Merge the current configuration with default values.
        Only applies defaults for parameters that are not already set.

        Args:
            defaults: Default values to merge
        """
        for key, value in defaults.items():
            parameter = _parameter(key)
            if parameter not in self._config:
                self._config[parameter] = value

    def snapshot(self) -> Dict[str, Any]:
        """Plain, sorted key/value view used in manifests."""
        return {key.value: self._config[key] for key in sorted(self._config, key=lambda p: p.value)}

    def model_kind(self) -> ModelKind:
        value = self.get_param(SimulationParameter.MODEL, ModelKind.MODEL1)
        try:
            return ModelKind(str(value).strip().lower())
        except ValueError as e:
            raise ConfigValidationError(
                f"Unknown model '{value}'. Available models: {', '.join(m.value for m in ModelKind)}",
                component="config", original_exception=e, details={"fields": {"model": "unknown model"}},
            )

    def to_model_config(self) -> ModelConfig:
        """
        Build the validated model configuration.

        Raises:
            ConfigValidationError: Naming every invalid field
        """
        data: Dict[str, Any] = {"kind": self.model_kind()}
        for parameter, value in self._config.items():
            if parameter == SimulationParameter.MODEL or parameter in _EXPERIMENT_FIELDS:
                continue
            if parameter in _NESTED_FIELDS:
                group, name = _NESTED_FIELDS[parameter]
                data.setdefault(group, {})[name] = value
            else:
                data[parameter.value] = value
        return load_model_config(data)

    def threshold_spec(self) -> ThresholdSpec:
        """
        Build the threshold r_h = c h^beta (defaults c = 0.1, beta = 0.99).

        Raises:
            ThresholdAdmissibilityError: If (c, beta) is not admissible
        """
        c = self._number(SimulationParameter.C, DEFAULT_C, float)
        beta = self._number(SimulationParameter.BETA, DEFAULT_BETA, float)
        return validate_threshold_spec(c, beta)

    def n_paths(self) -> int:
        return self._number(SimulationParameter.N_PATHS, DEFAULT_N_PATHS, int)

    def threads(self) -> int:
        return self._number(SimulationParameter.THREADS, 1, int)

    def _number(self, parameter: SimulationParameter, default: Any, cast: type) -> Any:
        value = self.get_param(parameter, default)
        try:
            return cast(value)
        except (TypeError, ValueError) as e:
            raise ConfigValidationError(
                f"Parameter '{parameter.value}' must be a {cast.__name__}, got {value!r}",
                component="config", original_exception=e, details={"fields": {parameter.value: "not a number"}},
            )

    def resolve_seed(self, cli_seed: Optional[int] = None) -> int:
        """
        Resolve the master seed: command line, then COJUMP_SEED, then the configuration, then 0.

        Raises:
            ConfigValidationError: If the selected source is not an integer
        """
        if cli_seed is not None:
            return int(cli_seed)
        env_seed = os.environ.get(SEED_ENV_VAR)
        if env_seed not in (None, ""):
            try:
                return int(env_seed)
            except ValueError as e:
                raise ConfigValidationError(
                    f"{SEED_ENV_VAR} must be an integer, got {env_seed!r}",
                    component="config", original_exception=e, details={"fields": {SEED_ENV_VAR: "not an integer"}},
                )
        return self._number(SimulationParameter.SEED, 0, int)
