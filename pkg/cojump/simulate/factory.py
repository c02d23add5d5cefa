"""
Factory functions for creating path models.
"""

import importlib
import logging
from typing import Any, List, Mapping, Union

from cojump.enums import ModelKind
from cojump.exceptions import UnsupportedModelError
from cojump.simulate.config import ModelConfig, load_model_config
from cojump.simulate.interface import PathModel
from cojump.simulate.types import PathBundle, RngSeed

# Configure logger
logger = logging.getLogger("cojump.simulate.factory")

# Model mapping
_MODELS = {
    ModelKind.MODEL1: "cojump.simulate.model1.Model1",
    ModelKind.MODEL2: "cojump.simulate.model2.Model2",
}


def get_models() -> List[str]:
    """
    Get a list of all available simulation models.
    """
    return [kind.value for kind in _MODELS]


def create_model(config: Union[ModelConfig, Mapping[str, Any]]) -> PathModel:
    """
    Create a path model instance.

    Args:
        config: A validated model configuration, or raw field values with a ``kind``

    Returns:
        An initialized PathModel

    Raises:
        ConfigValidationError: If raw values do not validate
        UnsupportedModelError: If no model is registered for the kind
    """
    if isinstance(config, Mapping):
        config = load_model_config(config)

    if config.kind not in _MODELS:
        raise UnsupportedModelError(
            f"Model '{config.kind}' not supported. Available models: {', '.join(get_models())}",
            component="simulate",
        )

    module_path, class_name = _MODELS[config.kind].rsplit(".", 1)
    try:
        module = importlib.import_module(module_path)
        model_class = getattr(module, class_name)
    except (ImportError, AttributeError) as e:
        raise UnsupportedModelError(f"Could not import model {config.kind.value}: {e}",
                                    component="simulate", original_exception=e)

    logger.debug(f"Created {class_name} with {config.n_fine} fine steps")
    return model_class(config)


def build_paths(config: ModelConfig, seed: RngSeed) -> PathBundle:
    """
    Simulate one PathBundle.

    Identical (config, seed) pairs give bit identical bundles.
    """
    return create_model(config).simulate(seed)
