"""
Abstract interface for path models.
"""

from abc import ABC, abstractmethod

from cojump.core.grid import TimeGrid
from cojump.enums import ModelKind
from cojump.simulate.config import ModelConfig
from cojump.simulate.types import PathBundle, RngSeed


class PathModel(ABC):
    """
    Abstract interface for the bivariate jump-diffusion models.

    A model turns a seed into a PathBundle. Implementations hold no state
    besides their configuration, so one instance can serve many workers.
    """

    def __init__(self, config: ModelConfig):
        """
        Initialize the model.

        Args:
            config: The validated model configuration
        """
        self.config = config

    @property
    def kind(self) -> ModelKind:
        """The model kind."""
        return self.config.kind

    @property
    @abstractmethod
    def fine_grid(self) -> TimeGrid:
        """The Euler grid."""
        pass

    @abstractmethod
    def simulate(self, seed: RngSeed) -> PathBundle:
        """
        Simulate one bivariate path with its ground truths.

        Args:
            seed: Identifies the random stream of the path

        Returns:
            The PathBundle, a pure function of the configuration and the seed
        """
        pass
