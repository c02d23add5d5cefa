"""
Utility functions for cojump.
"""

from cojump.utils.config import ConfigurationManager
from cojump.utils.logging import configure_logging, truncate_series

__all__ = [
    "ConfigurationManager",
    "configure_logging",
    "truncate_series",
]
