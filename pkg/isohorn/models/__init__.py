"""Data models and configuration management."""

from .config import ConfigManager
from .cohomology import CohomClass, CohomClassA, CohomClassBC

__all__ = [
    'ConfigManager',
    'CohomClass',
    'CohomClassA',
    'CohomClassBC'
]
