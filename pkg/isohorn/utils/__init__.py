"""Utility functions and helpers."""

from .resources import resource_path
from .logging_setup import setup_logging
from .parallel import ordered_map

__all__ = ['resource_path', 'setup_logging', 'ordered_map']
