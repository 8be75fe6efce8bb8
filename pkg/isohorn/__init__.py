"""IsoHorn - exact Schubert calculus, Horn inequalities, eigencones and saturation checks."""

from .models import ConfigManager
from .errors import (
    InconsistencyError,
    InvalidIndexError,
    IsoHornError,
    PreconditionError,
    RankCapError,
)
from .utils import resource_path, setup_logging
from . import cli, coinvariant, eigencone, flags, index, reps, schubert

__version__ = "1.0.0"
__description__ = "Exact Schubert calculus on isotropic Grassmannians, Horn inequalities and eigencones"

__all__ = [
    'ConfigManager',
    'InconsistencyError',
    'InvalidIndexError',
    'IsoHornError',
    'PreconditionError',
    'RankCapError',
    'resource_path',
    'setup_logging',
    'cli',
    'coinvariant',
    'eigencone',
    'flags',
    'index',
    'reps',
    'schubert'
]
