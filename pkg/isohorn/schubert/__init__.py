"""Type A Schubert calculus: LR coefficients, Grassmannians, Horn lists."""

from .lr import (
    hive_lr_coefficient,
    lr_coefficient,
    lr_multi_product,
    lr_product,
    sl_invariant_dim,
)
from .grassmannian import (
    gr_nonvanishing,
    gr_product,
    point_coefficient,
    point_index,
    schubert_class,
)
from .horn import (
    HornCheckResult,
    grassmann_duality_check,
    grassmann_duality_values,
    horn_inequality_check,
    horn_list,
    ordinary_duality_check,
)

__all__ = [
    'hive_lr_coefficient',
    'lr_coefficient',
    'lr_multi_product',
    'lr_product',
    'sl_invariant_dim',
    'gr_nonvanishing',
    'gr_product',
    'point_coefficient',
    'point_index',
    'schubert_class',
    'HornCheckResult',
    'grassmann_duality_check',
    'grassmann_duality_values',
    'horn_inequality_check',
    'horn_list',
    'ordinary_duality_check'
]
