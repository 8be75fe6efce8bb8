"""Characters, tensor invariants, transfer theorems and saturation scans."""

from .lie import dominant_conjugate, dual_weight, positive_roots, weyl_orbit
from .characters import (
    LaurentCharacter,
    character,
    invariant_dim,
    tensor_decompose,
    weyl_dimension,
)
from .transfer import (
    TransferRecord,
    WalkRecord,
    clef_scan,
    clef_transfer_check,
    walk_check,
    walk_scan,
)
from .saturation import (
    SaturationOutcome,
    SaturationReport,
    dominant_weights,
    saturation_factor,
    saturation_scan,
)

__all__ = [
    'dominant_conjugate',
    'dual_weight',
    'positive_roots',
    'weyl_orbit',
    'LaurentCharacter',
    'character',
    'invariant_dim',
    'tensor_decompose',
    'weyl_dimension',
    'TransferRecord',
    'WalkRecord',
    'clef_scan',
    'clef_transfer_check',
    'walk_check',
    'walk_scan',
    'SaturationOutcome',
    'SaturationReport',
    'dominant_weights',
    'saturation_factor',
    'saturation_scan'
]
