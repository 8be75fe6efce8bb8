"""Eigencone inequalities, membership and cross-checks against SU(N) and invariants."""

from .inequalities import (
    EigenInequality,
    InequalitySystem,
    check_dominant,
    dual_coweight,
    generate_inequalities,
    inequality_system,
    membership,
)
from .compare import (
    ConeComparison,
    OmegaValues,
    WeightConeRecord,
    compare_cones,
    embed_coweight,
    kappa_inverse,
    omega_identity_check,
    weight_cone_cross_check,
)

__all__ = [
    'EigenInequality',
    'InequalitySystem',
    'check_dominant',
    'dual_coweight',
    'generate_inequalities',
    'inequality_system',
    'membership',
    'ConeComparison',
    'OmegaValues',
    'WeightConeRecord',
    'compare_cones',
    'embed_coweight',
    'kappa_inverse',
    'omega_identity_check',
    'weight_cone_cross_check'
]
