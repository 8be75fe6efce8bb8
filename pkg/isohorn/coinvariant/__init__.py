"""Divided differences, Schubert calculus of IG/OG and the deformed-product criteria."""

from .ring import (
    CoinvariantRing,
    coinvariant_ring,
    divided_difference,
    flag_structure_constants,
    grain_check,
    schubert_rep,
)
from .isotropic import (
    frasier_og_scan,
    frasier_scan,
    ig_nonvanishing,
    ig_point,
    ig_point_coefficient,
    og_nonvanishing,
    og_parabolic_product,
    og_point,
    og_point_coefficient,
    parabolic_product,
)
from .deformed import (
    ChiEvaluation,
    HornRecord,
    Old3Record,
    alternating_forms_check,
    chi_eval,
    deformed_nonvanishing,
    horn_b_check,
    horn_c_check,
    horn_mus,
    horn_scan,
    inequality_scan,
    minuscule_theta_check,
    og_reduced_indices,
    old2_slack,
    old3_check,
    old3_scan,
    oldie_slacks,
)

__all__ = [
    'CoinvariantRing', 'coinvariant_ring', 'divided_difference',
    'flag_structure_constants', 'grain_check', 'schubert_rep',
    'frasier_og_scan', 'frasier_scan', 'ig_nonvanishing', 'ig_point',
    'ig_point_coefficient', 'og_nonvanishing', 'og_parabolic_product', 'og_point',
    'og_point_coefficient', 'parabolic_product',
    'ChiEvaluation', 'HornRecord', 'Old3Record', 'alternating_forms_check',
    'chi_eval', 'deformed_nonvanishing', 'horn_b_check', 'horn_c_check',
    'horn_mus', 'horn_scan', 'inequality_scan', 'minuscule_theta_check',
    'og_reduced_indices', 'old2_slack', 'old3_check', 'old3_scan', 'oldie_slacks',
]
