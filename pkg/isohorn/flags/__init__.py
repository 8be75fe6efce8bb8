"""Exact linear algebra on random flags: Hom spaces, constrained forms, properness."""

from .field import Field
from .flags import (
    FORMS,
    FlagBasis,
    derive_seed,
    flags_for_trial,
    form_ambient,
    gram_matrix,
    random_flag,
    schubert_position,
)
from .hom import (
    KeyCheckRecord,
    check_mu_tuple,
    constraint_data,
    expected_hom_dim,
    hom_dim,
    key_scan,
    random_mu_tuples,
    sym2_constrained_dim,
    theorem_key_check,
    wedge2_constrained_dim,
)
from .properness import PropernessReport, cells_below, intersection_dim, mc_properness

__all__ = [
    'Field',
    'FORMS', 'FlagBasis', 'derive_seed', 'flags_for_trial', 'form_ambient',
    'gram_matrix', 'random_flag', 'schubert_position',
    'KeyCheckRecord', 'check_mu_tuple', 'constraint_data', 'expected_hom_dim',
    'hom_dim', 'key_scan', 'random_mu_tuples', 'sym2_constrained_dim',
    'theorem_key_check', 'wedge2_constrained_dim',
    'PropernessReport', 'cells_below', 'intersection_dim', 'mc_properness',
]
