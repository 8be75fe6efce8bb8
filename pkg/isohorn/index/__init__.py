"""Index sets, partitions, Weyl elements and weight data."""

from .subsets import (
    AIndex,
    BIndex,
    CIndex,
    complements,
    dominance_count,
    isotropic_subsets,
    orthogonal_subsets,
    parse_index,
    subsets,
)
from .partitions import (
    Partition,
    conjugate,
    dual,
    flip,
    partition_subset,
    partitions_in_box,
    subset_partition,
)
from .weyl import (
    SignedPerm,
    all_elements,
    elements_by_length,
    inversions,
    is_minimal_rep,
    max_coset_rep,
    parabolic_longest,
    weyl_element,
)
from .cells import (
    BCellStats,
    CellStats,
    cell_stats,
    cell_stats_b,
    gr_dimension,
    ig_dimension,
    mubar,
    og_dimension,
    og_plus_compress,
    og_triple_bijection,
    og_triple_inverse,
    reindex_io,
    reindex_jo,
)
from .weights import (
    Coweight,
    GroupSpec,
    ThetaValues,
    Weight,
    chi,
    fundamental_coweight,
    fundamental_weight,
    kappa,
    mu_functional,
    pairing,
    restrict_weight,
    rho,
    theta_values,
)

__all__ = [
    'AIndex', 'BIndex', 'CIndex', 'complements', 'dominance_count',
    'isotropic_subsets', 'orthogonal_subsets', 'parse_index', 'subsets',
    'Partition', 'conjugate', 'dual', 'flip', 'partition_subset',
    'partitions_in_box', 'subset_partition',
    'SignedPerm', 'all_elements', 'elements_by_length', 'inversions',
    'is_minimal_rep', 'max_coset_rep', 'parabolic_longest', 'weyl_element',
    'BCellStats', 'CellStats', 'cell_stats', 'cell_stats_b', 'gr_dimension',
    'ig_dimension', 'mubar', 'og_dimension', 'og_plus_compress',
    'og_triple_bijection', 'og_triple_inverse', 'reindex_io', 'reindex_jo',
    'Coweight', 'GroupSpec', 'ThetaValues', 'Weight', 'chi',
    'fundamental_coweight', 'fundamental_weight', 'kappa', 'mu_functional',
    'pairing', 'restrict_weight', 'rho', 'theta_values',
]
