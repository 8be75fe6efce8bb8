"""Products of Schubert classes on the Grassmannian Gr(m, N)."""

import logging
from typing import Sequence

from ..errors import InvalidIndexError
from ..index import AIndex, partition_subset, subset_partition
from ..models import CohomClassA
from .lr import lr_multi_product

logger = logging.getLogger("IsoHorn")


def _check_indices(indices: Sequence[AIndex], m: int, N: int) -> None:
    if not 0 <= m <= N:
        raise InvalidIndexError(f"Gr({m},{N}) is not a Grassmannian")
    for index in indices:
        if not isinstance(index, AIndex) or index.cardinality != m or index.ambient != N:
            raise InvalidIndexError(f"{index} is not an index of S({m},{N})")


def schubert_class(index: AIndex) -> CohomClassA:
    """The class [Omega_A] itself."""
    return CohomClassA({index: 1}, space=f"Gr({index.cardinality},{index.ambient})")


def gr_product(indices: Sequence[AIndex], m: int, N: int) -> CohomClassA:
    """Expand prod_j [Omega_{A^j}] in the Schubert basis of Gr(m, N).

    Each A is sent to its partition (mu_a = N - m + a - a_a), the product is
    the LR fold truncated to the m x (N-m) box, and the result is sent back.

    Raises:
        InvalidIndexError: If the indices do not all lie in S(m, N)
    """
    _check_indices(indices, m, N)
    space = f"Gr({m},{N})"
    if sum(index.codim for index in indices) > m * (N - m):
        return CohomClassA({}, space=space)
    shapes = [subset_partition(index).parts for index in indices]
    folded = lr_multi_product(shapes, rows=m, width=N - m)
    terms = {}
    for shape, value in folded.items():
        parts = tuple(shape) + (0,) * (m - len(shape))
        terms[partition_subset(parts, m, N)] = value
    return CohomClassA(terms, space=space)


def gr_nonvanishing(indices: Sequence[AIndex], m: int, N: int) -> bool:
    """True iff the product of the classes is nonzero in H*(Gr(m, N))."""
    _check_indices(indices, m, N)
    if sum(index.codim for index in indices) > m * (N - m):
        return False
    return not gr_product(indices, m, N).is_zero()


def point_index(m: int, N: int) -> AIndex:
    return AIndex(tuple(range(1, m + 1)), N)


def point_coefficient(indices: Sequence[AIndex], m: int, N: int) -> int:
    """Coefficient of the point class, 0 unless the codimensions add up to m(N-m)."""
    _check_indices(indices, m, N)
    if sum(index.codim for index in indices) != m * (N - m):
        return 0
    return gr_product(indices, m, N).coefficient(point_index(m, N))
