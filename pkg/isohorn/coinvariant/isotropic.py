"""Schubert calculus of IG(r, 2n) and OG(r, 2n+1) through the full flag variety.

The class of the cell indexed by I pulls back to p_{w_I w_0P} on G/B, where
w_I is the minimal coset representative and w_0P the longest element of
W_P = S_r x W(B_{n-r}). A product of pulled-back classes expands only over
such elements, and the coefficient of [I] is A_{w_0 w_I w_0P} applied to
the product polynomial.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from ..errors import InconsistencyError, InvalidIndexError
from ..index import (
    AIndex,
    BIndex,
    CIndex,
    cell_stats,
    cell_stats_b,
    ig_dimension,
    isotropic_subsets,
    max_coset_rep,
    og_dimension,
    orthogonal_subsets,
    weyl_element,
)
from ..models import CohomClassBC
from ..schubert import gr_nonvanishing
from .ring import coinvariant_ring

logger = logging.getLogger("IsoHorn")


def _check_family(indices: Sequence, kind, n: int) -> int:
    if not indices:
        raise InvalidIndexError("A product needs at least one factor")
    r = indices[0].r if isinstance(indices[0], kind) else None
    for index in indices:
        if not isinstance(index, kind) or index.n != n or index.r != r:
            raise InvalidIndexError(
                f"All factors must be {kind.__name__} with r={r}, n={n}; got {index}")
    return r


def _codim(index) -> int:
    if isinstance(index, CIndex):
        return cell_stats(index).codim
    return cell_stats_b(index).codim


@lru_cache(maxsize=None)
def _product(key: Tuple[Tuple[int, ...], ...], r: int, n: int, family: str) -> Tuple:
    kind = CIndex if family == "C" else BIndex
    indices = [kind(elements, n) for elements in key]
    engine = coinvariant_ring(n, family)
    total = sum(_codim(index) for index in indices)
    dimension = ig_dimension(r, n) if family == "C" else og_dimension(r, n)
    if total > dimension:
        return ()
    f = engine.ring.one
    for index in indices:
        f *= engine.schubert_rep(max_coset_rep(weyl_element(index, family), r))
        if not f:
            return ()
    targets = isotropic_subsets(r, n) if family == "C" else orthogonal_subsets(r, n)
    terms = []
    for target in targets:
        if _codim(target) != total:
            continue
        rep = max_coset_rep(weyl_element(target, family), r)
        value = engine.coefficient(f, rep)
        if value.denominator != 1 or value < 0:
            raise InconsistencyError(f"Structure constant {value} at {target} is not a nonnegative integer",
                                     {"factors": [list(k) for k in key], "n": n})
        if value:
            terms.append((target.elements, int(value)))
    return tuple(terms)


def _expand(indices: Sequence, r: int, n: int, family: str) -> CohomClassBC:
    # Multiplication is commutative, so the memo key is the sorted factor list.
    key = tuple(sorted(index.elements for index in indices))
    kind = CIndex if family == "C" else BIndex
    space = f"IG({r},{2 * n})" if family == "C" else f"OG({r},{2 * n + 1})"
    terms = {kind(elements, n): value for elements, value in _product(key, r, n, family)}
    return CohomClassBC(terms, space)


def parabolic_product(indices: Sequence[CIndex], n: int) -> CohomClassBC:
    """Expand prod_j [Lambda_{I^j}] in the Schubert basis of H*(IG(r, 2n)).

    Example:
        >>> parabolic_product([CIndex((2, 4), 2)] * 2, 2).as_dict()
        {'[1, 3]': 2}
    """
    r = _check_family(indices, CIndex, n)
    return _expand(indices, r, n, "C")


def og_parabolic_product(indices: Sequence[BIndex], n: int) -> CohomClassBC:
    """Expand prod_j [Psi_{J^j}] in the Schubert basis of H*(OG(r, 2n+1))."""
    r = _check_family(indices, BIndex, n)
    return _expand(indices, r, n, "B")


def ig_point(r: int, n: int) -> CIndex:
    return CIndex(tuple(range(1, r + 1)), n)


def og_point(r: int, n: int) -> BIndex:
    return BIndex(tuple(range(1, r + 1)), n)


def ig_point_coefficient(indices: Sequence[CIndex], n: int) -> int:
    """Coefficient of the point class; 0 unless the codimensions add up to dim IG."""
    r = _check_family(indices, CIndex, n)
    return parabolic_product(indices, n).coefficient(ig_point(r, n))


def og_point_coefficient(indices: Sequence[BIndex], n: int) -> int:
    r = _check_family(indices, BIndex, n)
    return og_parabolic_product(indices, n).coefficient(og_point(r, n))


def ig_nonvanishing(indices: Sequence[CIndex], n: int) -> bool:
    return not parabolic_product(indices, n).is_zero()


def og_nonvanishing(indices: Sequence[BIndex], n: int) -> bool:
    return not og_parabolic_product(indices, n).is_zero()


def _scan(candidates, s: int, ambient: int, product, dimension: int) -> Dict[str, int]:
    counts = {"tuples": 0, "nonvanishing": 0}
    for combo in itertools.combinations_with_replacement(candidates, s):
        if sum(_codim(index) for index in combo) > dimension:
            continue
        counts["tuples"] += 1
        if product(combo).is_zero():
            continue
        counts["nonvanishing"] += 1
        m = combo[0].r
        a_indices = [AIndex(index.elements, ambient) for index in combo]
        if not gr_nonvanishing(a_indices, m, ambient):
            logger.error(f"Nonvanishing isotropic product with vanishing Grassmannian image: "
                         f"{[str(i) for i in combo]}")
            raise InconsistencyError("Isotropic nonvanishing without Grassmannian nonvanishing",
                                     {"indices": [list(i.elements) for i in combo],
                                      "ambient": ambient})
    return counts


def frasier_scan(r: int, n: int, s: int = 3) -> Dict[str, int]:
    """Check that every nonvanishing product on IG(r, 2n) stays nonvanishing on Gr(r, 2n).

    Returns:
        Counts of the tuples examined and of the nonvanishing ones

    Raises:
        InconsistencyError: On a counterexample
    """
    candidates = list(isotropic_subsets(r, n))
    counts = _scan(candidates, s, 2 * n, lambda combo: parabolic_product(combo, n),
                   ig_dimension(r, n))
    logger.info(f"IG({r},{2 * n}) vs Gr({r},{2 * n}), s={s}: {counts}")
    return counts


def frasier_og_scan(r: int, n: int, s: int = 3) -> Dict[str, int]:
    """As frasier_scan for OG(r, 2n+1) against Gr(r, 2n+1)."""
    candidates = list(orthogonal_subsets(r, n))
    counts = _scan(candidates, s, 2 * n + 1, lambda combo: og_parabolic_product(combo, n),
                   og_dimension(r, n))
    logger.info(f"OG({r},{2 * n + 1}) vs Gr({r},{2 * n + 1}), s={s}: {counts}")
    return counts
