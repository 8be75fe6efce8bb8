"""Horn lists, Horn inequalities and the two dualities of invariant spaces."""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from ..errors import PreconditionError
from ..index import AIndex, conjugate, dual, subsets
from .grassmannian import gr_nonvanishing, point_coefficient
from .lr import sl_invariant_dim, trim

logger = logging.getLogger("IsoHorn")

HornTuple = Tuple[AIndex, ...]


def _distinct_orderings(combo: Tuple[AIndex, ...]) -> Iterable[HornTuple]:
    seen = set()
    for perm in itertools.permutations(combo):
        if perm not in seen:
            seen.add(perm)
            yield perm


@lru_cache(maxsize=None)
def horn_list(d: int, r: int, s: int, point_only: bool = False) -> Tuple[HornTuple, ...]:
    """All s-tuples (B^1, ..., B^s) of d-subsets of [r] with nonzero product in H*(Gr(d, r)).

    Args:
        d: Subset size, 1 <= d <= r
        r: Ambient size
        s: Number of factors
        point_only: Keep only products equal to c * [point] with c != 0

    Returns:
        Tuples in lexicographic order of their element lists
    """
    bound = d * (r - d)
    candidates = list(subsets(d, r))
    found = []
    for combo in itertools.combinations_with_replacement(candidates, s):
        codim = sum(index.codim for index in combo)
        if codim > bound or (point_only and codim != bound):
            continue
        if point_only:
            keep = point_coefficient(combo, d, r) != 0
        else:
            keep = gr_nonvanishing(combo, d, r)
        if keep:
            found.extend(_distinct_orderings(combo))
    found.sort(key=lambda t: tuple(index.elements for index in t))
    logger.debug(f"horn_list(d={d}, r={r}, s={s}, point_only={point_only}): {len(found)} tuples")
    return tuple(found)


@dataclass(frozen=True)
class HornCheckResult:
    """Outcome of a Horn inequality check.

    Attributes:
        holds: Every inequality is satisfied
        witness: (d, B-tuple, lhs, rhs) of the first violated inequality
    """
    holds: bool
    witness: Optional[Tuple[int, HornTuple, int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def horn_inequality_check(mus: Sequence[Sequence[int]], bound: int, r: int,
                          d_range: Optional[Iterable[int]] = None) -> HornCheckResult:
    """Check sum_j sum_{a in B^j} mu^j_a <= d * bound over horn_list(d, r, s).

    Args:
        mus: s partitions, each padded to r parts
        bound: Per-unit-of-d bound (2n, 2(n-r) or 2n+1-2r in the callers)
        r: Number of parts
        d_range: Values of d to test, default 1..r

    Returns:
        HornCheckResult, truthy iff all inequalities hold
    """
    padded = [tuple(mu) + (0,) * (r - len(mu)) for mu in mus]
    if any(len(mu) != r for mu in padded):
        raise PreconditionError(f"Horn check expects partitions with at most {r} parts")
    s = len(padded)
    for d in (range(1, r + 1) if d_range is None else d_range):
        for combo in horn_list(d, r, s):
            lhs = sum(padded[j][a - 1] for j, index in enumerate(combo) for a in index.elements)
            if lhs > d * bound:
                logger.debug(f"Horn inequality fails at d={d}: {lhs} > {d * bound}")
                return HornCheckResult(False, (d, combo, lhs, d * bound))
    return HornCheckResult(True)


def grassmann_duality_values(mus: Sequence[Sequence[int]], r: int, k: int) -> Tuple[int, int]:
    """Invariant dimensions over SL(r) of the mu^j and over SL(k) of their conjugates.

    Raises:
        PreconditionError: If sum |mu^j| != k r
    """
    total = sum(sum(mu) for mu in mus)
    if total != k * r:
        raise PreconditionError(f"Grassmann duality needs sum |mu| = {k * r}, got {total}")
    left = sl_invariant_dim(mus, r)
    shapes = []
    for mu in mus:
        mu = trim(mu)
        if mu and mu[0] > k:
            return left, 0
        shapes.append(conjugate(mu, length=k).parts)
    right = sl_invariant_dim(shapes, k)
    return left, right


def grassmann_duality_check(mus: Sequence[Sequence[int]], r: int, k: int) -> bool:
    """True iff SL(r) invariants of the mu^j match SL(k) invariants of the conjugates."""
    left, right = grassmann_duality_values(mus, r, k)
    return left == right


def ordinary_duality_check(mus: Sequence[Sequence[int]], r: int, k: int) -> bool:
    """True iff SL(r) invariants of the mu^j match those of dual(mu^j, k).

    Each mu^j is padded to r parts and must have mu_1 <= k.
    """
    padded = [tuple(trim(mu)) + (0,) * (r - len(trim(mu))) for mu in mus]
    if any(len(mu) > r for mu in padded):
        raise PreconditionError(f"Partitions must have at most {r} parts")
    duals = [dual(mu, k).parts for mu in padded]
    return sl_invariant_dim(padded, r) == sl_invariant_dim(duals, r)
