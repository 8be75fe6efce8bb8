"""Transfer of tensor invariants from SL(N) to Sp(2n) and SO(2n+1).

A nonzero SL(2n) (resp. SL(2n+1)) invariant in V_{lam^1} x ... x V_{lam^s}
forces a nonzero Sp(2n) (resp. SO(2n+1)) invariant in the product of the
restricted highest weights. The walk check feeds the transfer with
2n-flips of partitions whose sizes add up to 2nr.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from ..constants import DEFAULT_FACTORS
from ..errors import InconsistencyError, InvalidIndexError, PreconditionError
from ..index import GroupSpec, Weight, flip, partitions_in_box, restrict_weight
from ..schubert import sl_invariant_dim
from ..utils import ordered_map
from .characters import invariant_dim

logger = logging.getLogger("IsoHorn")


@dataclass
class TransferRecord:
    """Invariant dimensions on both sides of a restriction.

    Attributes:
        source: Name of the SL(N) group
        target: Name of the restricted group
        weights: Highest weights on the SL(N) side
        restricted: Their restrictions
        source_dim: SL(N) invariant dimension
        target_dim: Invariant dimension after restriction
    """
    source: str
    target: str
    weights: Tuple[Weight, ...]
    restricted: Tuple[Weight, ...]
    source_dim: int
    target_dim: int

    @property
    def passed(self) -> bool:
        return self.target_dim > 0

    def as_dict(self) -> Dict:
        return {
            "source": self.source,
            "target": self.target,
            "weights": [str(w) for w in self.weights],
            "restricted": [str(w) for w in self.restricted],
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
        }


def _target_group(source: GroupSpec, target: Optional[str]) -> GroupSpec:
    N = source.coords
    family = "C" if N % 2 == 0 else "B"
    if target is not None and target != family:
        raise InvalidIndexError(f"SL({N}) restricts to type {family}, not {target}")
    return GroupSpec(family, N // 2)


def clef_transfer_check(weights: Sequence[Weight], target: Optional[str] = None) -> TransferRecord:
    """Check that an SL(N) invariant survives restriction to Sp(2n) or SO(2n+1).

    Args:
        weights: Dominant SL(N) weights, N = 2n or 2n + 1
        target: "C" or "B"; inferred from the parity of N when omitted

    Raises:
        PreconditionError: The SL(N) invariant space is zero
        InconsistencyError: The restricted invariant space is zero
    """
    if not weights:
        raise InvalidIndexError("Need at least one weight")
    source = weights[0].group
    if source.family != "A" or any(w.group != source for w in weights):
        raise InvalidIndexError("All weights must belong to the same SL(N)")
    group = _target_group(source, target)

    source_dim = invariant_dim(source, weights)
    if source_dim == 0:
        raise PreconditionError(f"{source.name} invariant of {[str(w) for w in weights]} is zero")
    restricted = tuple(restrict_weight(w) for w in weights)
    target_dim = invariant_dim(group, restricted)
    record = TransferRecord(source.name, group.name, tuple(weights), restricted,
                            source_dim, target_dim)
    if not record.passed:
        logger.error(f"Invariant lost under restriction: {record.as_dict()}")
        raise InconsistencyError("Restricted invariant space is zero", record.as_dict())
    return record


def _sl_weights(N: int, total_bound: int) -> List[Tuple[int, ...]]:
    shapes = []
    for mu in partitions_in_box(N - 1, total_bound):
        if mu.size <= total_bound:
            shapes.append(mu.parts + (0,))
    return shapes


def clef_scan(n: int, family: str = "C", total_bound: int = 6, s: int = DEFAULT_FACTORS,
              workers: int = 1) -> Dict[str, int]:
    """Run clef_transfer_check over every SL(N) s-tuple with sum |lam^j| <= total_bound.

    Returns:
        Counts of the tuples examined and of those with a nonzero SL(N) invariant

    Raises:
        InconsistencyError: On a restriction that loses the invariant
    """
    N = 2 * n if family == "C" else 2 * n + 1
    source = GroupSpec("A", N - 1)
    applicable = []
    examined = 0
    for combo in itertools.combinations_with_replacement(_sl_weights(N, total_bound), s):
        if sum(sum(w) for w in combo) > total_bound:
            continue
        examined += 1
        if sl_invariant_dim(combo, N):
            applicable.append(tuple(Weight(w, source) for w in combo))
    ordered_map(partial(clef_transfer_check, target=family), applicable, workers)
    counts = {"tuples": examined, "applicable": len(applicable)}
    logger.info(f"Transfer scan SL({N}) -> {GroupSpec(family, n).name}: {counts}")
    return counts


@dataclass
class WalkRecord:
    """SL(r) side and Sp(2n) side of the flip-and-restrict construction."""
    mus: Tuple[Tuple[int, ...], ...]
    nus: Tuple[Weight, ...]
    sl_dim: int
    sp_dim: int

    @property
    def passed(self) -> bool:
        return self.sp_dim > 0

    def as_dict(self) -> Dict:
        return {
            "mus": [list(mu) for mu in self.mus],
            "nus": [str(nu) for nu in self.nus],
            "sl_dim": self.sl_dim,
            "sp_dim": self.sp_dim,
        }


def walk_check(mus: Sequence[Sequence[int]], n: int) -> WalkRecord:
    """Flip each mu^j at 2n, restrict to Sp(2n) and check the invariant is nonzero.

    Args:
        mus: s partitions with r parts and width <= 2n, sum |mu^j| = 2nr

    Raises:
        PreconditionError: Wrong sizes or a zero SL(r) invariant
        InconsistencyError: Flip is not an involution, the restricted weight
            is not dominant, or the Sp(2n) invariant vanishes
    """
    mus = tuple(tuple(int(x) for x in mu) for mu in mus)
    if not mus:
        raise PreconditionError("Need at least one partition")
    r = len(mus[0])
    if r < 1 or any(len(mu) != r for mu in mus):
        raise PreconditionError("All partitions must have the same positive number of parts")
    if any(mu and mu[0] > 2 * n for mu in mus):
        raise PreconditionError(f"Partitions must have width at most {2 * n}")
    total = sum(sum(mu) for mu in mus)
    if total != 2 * n * r:
        raise PreconditionError(f"Sizes add up to {total}, not 2nr = {2 * n * r}")
    sl_dim = sl_invariant_dim(mus, r)
    if sl_dim == 0:
        raise PreconditionError(f"SL({r}) invariant of {[list(mu) for mu in mus]} is zero")

    source = GroupSpec("A", 2 * n - 1)
    nus = []
    for mu in mus:
        lam = flip(mu, 2 * n)
        if flip(lam, r).parts != mu:
            raise InconsistencyError("flip is not an involution", {"mu": list(mu), "n": n})
        nu = restrict_weight(Weight(lam.parts, source))
        if not nu.is_dominant():
            raise InconsistencyError("Restricted flip is not dominant",
                                     {"mu": list(mu), "nu": str(nu)})
        nus.append(nu)

    record = WalkRecord(mus, tuple(nus), sl_dim, invariant_dim(GroupSpec("C", n), nus))
    if not record.passed:
        logger.error(f"walk check failed: {record.as_dict()}")
        raise InconsistencyError("Sp invariant of the flipped weights is zero", record.as_dict())
    return record


def walk_scan(n: int, r: int, s: int = DEFAULT_FACTORS, workers: int = 1) -> Dict[str, int]:
    """Run walk_check on every s-tuple of width-2n partitions with r parts and sum 2nr."""
    applicable = []
    examined = 0
    shapes = [mu.parts for mu in partitions_in_box(r, 2 * n)]
    for combo in itertools.combinations_with_replacement(shapes, s):
        if sum(sum(mu) for mu in combo) != 2 * n * r:
            continue
        examined += 1
        if sl_invariant_dim(combo, r):
            applicable.append(combo)
    ordered_map(partial(walk_check, n=n), applicable, workers)
    counts = {"tuples": examined, "applicable": len(applicable)}
    logger.info(f"Walk scan n={n}, r={r}: {counts}")
    return counts
