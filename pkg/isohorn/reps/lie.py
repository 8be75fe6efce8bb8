"""Root data and Weyl group action for the classical groups, in epsilon coordinates.

All inner products are the standard one on the epsilon coordinates. For
SL(N) weights carry N coordinates and two weights with the same
coordinate sum are compared directly; the (1, ..., 1) direction never
enters a Freudenthal or Weyl-dimension ratio because every root is
orthogonal to it.
"""

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Optional, Sequence, Tuple

from ..constants import RANK_CAP, WEIGHT_CAP
from ..errors import InvalidIndexError, RankCapError
from ..index import GroupSpec, Weight, rho

Vector = Tuple[Fraction, ...]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction], k=1) -> Vector:
    return tuple(a + k * b for a, b in zip(u, v))


@lru_cache(maxsize=None)
def positive_roots(group: GroupSpec) -> Tuple[Vector, ...]:
    """Positive roots: e_i - e_j, plus e_i + e_j and e_i (B, Spin) or 2 e_i (C)."""
    size = group.coords
    zero = [Fraction(0)] * size

    def vector(*entries):
        v = list(zero)
        for position, value in entries:
            v[position] += value
        return tuple(v)

    roots = [vector((i, 1), (j, -1)) for i, j in itertools.combinations(range(size), 2)]
    if group.family == "A":
        return tuple(roots)
    roots += [vector((i, 1), (j, 1)) for i, j in itertools.combinations(range(size), 2)]
    short = 2 if group.family == "C" else 1
    roots += [vector((i, short)) for i in range(size)]
    return tuple(roots)


def rho_vector(group: GroupSpec) -> Vector:
    return rho(group).coords


def check_group(group: GroupSpec, rank_cap: int = RANK_CAP) -> None:
    if group.rank > rank_cap:
        raise RankCapError(f"{group.name} has rank {group.rank}, above the cap of {rank_cap}")


def check_highest_weight(weight: Weight, group: Optional[GroupSpec] = None,
                         weight_cap: int = WEIGHT_CAP) -> Vector:
    """Validate a highest weight and return its coordinates.

    Raises:
        InvalidIndexError: Wrong group, not integral or not dominant
        RankCapError: A coordinate exceeds the weight cap
    """
    if group is not None and weight.group != group:
        raise InvalidIndexError(f"Weight {weight} belongs to {weight.group.name}, not {group.name}")
    if not weight.is_integral():
        raise InvalidIndexError(f"{weight} is not an integral weight of {weight.group.name}")
    if not weight.is_dominant():
        raise InvalidIndexError(f"{weight} is not dominant for {weight.group.name}")
    normalized = weight.normalized()
    if any(abs(c) > weight_cap for c in normalized.coords):
        raise RankCapError(f"{weight} has a coordinate above the weight cap {weight_cap}")
    return normalized.coords


def _permutation_sign(values: Sequence) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(values)), 2):
        if values[i] < values[j]:
            sign = -sign
    return sign


def dominant_conjugate(v: Sequence[Fraction], family: str) -> Tuple[Vector, int, bool]:
    """Move v into the dominant chamber.

    Returns:
        (dominant vector, determinant of a Weyl element doing it,
        True iff v lies on a reflecting hyperplane)
    """
    if family == "A":
        target = tuple(sorted(v, reverse=True))
        singular = len(set(target)) < len(target)
        return target, _permutation_sign(v), singular
    negatives = sum(1 for c in v if c < 0)
    magnitudes = [abs(c) for c in v]
    target = tuple(sorted(magnitudes, reverse=True))
    singular = 0 in magnitudes or len(set(magnitudes)) < len(magnitudes)
    sign = _permutation_sign(magnitudes) * (-1) ** negatives
    return target, sign, singular


def weyl_orbit(v: Sequence[Fraction], family: str) -> FrozenSet[Vector]:
    """W-orbit of v: all permutations (type A) or signed permutations."""
    if family == "A":
        return frozenset(itertools.permutations(v))
    orbit = set()
    for perm in itertools.permutations(v):
        for signs in itertools.product((1, -1), repeat=len(v)):
            orbit.add(tuple(s * c for s, c in zip(signs, perm)))
    return frozenset(orbit)


def dual_weight(weight: Weight) -> Weight:
    """Highest weight of the dual representation; -w_0 is the identity outside type A."""
    if weight.group.family != "A":
        return weight
    coords = tuple(-c for c in reversed(weight.coords))
    return Weight(coords, weight.group).normalized()


def is_trivial(v: Sequence[Fraction], family: str) -> bool:
    """v is the highest weight of the trivial representation."""
    if family == "A":
        return len(set(v)) <= 1
    return all(c == 0 for c in v)
