"""Characters, tensor products and invariant dimensions of classical groups.

Weight multiplicities come from Freudenthal's recursion on dominant
weights; tensor products from the Brauer-Klimyk rule

    V_lam x V_mu = sum over weights nu of V_lam of m_lam(nu) det(w) V_{w(nu + mu + rho) - rho},

where w moves nu + mu + rho into the dominant chamber and terms on a wall
are dropped. Everything is exact (Fraction coordinates, int multiplicities).
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..errors import InconsistencyError
from ..index import GroupSpec, Weight
from ..schubert import sl_invariant_dim
from .lie import (
    Vector,
    add,
    check_group,
    check_highest_weight,
    dominant_conjugate,
    dot,
    dual_weight,
    is_trivial,
    positive_roots,
    rho_vector,
    weyl_orbit,
)

logger = logging.getLogger("IsoHorn")


def _canonical(v: Sequence[Fraction], group: GroupSpec) -> Vector:
    """Type A highest weights are stored with last coordinate 0."""
    if group.family != "A":
        return tuple(v)
    shift = v[-1]
    return tuple(c - shift for c in v)


@dataclass
class LaurentCharacter:
    """Formal character: weight -> multiplicity.

    Attributes:
        group: The group the weights belong to
        multiplicities: Nonzero multiplicities keyed by epsilon coordinates
    """
    group: GroupSpec
    multiplicities: Dict[Vector, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities.values())

    @property
    def rank(self) -> int:
        return self.group.rank

    def dominant_part(self) -> Dict[Vector, int]:
        family = self.group.weyl_family
        return {v: m for v, m in self.multiplicities.items()
                if dominant_conjugate(v, family)[0] == v}

    def is_weyl_invariant(self) -> bool:
        family = self.group.weyl_family
        for v, m in self.multiplicities.items():
            if self.multiplicities.get(dominant_conjugate(v, family)[0], 0) != m:
                return False
        return True

    def __mul__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        product: Dict[Vector, int] = defaultdict(int)
        for u, a in self.multiplicities.items():
            for v, b in other.multiplicities.items():
                product[add(u, v)] += a * b
        return LaurentCharacter(self.group, {k: m for k, m in product.items() if m})

    def decompose(self) -> Dict[Vector, int]:
        """Split into irreducible characters by peeling off highest weights.

        Raises:
            InconsistencyError: The character is not a virtual sum of irreducibles
        """
        remaining = dict(self.multiplicities)
        rho = rho_vector(self.group)
        result: Dict[Vector, int] = {}
        while remaining:
            dominant = [v for v in remaining
                        if dominant_conjugate(v, self.group.weyl_family)[0] == v]
            if not dominant:
                raise InconsistencyError("Character has no dominant weight left",
                                         {"group": self.group.name})
            top = max(dominant, key=lambda v: dot(v, rho))
            count = remaining[top]
            highest = _canonical(top, self.group)
            result[highest] = count
            # Type A weights are stored with their true coordinate sum.
            offset = add(top, highest, -1)
            for v, m in _all_weights(self.group, highest).items():
                shifted = add(v, offset)
                left = remaining.get(shifted, 0) - count * m
                if left:
                    remaining[shifted] = left
                else:
                    remaining.pop(shifted, None)
        return result


@lru_cache(maxsize=None)
def _dominant_multiplicities(group: GroupSpec, lam: Vector) -> Dict[Vector, int]:
    """Freudenthal's recursion on the dominant weights of V_lam."""
    family = group.weyl_family
    roots = positive_roots(group)
    rho = rho_vector(group)

    seen = {lam}
    queue = [lam]
    while queue:
        mu = queue.pop()
        for alpha in roots:
            nu = add(mu, alpha, -1)
            if nu not in seen and dominant_conjugate(nu, family)[0] == nu:
                seen.add(nu)
                queue.append(nu)

    order = sorted(seen, key=lambda mu: dot(add(lam, mu, -1), rho))
    top = add(lam, rho)
    top_norm = dot(top, top)
    multiplicities = {lam: 1}
    for mu in order[1:]:
        total = Fraction(0)
        for alpha in roots:
            k = 1
            while True:
                nu = add(mu, alpha, k)
                image = dominant_conjugate(nu, family)[0]
                if image not in seen:
                    break
                total += multiplicities[image] * dot(nu, alpha)
                k += 1
        shifted = add(mu, rho)
        value = 2 * total / (top_norm - dot(shifted, shifted))
        if value.denominator != 1:
            raise InconsistencyError(f"Freudenthal recursion produced {value} at {mu}",
                                     {"group": group.name, "highest_weight": [str(c) for c in lam]})
        multiplicities[mu] = int(value)
    return multiplicities


@lru_cache(maxsize=None)
def _all_weights(group: GroupSpec, lam: Vector) -> Dict[Vector, int]:
    weights = {}
    for mu, m in _dominant_multiplicities(group, lam).items():
        for v in weyl_orbit(mu, group.weyl_family):
            weights[v] = m
    return weights


def character(group: GroupSpec, weight: Weight) -> LaurentCharacter:
    """The character of V_lam as a LaurentCharacter.

    Example:
        >>> character(GroupSpec("C", 2), fundamental_weight(GroupSpec("C", 2), 1)).dimension
        4
    """
    check_group(group)
    lam = check_highest_weight(weight, group)
    return LaurentCharacter(group, dict(_all_weights(group, lam)))


def weyl_dimension(group: GroupSpec, weight: Weight) -> int:
    """dim V_lam = prod over positive roots of (lam + rho, alpha) / (rho, alpha)."""
    check_group(group)
    lam = check_highest_weight(weight, group)
    return _weyl_dimension(group, lam)


def _weyl_dimension(group: GroupSpec, lam: Vector) -> int:
    rho = rho_vector(group)
    shifted = add(lam, rho)
    value = Fraction(1)
    for alpha in positive_roots(group):
        value *= dot(shifted, alpha) / dot(rho, alpha)
    return int(value)


@lru_cache(maxsize=None)
def _tensor(group: GroupSpec, lam: Vector, mu: Vector) -> Tuple[Tuple[Vector, int], ...]:
    if _weyl_dimension(group, lam) > _weyl_dimension(group, mu):
        lam, mu = mu, lam
    family = group.weyl_family
    rho = rho_vector(group)
    base = add(mu, rho)
    result: Dict[Vector, int] = defaultdict(int)
    for nu, m in _all_weights(group, lam).items():
        image, sign, singular = dominant_conjugate(add(base, nu), family)
        if singular:
            continue
        result[_canonical(add(image, rho, -1), group)] += sign * m
    terms = tuple(sorted((k, v) for k, v in result.items() if v))
    if any(v < 0 for _, v in terms):
        raise InconsistencyError("Negative multiplicity in a tensor product",
                                 {"group": group.name, "factors": [[str(c) for c in lam],
                                                                   [str(c) for c in mu]]})
    return terms


def tensor_decompose(group: GroupSpec, lam: Weight, mu: Weight) -> Dict[Weight, int]:
    """V_lam x V_mu as {highest weight: multiplicity}.

    Example:
        >>> sl2 = GroupSpec("A", 1)
        >>> {str(k): v for k, v in tensor_decompose(sl2, Weight((1, 0), sl2), Weight((1, 0), sl2)).items()}
        {'(0,0)': 1, '(2,0)': 1}
    """
    check_group(group)
    left = check_highest_weight(lam, group)
    right = check_highest_weight(mu, group)
    return {Weight(k, group): v for k, v in _tensor(group, left, right)}


def _fold(group: GroupSpec, weights: List[Vector]) -> Dict[Vector, int]:
    components: Dict[Vector, int] = {weights[0]: 1}
    for w in weights[1:]:
        following: Dict[Vector, int] = defaultdict(int)
        for hw, count in components.items():
            for target, m in _tensor(group, hw, w):
                following[target] += count * m
        components = dict(following)
    return components


def _as_partitions(weights: Sequence[Vector]) -> List[Tuple[int, ...]]:
    return [tuple(int(c) for c in w) for w in weights]


def invariant_dim(group: GroupSpec, weights: Sequence[Weight], cross_check: bool = True) -> int:
    """dim (V_{lam^1} x ... x V_{lam^s})^G.

    The first s-1 factors are folded with Brauer-Klimyk; the answer is the
    multiplicity of the dual of the last factor. For SL(N) the value is
    compared with the LR computation when cross_check is set.

    Raises:
        InvalidIndexError: A weight is not dominant or belongs to another group
        RankCapError: Rank or weight caps exceeded
        InconsistencyError: The SL(N) cross-check fails
    """
    check_group(group)
    coords = [check_highest_weight(w, group) for w in weights]
    family = group.weyl_family
    if not coords:
        return 1
    if len(coords) == 1:
        return 1 if is_trivial(coords[0], family) else 0

    target = check_highest_weight(dual_weight(Weight(coords[-1], group)), group)
    value = _fold(group, coords[:-1]).get(target, 0)

    if cross_check and group.family == "A":
        expected = sl_invariant_dim(_as_partitions(coords), group.coords)
        if expected != value:
            logger.error(f"SL invariant mismatch on {[str(w) for w in weights]}: "
                         f"characters {value}, LR {expected}")
            raise InconsistencyError("Character and LR invariant dimensions differ",
                                     {"weights": [[str(c) for c in w] for w in coords],
                                      "characters": value, "lr": expected})
    logger.debug(f"invariant_dim {group.name} {[str(w) for w in weights]} = {value}")
    return value
