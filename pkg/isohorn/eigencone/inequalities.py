"""Eigencone inequalities for SU(N), Sp(2n) and SO(2n+1).

For a maximal parabolic P (node r) and a tuple (w_1, ..., w_s) of minimal
coset representatives whose Schubert classes multiply to d [point], d != 0,
every member of the eigencone satisfies

    omega_r(w_1^{-1} h_1 + ... + w_s^{-1} h_s) <= 0.

omega_r(w^{-1} h) = <w omega_r, h>, so the coefficients of the functional
on h_j are the coordinates of w_j omega_r. Tuples are indexed by Schubert
indices: AIndex for SU(N), CIndex for Sp(2n), BIndex for SO(2n+1) and Spin.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..constants import CONE_SIZE_CAP, DEFAULT_FACTORS, RANK_CAP
from ..coinvariant import (
    ig_nonvanishing,
    ig_point_coefficient,
    og_nonvanishing,
    og_point_coefficient,
)
from ..errors import InvalidIndexError, RankCapError
from ..index import (
    Coweight,
    GroupSpec,
    cell_stats,
    cell_stats_b,
    gr_dimension,
    ig_dimension,
    isotropic_subsets,
    og_dimension,
    orthogonal_subsets,
    subsets,
    weyl_element,
)
from ..schubert import gr_nonvanishing, point_coefficient
from ..utils import ordered_map

logger = logging.getLogger("IsoHorn")

INT64_SAFE = 2 ** 40


@dataclass(frozen=True)
class EigenInequality:
    """One functional h -> sum_j <w_j omega_r, h_j>, required to be <= 0.

    Attributes:
        group: Group whose Cartan the h_j live in
        node: The maximal parabolic, as a simple root index r
        indices: Schubert indices of the w_j
        coefficients: Coordinates of w_j omega_r, one vector per factor
        degree: The point coefficient d, or 0 for a tuple whose product is
            merely nonzero
    """
    group: GroupSpec
    node: int
    indices: Tuple
    coefficients: Tuple[Tuple[int, ...], ...]
    degree: int

    @property
    def weyl_elements(self) -> Tuple:
        return tuple(weyl_element(index) for index in self.indices)

    def evaluate(self, h: Sequence[Coweight]) -> Fraction:
        total = Fraction(0)
        for coeffs, x in zip(self.coefficients, h):
            total += sum((c * v for c, v in zip(coeffs, x.coords)), Fraction(0))
        return total

    def holds(self, h: Sequence[Coweight]) -> bool:
        return self.evaluate(h) <= 0

    def as_dict(self) -> Dict:
        return {
            "node": self.node,
            "indices": [str(index) for index in self.indices],
            "coefficients": [list(c) for c in self.coefficients],
            "degree": self.degree,
        }

    def __str__(self) -> str:
        terms = []
        for j, coeffs in enumerate(self.coefficients, start=1):
            for k, c in enumerate(coeffs, start=1):
                if c:
                    terms.append(f"{'+' if c > 0 else '-'}{'' if abs(c) == 1 else abs(c)}h{j}_{k}")
        body = " ".join(terms) if terms else "0"
        return f"{body} <= 0"


def check_cone_group(group: GroupSpec) -> None:
    """Raises RankCapError above the desk caps."""
    if group.family == "A":
        if group.coords > CONE_SIZE_CAP:
            raise RankCapError(f"{group.name} exceeds the cone cap SU({CONE_SIZE_CAP})")
    elif group.rank > RANK_CAP:
        raise RankCapError(f"{group.name} has rank {group.rank}, above the cap of {RANK_CAP}")


def omega_vector(size: int, r: int) -> Tuple[int, ...]:
    """omega_r = e_1 + ... + e_r; only its W_P-invariance and sign matter."""
    return tuple(1 if k < r else 0 for k in range(size))


def _coefficients(index, group: GroupSpec) -> Tuple[int, ...]:
    if group.family == "A":
        v = weyl_element(index)
        coeffs = [0] * group.coords
        for a in range(index.cardinality):
            coeffs[v[a] - 1] += 1
        return tuple(coeffs)
    w = weyl_element(index)
    return tuple(int(c) for c in w.act(omega_vector(group.rank, index.r)))


def _candidates(group: GroupSpec, r: int):
    """(indices, codimension, dimension, point coefficient, nonvanishing) for node r."""
    if group.family == "A":
        N = group.coords
        return (list(subsets(r, N)), lambda i: i.codim, gr_dimension(r, N),
                lambda combo: point_coefficient(combo, r, N),
                lambda combo: gr_nonvanishing(combo, r, N))
    n = group.rank
    if group.family == "C":
        return (list(isotropic_subsets(r, n)), lambda i: cell_stats(i).codim, ig_dimension(r, n),
                lambda combo: ig_point_coefficient(combo, n),
                lambda combo: ig_nonvanishing(combo, n))
    return (list(orthogonal_subsets(r, n)), lambda j: cell_stats_b(j).codim, og_dimension(r, n),
            lambda combo: og_point_coefficient(combo, n),
            lambda combo: og_nonvanishing(combo, n))


def _node_inequalities(r: int, group: GroupSpec, s: int, nonvanishing: bool) -> List[EigenInequality]:
    candidates, codim, dimension, point, nonzero = _candidates(group, r)
    found = []
    for combo in itertools.combinations_with_replacement(candidates, s):
        total = sum(codim(index) for index in combo)
        if total > dimension or (total < dimension and not nonvanishing):
            continue
        degree = point(combo) if total == dimension else 0
        if total == dimension and degree == 0:
            continue
        if total < dimension and not nonzero(combo):
            continue
        for order in sorted(set(itertools.permutations(combo)), key=lambda t: [i.elements for i in t]):
            coeffs = tuple(_coefficients(index, group) for index in order)
            found.append(EigenInequality(group, r, order, coeffs, degree))
    logger.debug(f"{group.name} node {r}: {len(found)} inequalities")
    return found


@lru_cache(maxsize=None)
def _generate(group: GroupSpec, s: int, nonvanishing: bool, workers: int) -> Tuple[EigenInequality, ...]:
    nodes = list(range(1, group.rank + 1))
    per_node = ordered_map(partial(_node_inequalities, group=group, s=s, nonvanishing=nonvanishing),
                           nodes, workers)
    return tuple(itertools.chain.from_iterable(per_node))


def _cone_group(group: GroupSpec) -> GroupSpec:
    # Spin(2n+1) and SO(2n+1) share a Lie algebra.
    return GroupSpec("B", group.rank) if group.family == "Spin" else group


def generate_inequalities(group: GroupSpec, s: int = DEFAULT_FACTORS, nonvanishing: bool = False,
                          workers: int = 1) -> List[EigenInequality]:
    """All inequalities of the eigencone Gamma(s, K), possibly redundant.

    Args:
        group: SL(N) stands for SU(N); Sp, SO and Spin for their compact forms
        s: Number of factors
        nonvanishing: Use every tuple with nonzero product in H*(G/P), not
            only those with a nonzero point coefficient

    Raises:
        RankCapError: Above the desk caps
    """
    check_cone_group(group)
    if s < 1:
        raise InvalidIndexError(f"Need at least one factor, got s={s}")
    inequalities = list(_generate(_cone_group(group), s, nonvanishing, workers))
    logger.info(f"{group.name}, s={s}{' (nonvanishing)' if nonvanishing else ''}: "
                f"{len(inequalities)} inequalities")
    return inequalities


def check_dominant(h: Coweight, group: GroupSpec) -> None:
    """h lies in the positive Weyl chamber of the group (traceless for SU(N)).

    Raises:
        InvalidIndexError: Otherwise
    """
    if h.group.coords != group.coords:
        raise InvalidIndexError(f"{h} does not have {group.coords} coordinates for {group.name}")
    c = h.coords
    if any(b > a for a, b in zip(c, c[1:])):
        raise InvalidIndexError(f"{h} is not weakly decreasing")
    if group.family == "A":
        if sum(c) != 0:
            raise InvalidIndexError(f"{h} is not traceless")
    elif c and c[-1] < 0:
        raise InvalidIndexError(f"{h} has a negative last coordinate")


def _integer_point(h: Sequence[Coweight]) -> np.ndarray:
    """Concatenate the h_j and clear denominators; membership is scale invariant.

    Small entries go to int64, anything that could overflow a row sum stays
    as Python ints.
    """
    values = [c for x in h for c in x.coords]
    scale = lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * scale) for v in values]
    if all(abs(v) < INT64_SAFE for v in ints):
        return np.array(ints, dtype=np.int64)
    return np.array(ints, dtype=object)


class InequalitySystem:
    """The inequalities of one (group, s) as a matrix H with members satisfying H @ pt >= 0.

    Rows are the negated functionals with duplicates removed; entries are
    small integers and points are scaled to integers, so the test is exact.
    """

    def __init__(self, group: GroupSpec, s: int = DEFAULT_FACTORS, nonvanishing: bool = False,
                 workers: int = 1):
        self.group = group
        self.s = s
        self.inequalities = generate_inequalities(group, s, nonvanishing, workers)
        rows = {tuple(-c for coeffs in ineq.coefficients for c in coeffs)
                for ineq in self.inequalities}
        width = s * group.coords
        self.hyperplanes = np.array(sorted(rows), dtype=np.int64).reshape(len(rows), width)

    def __repr__(self) -> str:
        return f"InequalitySystem({self.group.name}, s={self.s}, rows={len(self.hyperplanes)})"

    def contains(self, h: Sequence[Coweight]) -> bool:
        if len(h) != self.s:
            raise InvalidIndexError(f"Expected {self.s} coweights, got {len(h)}")
        for x in h:
            check_dominant(x, self.group)
        if not len(self.hyperplanes):
            return True
        return bool(np.all(self.hyperplanes.dot(_integer_point(h)) >= 0))

    def violated(self, h: Sequence[Coweight]) -> List[EigenInequality]:
        return [ineq for ineq in self.inequalities if not ineq.holds(h)]


@lru_cache(maxsize=None)
def inequality_system(group: GroupSpec, s: int = DEFAULT_FACTORS,
                      nonvanishing: bool = False) -> InequalitySystem:
    return InequalitySystem(group, s, nonvanishing)


def membership(group: GroupSpec, h: Sequence[Coweight], s: Optional[int] = None) -> bool:
    """True iff (h_1, ..., h_s) lies in the eigencone Gamma(s, K).

    Raises:
        InvalidIndexError: Some h_j is not dominant
    """
    s = len(h) if s is None else s
    return inequality_system(group, s).contains(h)


def dual_coweight(h: Coweight) -> Coweight:
    """Dominant representative of -h."""
    if h.group.family == "A":
        return Coweight(tuple(-c for c in reversed(h.coords)), h.group)
    return h
