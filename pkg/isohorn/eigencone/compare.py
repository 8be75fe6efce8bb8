"""Cross-checks of eigencones: Sp(2n) / SO(2n+1) against SU(N), and cones against invariants."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..constants import DEFAULT_FACTORS, DEFAULT_N_MAX, DEFAULT_SAMPLES, DEFAULT_SEED, SAMPLE_DENOMINATOR
from ..errors import InconsistencyError, InvalidIndexError
from ..flags import derive_seed
from ..index import (
    AIndex,
    BIndex,
    CIndex,
    Coweight,
    GroupSpec,
    Weight,
    isotropic_subsets,
    orthogonal_subsets,
    weyl_element,
)
from ..reps import invariant_dim
from .inequalities import InequalitySystem, inequality_system, membership

logger = logging.getLogger("IsoHorn")


def embed_coweight(h: Coweight) -> Coweight:
    """Sp(2n) -> SU(2n): (h, -rev h); SO(2n+1) -> SU(2n+1): (h, 0, -rev h)."""
    family = h.group.family
    if family not in ("B", "C", "Spin"):
        raise InvalidIndexError(f"Cannot embed a {h.group.name} coweight")
    middle = (Fraction(0),) if family != "C" else ()
    coords = h.coords + middle + tuple(-c for c in reversed(h.coords))
    return Coweight(coords, GroupSpec("A", len(coords) - 1))


@dataclass(frozen=True)
class OmegaValues:
    """omega_m(v_I^{-1} h~) and omega_m(w_I^{-1} h) for one (I, h)."""
    type_a: Fraction
    isotropic: Fraction


def omega_identity_check(index: Union[CIndex, BIndex], h: Coweight) -> OmegaValues:
    """Evaluate omega_m at v_I^{-1} of the embedded coweight and at w_I^{-1} h.

    Raises:
        InvalidIndexError: The index and coweight belong to different groups
        InconsistencyError: The two values differ
    """
    family = "C" if isinstance(index, CIndex) else "B"
    if h.group.weyl_family != family or h.group.rank != index.n:
        raise InvalidIndexError(f"{index} and {h} belong to different groups")
    embedded = embed_coweight(h).coords
    v = weyl_element(AIndex(index.elements, index.ambient))
    # (v^{-1} x)_a = x_{v(a)}
    type_a = sum((embedded[v[a] - 1] for a in range(index.r)), Fraction(0))
    moved = weyl_element(index, family).inverse().act(h.coords)
    isotropic = sum(moved[:index.r], Fraction(0))
    if type_a != isotropic:
        logger.error(f"omega identity fails at {index}, h = {h}: {type_a} != {isotropic}")
        raise InconsistencyError("omega identity violated",
                                 {"index": list(index.elements), "h": str(h),
                                  "type_a": str(type_a), "isotropic": str(isotropic)})
    return OmegaValues(type_a, isotropic)


@dataclass
class ConeComparison:
    """Result of compare_cones for one group pair.

    Attributes:
        group: Sp(2n) or SO(2n+1)
        ambient: SU(2n) or SU(2n+1)
        samples: Sampled points
        members: Points in the smaller cone
        facet_points: Points built to lie on an inequality hyperplane
        omega_pairs: (I, h) pairs on which the omega identity was checked
        disagreements: Points where the two systems differ
    """
    group: str
    ambient: str
    s: int
    seed: int
    samples: int = 0
    members: int = 0
    facet_points: int = 0
    omega_pairs: int = 0
    disagreements: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def as_dict(self) -> Dict:
        return {
            "group": self.group,
            "ambient": self.ambient,
            "s": self.s,
            "seed": self.seed,
            "samples": self.samples,
            "members": self.members,
            "facet_points": self.facet_points,
            "omega_pairs": self.omega_pairs,
            "disagreements": self.disagreements,
        }


def _random_dominant(rng: np.random.Generator, group: GroupSpec, degenerate: bool) -> Coweight:
    top = 2 if degenerate else 12
    values = sorted((int(x) for x in rng.integers(0, top + 1, size=group.rank)), reverse=True)
    denominator = int(rng.integers(1, SAMPLE_DENOMINATOR + 1))
    return Coweight(tuple(Fraction(v, denominator) for v in values), group)


def _random_tuple(rng, group: GroupSpec, s: int, degenerate: bool = False) -> Tuple[Coweight, ...]:
    return tuple(_random_dominant(rng, group, degenerate) for _ in range(s))


def _facet_point(rng, group: GroupSpec, system: InequalitySystem, attempts: int = 8):
    """A point of (h_+)^s on the hyperplane of a random inequality, or None."""
    for _ in range(attempts):
        ineq = system.inequalities[int(rng.integers(0, len(system.inequalities)))]
        p = _random_tuple(rng, group, system.s)
        q = _random_tuple(rng, group, system.s)
        fp, fq = ineq.evaluate(p), ineq.evaluate(q)
        if fp == fq or (fp > 0) == (fq > 0) or fp == 0:
            continue
        t = fp / (fp - fq)
        point = tuple(Coweight(tuple(a + t * (b - a) for a, b in zip(x.coords, y.coords)), group)
                      for x, y in zip(p, q))
        return point
    return None


def compare_cones(n: int, s: int = DEFAULT_FACTORS, samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED, family: str = "C") -> ConeComparison:
    """Compare membership in Gamma(s, Sp(2n)) (or SO(2n+1)) with membership in Gamma(s, SU(N)).

    Points mix interior samples, points on random inequality hyperplanes and
    points with repeated or zero coordinates. Every sampled h_j is also used
    to check the omega identity against every Schubert index.

    Raises:
        InvalidIndexError: Unknown family or n out of range
    """
    if family not in ("B", "C"):
        raise InvalidIndexError(f"compare_cones needs family B or C, got {family!r}")
    if not 1 <= n <= 3:
        raise InvalidIndexError(f"compare_cones supports 1 <= n <= 3, got {n}")
    group = GroupSpec(family, n)
    ambient = GroupSpec("A", (2 * n if family == "C" else 2 * n + 1) - 1)
    small = inequality_system(group, s)
    big = inequality_system(ambient, s)
    indices = [index for r in range(1, n + 1)
               for index in (isotropic_subsets(r, n) if family == "C" else orthogonal_subsets(r, n))]

    report = ConeComparison(group.name, ambient.name, s, seed)
    rng = np.random.default_rng(derive_seed(seed, n, s, ord(family)))
    for k in range(samples):
        kind = k % 3
        point = None
        if kind == 1:
            point = _facet_point(rng, group, small)
            if point is not None:
                report.facet_points += 1
        if point is None:
            point = _random_tuple(rng, group, s, degenerate=(kind == 2))

        inside = small.contains(point)
        embedded = tuple(embed_coweight(h) for h in point)
        outside_view = big.contains(embedded)
        report.samples += 1
        report.members += inside
        if inside != outside_view:
            record = {"point": [str(h) for h in point], group.name: inside, ambient.name: outside_view}
            logger.error(f"Cone verdicts differ: {record}")
            report.disagreements.append(record)

        for h in point:
            for index in indices:
                omega_identity_check(index, h)
                report.omega_pairs += 1

    logger.info(f"compare_cones {group.name} vs {ambient.name}, s={s}: {report.samples} samples, "
                f"{report.members} members, {len(report.disagreements)} disagreements")
    return report


def kappa_inverse(weight: Weight) -> Coweight:
    """Coweight with the coordinates of a weight; type A is made traceless."""
    coords = weight.coords
    if weight.group.family == "A":
        mean = sum(coords, Fraction(0)) / len(coords)
        coords = tuple(c - mean for c in coords)
    return Coweight(coords, weight.group)


@dataclass
class WeightConeRecord:
    """Cone membership of kappa^{-1}(lambda) against invariants at N lambda."""
    member: bool
    first_multiple: Optional[int]
    n_max: int

    @property
    def rep_positive(self) -> bool:
        return self.first_multiple is not None

    @property
    def scan_limited(self) -> bool:
        return self.member and not self.rep_positive

    def as_dict(self) -> Dict:
        return {
            "member": self.member,
            "rep_positive": self.rep_positive,
            "first_multiple": self.first_multiple,
            "n_max": self.n_max,
            "scan_limited": self.scan_limited,
        }


def weight_cone_cross_check(group: GroupSpec, weights: Sequence[Weight],
                            n_max: int = DEFAULT_N_MAX) -> WeightConeRecord:
    """Invariants at some N lambda (N <= n_max) must put kappa^{-1}(lambda) in the cone.

    A cone member without invariants up to n_max is reported as scan-limited.

    Raises:
        InconsistencyError: Invariants exist but the point is outside the cone
    """
    first = next((k for k in range(1, n_max + 1)
                  if invariant_dim(group, [w.scaled(k) for w in weights])), None)
    member = membership(group, [kappa_inverse(w) for w in weights])
    record = WeightConeRecord(member, first, n_max)
    if record.rep_positive and not member:
        logger.error(f"Invariants without cone membership: {[str(w) for w in weights]}")
        raise InconsistencyError("Weights with invariants lie outside the eigencone",
                                 {"group": group.name, "weights": [str(w) for w in weights],
                                  **record.as_dict()})
    if record.scan_limited:
        logger.warning(f"{[str(w) for w in weights]} is a cone member with no invariant up to N={n_max}")
    return record

