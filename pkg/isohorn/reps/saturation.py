"""Saturation scans: invariants at some multiple N nu force invariants at 2 nu (4 nu for Spin)."""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional, Tuple

from ..constants import DEFAULT_FACTORS, DEFAULT_N_MAX
from ..errors import InvalidIndexError
from ..index import GroupSpec, Weight
from ..utils import ordered_map
from .characters import invariant_dim

logger = logging.getLogger("IsoHorn")


def saturation_factor(group: GroupSpec) -> int:
    """2 for Sp(2n) and SO(2n+1), 4 for Spin(2n+1)."""
    if group.family == "Spin":
        return 4
    if group.family in ("B", "C"):
        return 2
    raise InvalidIndexError(f"No saturation factor for {group.name}")


def dominant_weights(group: GroupSpec, bound: int) -> List[Weight]:
    """Dominant weights with coordinates at most bound; Spin adds the half-integral ones."""
    steps = [Fraction(k) for k in range(bound + 1)]
    candidates = [steps]
    if group.family == "Spin":
        candidates.append([Fraction(2 * k + 1, 2) for k in range(bound)])
    weights = []
    for values in candidates:
        for coords in itertools.combinations_with_replacement(reversed(values), group.rank):
            weights.append(Weight(coords, group))
    return weights


@dataclass
class SaturationOutcome:
    """Invariant data for one tuple nu."""
    nus: Tuple[Weight, ...]
    first_multiple: Optional[int]
    at_factor: int
    at_one: int
    at_two: int

    def as_dict(self) -> Dict:
        return {
            "nus": [str(nu) for nu in self.nus],
            "first_multiple": self.first_multiple,
            "at_factor": self.at_factor,
            "at_one": self.at_one,
            "at_two": self.at_two,
        }


@dataclass
class SaturationReport:
    """Summary of a saturation scan.

    Attributes:
        group: Group name
        bound: Coordinate bound of the scanned weights
        n_max: Largest multiple tried
        factor: Saturation factor being asserted
        tuples: Number of tuples scanned
        positive: Tuples with an invariant at some N nu, N <= n_max
        violations: Positive tuples with no invariant at factor * nu
        witnesses: Tuples with no invariant at nu but one at 2 nu
    """
    group: str
    bound: int
    n_max: int
    factor: int
    tuples: int = 0
    positive: int = 0
    violations: List[SaturationOutcome] = field(default_factory=list)
    witnesses: List[SaturationOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> Dict:
        return {
            "group": self.group,
            "bound": self.bound,
            "n_max": self.n_max,
            "factor": self.factor,
            "tuples": self.tuples,
            "positive": self.positive,
            "violations": [v.as_dict() for v in self.violations],
            "witnesses": [w.as_dict() for w in self.witnesses],
        }


def _scaled(nus: Tuple[Weight, ...], k: int) -> List[Weight]:
    return [nu.scaled(k) for nu in nus]


def _examine(nus: Tuple[Weight, ...], group: GroupSpec, n_max: int, factor: int) -> SaturationOutcome:
    values: Dict[int, int] = {}

    def at(k: int) -> int:
        if k not in values:
            values[k] = invariant_dim(group, _scaled(nus, k))
        return values[k]

    first = next((k for k in range(1, n_max + 1) if at(k)), None)
    if first is None:
        return SaturationOutcome(nus, None, 0, 0, 0)
    return SaturationOutcome(nus, first, at(factor), at(1), at(2))


def saturation_scan(group: GroupSpec, bound: int, n_max: int = DEFAULT_N_MAX,
                    s: int = DEFAULT_FACTORS, workers: int = 1) -> SaturationReport:
    """Scan all s-tuples of dominant weights with coordinates <= bound.

    Whenever some N nu (N <= n_max) has invariants, factor * nu must have
    them too. Tuples with no invariant at nu but one at 2 nu are collected
    as witnesses that a factor is needed at all.
    """
    factor = saturation_factor(group)
    report = SaturationReport(group.name, bound, n_max, factor)
    combos = list(itertools.combinations_with_replacement(dominant_weights(group, bound), s))
    outcomes = ordered_map(partial(_examine, group=group, n_max=n_max, factor=factor),
                           combos, workers)
    for outcome in outcomes:
        report.tuples += 1
        if outcome.first_multiple is None:
            continue
        report.positive += 1
        if outcome.at_factor == 0:
            logger.error(f"Saturation violation: {outcome.as_dict()}")
            report.violations.append(outcome)
        if outcome.at_one == 0 and outcome.at_two > 0:
            report.witnesses.append(outcome)
    logger.info(f"Saturation scan {group.name}, bound {bound}, N <= {n_max}: "
                f"{report.tuples} tuples, {report.positive} positive, "
                f"{len(report.violations)} violations, {len(report.witnesses)} witnesses")
    return report
