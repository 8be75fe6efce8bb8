"""Deformed-product nonvanishing and the recursive Horn criteria for IG and OG.

For s Schubert classes on IG(r, 2n) (resp. OG(r, 2n+1)) whose codimensions
add up to the dimension, the point coefficient of the deformed product is
nonzero iff the ordinary one is and the cosym^2 (resp. co-wedge^2) counts
add up to dim IG(r, 2r) (resp. dim OG(r, 2r)). The recursive criteria
compare this with SL(r) invariants of the attached partitions and with a
product on a smaller isotropic Grassmannian.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..constants import DEFAULT_SEED, DEFAULT_TRIALS
from ..errors import InconsistencyError, PreconditionError
from ..flags import Field, constraint_data, derive_seed, random_flag
from ..flags import sym2_constrained_dim, wedge2_constrained_dim
from ..index import (
    BIndex,
    CIndex,
    GroupSpec,
    ThetaValues,
    cell_stats,
    cell_stats_b,
    chi,
    dominance_count,
    ig_dimension,
    isotropic_subsets,
    mubar,
    og_dimension,
    og_plus_compress,
    og_triple_bijection,
    orthogonal_subsets,
    reindex_io,
    reindex_jo,
    rho,
    theta_values,
    weyl_element,
)
from ..schubert import horn_inequality_check, sl_invariant_dim
from .isotropic import (
    ig_nonvanishing,
    ig_point_coefficient,
    og_point_coefficient,
    parabolic_product,
)

logger = logging.getLogger("IsoHorn")


@dataclass(frozen=True)
class ChiEvaluation:
    """(rho + w_I^{-1} rho)(e1bar + ... + erbar), evaluated two ways."""
    direct: Fraction
    codim_sum: int


def _sum_first(values: Sequence[Fraction], r: int) -> Fraction:
    return sum(values[:r], Fraction(0))


def chi_eval(index: CIndex, r: int, n: int) -> ChiEvaluation:
    """Evaluate chi_{w_I} on e1bar + ... + erbar and compare with codim(I) + codim(I_o).

    Raises:
        PreconditionError: I is not in FS(r, 2n)
        InconsistencyError: The two evaluations differ
    """
    if index.r != r or index.n != n:
        raise PreconditionError(f"{index} is not an index of FS({r},{2 * n})")
    direct = _sum_first(chi(weyl_element(index, "C")), r)
    codim_sum = cell_stats(index).codim + cell_stats(reindex_io(index)).codim
    if direct != codim_sum:
        logger.error(f"chi evaluation mismatch at {index}: {direct} != {codim_sum}")
        raise InconsistencyError("chi evaluation differs from the codimension sum",
                                 {"index": list(index.elements), "direct": str(direct),
                                  "codim_sum": codim_sum})
    return ChiEvaluation(direct, codim_sum)


def _check_c_tuple(indices: Sequence[CIndex], r: int, n: int) -> None:
    if not 1 <= r <= n:
        raise PreconditionError(f"Need 1 <= r <= n, got r={r}, n={n}")
    for index in indices:
        if not isinstance(index, CIndex) or index.r != r or index.n != n:
            raise PreconditionError(f"{index} is not an index of FS({r},{2 * n})")
    total = sum(cell_stats(index).codim for index in indices)
    if total != ig_dimension(r, n):
        raise PreconditionError(
            f"Codimensions add up to {total}, not dim IG({r},{2 * n}) = {ig_dimension(r, n)}")


def _check_b_tuple(indices: Sequence[BIndex], r: int, n: int) -> None:
    if not 1 <= r <= n:
        raise PreconditionError(f"Need 1 <= r <= n, got r={r}, n={n}")
    for index in indices:
        if not isinstance(index, BIndex) or index.r != r or index.n != n:
            raise PreconditionError(f"{index} is not an index of FS'({r},{2 * n + 1})")
    total = sum(cell_stats_b(index).codim for index in indices)
    if total != og_dimension(r, n):
        raise PreconditionError(
            f"Codimensions add up to {total}, not dim OG({r},{2 * n + 1}) = {og_dimension(r, n)}")


def deformed_nonvanishing(indices: Sequence[CIndex], r: int, n: int) -> bool:
    """Nonvanishing of the point coefficient of the deformed product on IG(r, 2n).

    The verdict is (ordinary point coefficient != 0) and
    (sum cosym^2(I^j) = r(r+1)/2). The chi criterion
    (chi_point - sum_j chi_{w_{I^j}})(e1bar + ... + erbar) = 0 is evaluated
    alongside and must agree with the cosym^2 count.

    Raises:
        PreconditionError: Codimensions do not add up to dim IG(r, 2n)
        InconsistencyError: The two criteria disagree
    """
    _check_c_tuple(indices, r, n)
    ordinary = ig_point_coefficient(indices, n) != 0
    cosym_ok = sum(cell_stats(index).cosym2 for index in indices) == r * (r + 1) // 2

    point_value = 2 * _sum_first(rho(GroupSpec("C", n)).coords, r)
    theta = point_value - sum(chi_eval(index, r, n).direct for index in indices)
    if (theta == 0) != cosym_ok:
        logger.error(f"chi criterion and cosym^2 count disagree on {[str(i) for i in indices]}")
        raise InconsistencyError("chi criterion disagrees with the cosym^2 count",
                                 {"indices": [list(i.elements) for i in indices],
                                  "theta": str(theta)})
    return ordinary and cosym_ok


@dataclass
class HornRecord:
    """The four conditions of a recursive Horn criterion.

    Attributes:
        alpha: Deformed point coefficient is nonzero
        beta1: Dimension count on the Lagrangian / maximal orthogonal part
        beta2: SL(r) invariants of the attached partitions are nonzero
        beta3: Product on the smaller isotropic Grassmannian is nonzero
        beta2_inequality: Horn inequalities for the attached partitions
        beta3_forms: Constrained alternating forms have expected dimension (type B only)
        mus: Attached partitions
    """
    alpha: bool
    beta1: bool
    beta2: bool
    beta3: bool
    beta2_inequality: bool
    mus: Tuple[Tuple[int, ...], ...]
    beta3_forms: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        return self.alpha == (self.beta1 and self.beta2 and self.beta3)

    def as_dict(self) -> Dict:
        return {
            "alpha": self.alpha,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "beta3": self.beta3,
            "beta2_inequality": self.beta2_inequality,
            "beta3_forms": self.beta3_forms,
            "mus": [list(mu) for mu in self.mus],
        }


def horn_mus(index, r: int, width: int) -> Tuple[int, ...]:
    """mu_a = width - |i_a >= I tilde| for a CIndex or BIndex."""
    tilde = index.tilde
    return tuple(width - dominance_count([i], tilde, strict=False) for i in index.elements)


def _finish(record: HornRecord, indices, label: str) -> HornRecord:
    logger.debug(f"{label} {[str(i) for i in indices]}: {record.as_dict()}")
    if record.beta1 and record.beta2 != record.beta2_inequality:
        raise InconsistencyError(f"{label}: invariant and inequality forms of beta2 disagree",
                                 record.as_dict())
    if record.beta3_forms is not None and record.beta3_forms != record.beta3:
        raise InconsistencyError(f"{label}: beta3 and its bilinear-form version disagree",
                                 record.as_dict())
    if not record.consistent:
        logger.error(f"{label} failed on {[str(i) for i in indices]}: {record.as_dict()}")
        raise InconsistencyError(f"{label}: alpha differs from beta1 and beta2 and beta3",
                                 record.as_dict())
    return record


def horn_c_check(indices: Sequence[CIndex], r: int, n: int) -> HornRecord:
    """Evaluate alpha, beta1, beta2, beta3 for a tuple on IG(r, 2n) and assert the equivalence.

    Raises:
        PreconditionError: Codimensions do not add up to dim IG(r, 2n)
        InconsistencyError: alpha differs from beta1 and beta2 and beta3
    """
    _check_c_tuple(indices, r, n)
    alpha = deformed_nonvanishing(indices, r, n)
    beta1 = sum(cell_stats(index).cosym2 for index in indices) == r * (r + 1) // 2
    width = 2 * n - 2 * r
    mus = tuple(horn_mus(index, r, width) for index in indices)
    beta2 = sl_invariant_dim(mus, r) != 0
    beta2_inequality = horn_inequality_check(mus, width, r).holds
    beta3 = ig_nonvanishing([reindex_io(index) for index in indices], r)
    record = HornRecord(alpha, beta1, beta2, beta3, beta2_inequality, mus)
    return _finish(record, indices, "horn_c_check")


def _compress_b(index: BIndex) -> CIndex:
    support = sorted(index.elements + index.bar)
    position = {v: k for k, v in enumerate(support, start=1)}
    return CIndex(tuple(position[v] for v in index.elements), index.r)


def alternating_forms_check(indices: Sequence[BIndex], r: int, trials: int = 3,
                            seed: int = DEFAULT_SEED, field: Optional[Field] = None) -> bool:
    """Alternating forms vanishing on (F^j_a, F^j_{t^j_a}) have the expected dimension.

    The data t^j_a come from J^j compressed into [2r]; the expected
    dimension is r(r-1)/2 - sum co-wedge^2(J^j).
    """
    field = field or Field()
    expected = r * (r - 1) // 2 - sum(cell_stats_b(index).cowedge2 for index in indices)
    if expected < 0:
        return False
    ts = [constraint_data(_compress_b(index)) for index in indices]
    observed = min(
        wedge2_constrained_dim(
            [random_flag("none", r, derive_seed(seed, trial, j), field) for j in range(len(ts))],
            ts, field)
        for trial in range(max(1, trials)))
    return observed == expected


def og_reduced_indices(indices: Sequence[BIndex]) -> List[CIndex]:
    """Send each J^j to FS(r-1, 2r-2) through its OG+(r, 2r) compression.

    Raises:
        InconsistencyError: The image differs from reindex_jo(J^j)
    """
    reduced = []
    for index in indices:
        image = og_triple_bijection(og_plus_compress(index), index.r)
        if image != reindex_jo(index):
            raise InconsistencyError(f"OG+ reduction of {index} differs from reindex_jo",
                                     {"index": list(index.elements),
                                      "bijection": list(image.elements),
                                      "reindex_jo": list(reindex_jo(index).elements)})
        reduced.append(image)
    return reduced


def horn_b_check(indices: Sequence[BIndex], r: int, n: int, trials: int = 3,
                 seed: int = DEFAULT_SEED, field: Optional[Field] = None) -> HornRecord:
    """Evaluate alpha, beta1, beta2, beta3 for a tuple on OG(r, 2n+1) and assert the equivalence.

    beta3 is the product on IG(r-1, 2r-2) of the indices from
    og_reduced_indices, and is cross-checked against alternating_forms_check.

    Raises:
        PreconditionError: Codimensions do not add up to dim OG(r, 2n+1)
        InconsistencyError: The criteria disagree
    """
    _check_b_tuple(indices, r, n)
    ordinary = og_point_coefficient(indices, n) != 0
    point_value = 2 * _sum_first(rho(GroupSpec("B", n)).coords, r)
    theta = point_value - sum(_sum_first(chi(weyl_element(index, "B")), r) for index in indices)
    alpha = ordinary and theta == 0
    beta1 = sum(cell_stats_b(index).cowedge2 for index in indices) == r * (r - 1) // 2
    width = 2 * n + 1 - 2 * r
    mus = tuple(horn_mus(index, r, width) for index in indices)
    beta2 = sl_invariant_dim(mus, r) != 0
    beta2_inequality = horn_inequality_check(mus, width, r).holds
    if r == 1:
        beta3 = True
    else:
        beta3 = ig_nonvanishing(og_reduced_indices(indices), r - 1)
    beta3_forms = alternating_forms_check(indices, r, trials, seed, field)
    record = HornRecord(alpha, beta1, beta2, beta3, beta2_inequality, mus, beta3_forms)
    return _finish(record, indices, "horn_b_check")


def old2_slack(indices: Sequence[CIndex], r: int) -> int:
    """sum mubar(I^j) - (r - (dim IG(r, 2r) - sum codim I^j)) for I^j in FS(r, 2r)."""
    total_codim = sum(cell_stats(index).codim for index in indices)
    return sum(mubar(index) for index in indices) - (r - (ig_dimension(r, r) - total_codim))


def oldie_slacks(indices: Sequence[CIndex], r: int, n: int) -> Tuple[int, int, int]:
    """Slacks of the three inequalities satisfied by nonvanishing tuples on IG(r, 2n).

    Returns:
        (r(r+1)/2 - sum cosym^2,
         sum mubar - (r - (dim IG(r, 2r) - sum cosym^2)),
         r(r-1)/2 - sum co-wedge^2)
    """
    stats = [cell_stats(index) for index in indices]
    cosym = sum(s.cosym2 for s in stats)
    cowedge = sum(s.cowedge2 for s in stats)
    return (
        r * (r + 1) // 2 - cosym,
        sum(s.mubar for s in stats) - (r - (ig_dimension(r, r) - cosym)),
        r * (r - 1) // 2 - cowedge,
    )


def minuscule_theta_check(indices: Sequence[CIndex], r: int) -> List[ThetaValues]:
    """theta^C vanishes and theta^B is nonnegative on every I in a product on IG(r, 2r).

    Raises:
        InconsistencyError: Some I in the support violates either condition
    """
    values = []
    for target in parabolic_product(indices, r).support():
        theta = theta_values(target, indices, r, r)
        if theta.theta_c != 0 or theta.theta_b < 0:
            raise InconsistencyError(f"theta values at {target} break minuscule vanishing",
                                     {"index": list(target.elements),
                                      "theta_c": str(theta.theta_c),
                                      "theta_b": str(theta.theta_b)})
        values.append(theta)
    return values


@dataclass
class Old3Record:
    """Nonvanishing on IG(r, 2r) versus the dimension of constrained symmetric forms."""
    nonvanishing: bool
    expected: int
    observed: int

    @property
    def forms_hold(self) -> bool:
        return self.observed == self.expected

    def as_dict(self) -> Dict:
        return {"nonvanishing": self.nonvanishing, "expected": self.expected,
                "observed": self.observed}


def old3_check(indices: Sequence[CIndex], r: int, trials: int = DEFAULT_TRIALS,
               seed: int = DEFAULT_SEED, field: Optional[Field] = None) -> Old3Record:
    """Compare nonvanishing on IG(r, 2r) with the symmetric forms having expected dimension.

    Raises:
        PreconditionError: Some index is not in FS(r, 2r)
        InconsistencyError: The two sides disagree
    """
    for index in indices:
        if not isinstance(index, CIndex) or index.r != r or index.n != r:
            raise PreconditionError(f"{index} is not an index of FS({r},{2 * r})")
    field = field or Field()
    expected = r * (r + 1) // 2 - sum(cell_stats(index).cosym2 for index in indices)
    ts = [constraint_data(index) for index in indices]
    observed = min(
        sym2_constrained_dim(
            [random_flag("none", r, derive_seed(seed, trial, j), field) for j in range(len(ts))],
            ts, field)
        for trial in range(max(1, trials)))
    record = Old3Record(ig_nonvanishing(indices, r), expected, observed)
    if record.nonvanishing != record.forms_hold:
        logger.error(f"old3 disagreement on {[str(i) for i in indices]}: {record.as_dict()}")
        raise InconsistencyError("IG(r,2r) nonvanishing disagrees with constrained forms",
                                 record.as_dict())
    return record


def inequality_scan(r: int, n: int, s: int = 3) -> Dict[str, int]:
    """Check the slack inequalities (and theta vanishing when r = n) on every nonvanishing tuple.

    Raises:
        InconsistencyError: A slack is negative or theta values misbehave
    """
    counts = {"tuples": 0, "nonvanishing": 0}
    dimension = ig_dimension(r, n)
    for combo in itertools.combinations_with_replacement(list(isotropic_subsets(r, n)), s):
        if sum(cell_stats(index).codim for index in combo) > dimension:
            continue
        counts["tuples"] += 1
        if not ig_nonvanishing(combo, n):
            continue
        counts["nonvanishing"] += 1
        slacks = list(oldie_slacks(combo, r, n))
        if r == n:
            slacks.append(old2_slack(combo, r))
            minuscule_theta_check(combo, r)
        if min(slacks) < 0:
            raise InconsistencyError("Negative slack on a nonvanishing tuple",
                                     {"indices": [list(i.elements) for i in combo],
                                      "slacks": slacks})
    logger.info(f"Inequality scan IG({r},{2 * n}), s={s}: {counts}")
    return counts


def horn_scan(r: int, n: int, family: str = "C", s: int = 3, trials: int = 3,
              seed: int = DEFAULT_SEED, field: Optional[Field] = None) -> Dict[str, int]:
    """Run horn_c_check (family "C") or horn_b_check ("B") on every complementary s-tuple.

    Returns:
        Counts of the tuples examined and of those with alpha true

    Raises:
        InconsistencyError: On the first tuple where the criteria disagree
    """
    if family == "C":
        candidates, dimension, stats = list(isotropic_subsets(r, n)), ig_dimension(r, n), cell_stats
    elif family == "B":
        candidates, dimension, stats = list(orthogonal_subsets(r, n)), og_dimension(r, n), cell_stats_b
    else:
        raise PreconditionError(f"horn_scan needs family B or C, got {family!r}")
    counts = {"tuples": 0, "alpha": 0}
    for combo in itertools.combinations_with_replacement(candidates, s):
        if sum(stats(index).codim for index in combo) != dimension:
            continue
        if family == "C":
            record = horn_c_check(combo, r, n)
        else:
            record = horn_b_check(combo, r, n, trials, seed, field)
        counts["tuples"] += 1
        counts["alpha"] += record.alpha
    logger.info(f"Horn scan {'IG' if family == 'C' else 'OG'}({r}, n={n}), s={s}: {counts}")
    return counts


def old3_scan(r: int, s: int = 3, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
              field: Optional[Field] = None) -> Dict[str, int]:
    """Run old3_check on every s-tuple of FS(r, 2r)."""
    counts = {"tuples": 0, "nonvanishing": 0}
    for combo in itertools.combinations_with_replacement(list(isotropic_subsets(r, r)), s):
        record = old3_check(combo, r, trials, seed, field)
        counts["tuples"] += 1
        counts["nonvanishing"] += record.nonvanishing
    logger.info(f"old3 scan r={r}: {counts}")
    return counts
