"""Dimension counts of Hom spaces and constrained bilinear forms.

Each space is the kernel of a stacked linear system over the field; its
dimension is (number of unknowns) - rank.
"""

import logging
from dataclasses import dataclass, field as dc_field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..constants import DEFAULT_SEED, DEFAULT_TRIALS
from ..errors import InconsistencyError, InvalidIndexError
from ..index import CIndex, dominance_count
from ..schubert import horn_inequality_check, sl_invariant_dim
from ..utils import ordered_map
from .field import Field
from .flags import FlagBasis, derive_seed, flags_for_trial

logger = logging.getLogger("IsoHorn")


def check_mu_tuple(mus: Sequence[Sequence[int]], r: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    """Validate s weakly decreasing sequences of length r with entries in [0, 2n].

    Raises:
        InvalidIndexError: Wrong length, order or bounds
    """
    checked = []
    for mu in mus:
        mu = tuple(int(x) for x in mu)
        if len(mu) != r:
            raise InvalidIndexError(f"mu {list(mu)} must have exactly {r} entries")
        if any(b > a for a, b in zip(mu, mu[1:])):
            raise InvalidIndexError(f"mu {list(mu)} is not weakly decreasing")
        if mu and (mu[0] > 2 * n or mu[-1] < 0):
            raise InvalidIndexError(f"mu {list(mu)} leaves [0, {2 * n}]")
        checked.append(mu)
    return tuple(checked)


def expected_hom_dim(mus: Sequence[Sequence[int]], r: int, n: int) -> int:
    """2nr - sum_j |mu^j|."""
    return 2 * n * r - sum(sum(mu) for mu in mus)


def hom_dim(mus: Sequence[Sequence[int]], F: Sequence[FlagBasis],
            G: Sequence[FlagBasis], field: Optional[Field] = None) -> int:
    """Dimension of {phi in Hom(M, V) : phi(F^j_a) in G^j_{2n - mu^j_a} for all j, a}.

    Args:
        mus: s sequences of length r = dim M
        F: s flags on M
        G: s flags on V, dim V = 2n

    Returns:
        Kernel dimension of the constraint system
    """
    if len(F) != len(mus) or len(G) != len(mus):
        raise InvalidIndexError(f"Need {len(mus)} flags on each side, got {len(F)} and {len(G)}")
    field = field or (F[0].field if F else Field())
    r = F[0].dim if F else (len(mus[0]) if mus else 0)
    N = G[0].dim if G else 0
    if N % 2 or any(flag.dim != r for flag in F) or any(flag.dim != N for flag in G):
        raise InvalidIndexError("Flag dimensions do not match dim M = r and dim V = 2n")
    mus = check_mu_tuple(mus, r, N // 2)

    rows = []
    for mu, f_flag, g_flag in zip(mus, F, G):
        g_inv = field.lift(g_flag.inverse())
        for a in range(r):
            f = field.lift(f_flag.basis[:, a])
            # phi(f_a) may only use the first 2n - mu_a vectors of G.
            for l in range(N - mu[a], N):
                rows.append(np.outer(g_inv[l, :], f).ravel())
    unknowns = N * r
    if not rows:
        return unknowns
    return unknowns - field.rank(field.cast(np.array(rows, dtype=object)))


def constraint_data(index: CIndex) -> Tuple[int, ...]:
    """t_a = |I bar >= i_a| for each element i_a of I."""
    return tuple(dominance_count(index.bar, [i], strict=False) for i in index.elements)


def _form_unknowns(r: int, symmetric: bool) -> List[Tuple[int, int]]:
    if symmetric:
        return [(p, q) for p in range(r) for q in range(p, r)]
    return [(p, q) for p in range(r) for q in range(p + 1, r)]


def _constrained_form_dim(flags: Sequence[FlagBasis], ts: Sequence[Sequence[int]],
                          symmetric: bool, field: Optional[Field]) -> int:
    if len(flags) != len(ts):
        raise InvalidIndexError(f"Got {len(flags)} flags for {len(ts)} constraint rows")
    r = flags[0].dim if flags else 0
    unknowns = _form_unknowns(r, symmetric)
    if not flags:
        return len(unknowns)
    field = field or flags[0].field
    rows = []
    for flag, t in zip(flags, ts):
        if flag.dim != r or len(t) != r:
            raise InvalidIndexError(f"Constraint data {list(t)} does not match dim M = {r}")
        basis = field.lift(flag.basis)
        for a in range(r):
            for b in range(a + 1):
                for c in range(t[a]):
                    x, y = basis[:, b], basis[:, c]
                    if symmetric:
                        row = [x[p] * y[q] + x[q] * y[p] if p != q else x[p] * y[p]
                               for p, q in unknowns]
                    else:
                        row = [x[p] * y[q] - x[q] * y[p] for p, q in unknowns]
                    rows.append(row)
    if not rows or not unknowns:
        return len(unknowns)
    return len(unknowns) - field.rank(field.cast(np.array(rows, dtype=object)))


def sym2_constrained_dim(flags: Sequence[FlagBasis], ts: Sequence[Sequence[int]],
                         field: Optional[Field] = None) -> int:
    """Dimension of {gamma in Sym^2 M* : gamma(F^j_a, F^j_{t^j_a}) = 0}."""
    return _constrained_form_dim(flags, ts, True, field)


def wedge2_constrained_dim(flags: Sequence[FlagBasis], ts: Sequence[Sequence[int]],
                           field: Optional[Field] = None) -> int:
    """Dimension of {gamma in Wedge^2 M* : gamma(F^j_a, F^j_{t^j_a}) = 0}."""
    return _constrained_form_dim(flags, ts, False, field)


@dataclass
class KeyCheckRecord:
    """Outcome of comparing the Hom-space dimension with the Horn inequalities.

    Attributes:
        mus: The checked tuple
        n: Half the dimension of V
        expected: 2nr - sum |mu^j|
        observed: Hom dimension per trial
        a_holds: Smallest observed dimension equals the expected one
        b_holds: Horn inequalities with bound 2n hold
        invariant_holds: SL(r) invariants are nonzero; only set when expected == 0
        seed: Seed of the run
        prime: Field prime, None in rational mode
        trials: Number of trials
    """
    mus: Tuple[Tuple[int, ...], ...]
    n: int
    expected: int
    observed: List[int] = dc_field(default_factory=list)
    a_holds: bool = False
    b_holds: bool = False
    invariant_holds: Optional[bool] = None
    seed: int = DEFAULT_SEED
    prime: Optional[int] = None
    trials: int = DEFAULT_TRIALS

    @property
    def agree(self) -> bool:
        return self.a_holds == self.b_holds

    def as_dict(self) -> dict:
        return {
            "mus": [list(mu) for mu in self.mus],
            "n": self.n,
            "expected": self.expected,
            "observed": list(self.observed),
            "A": self.a_holds,
            "B": self.b_holds,
            "invariants": self.invariant_holds,
            "seed": self.seed,
            "prime": self.prime,
            "trials": self.trials,
        }


def _key_trial(trial: int, mus, r: int, n: int, seed: int, field: Field) -> int:
    s = len(mus)
    F = flags_for_trial("none", r, s, seed, 2 * trial, field)
    G = flags_for_trial("symplectic", 2 * n, s, seed, 2 * trial + 1, field)
    return hom_dim(mus, F, G, field)


def theorem_key_check(mus: Sequence[Sequence[int]], n: int, trials: int = DEFAULT_TRIALS,
                      seed: int = DEFAULT_SEED, field: Optional[Field] = None,
                      workers: int = 1) -> KeyCheckRecord:
    """Compare "Hom space has expected dimension" with the Horn inequalities (bound 2n).

    A holds when some trial reaches the expected dimension; generic flags
    attain the minimum, and a dimension can never drop below it.

    Raises:
        InconsistencyError: A and B disagree, or the invariant form disagrees
    """
    field = field or Field()
    r = len(mus[0]) if mus else 0
    mus = check_mu_tuple(mus, r, n)
    expected = expected_hom_dim(mus, r, n)
    observed = ordered_map(partial(_key_trial, mus=mus, r=r, n=n, seed=seed, field=field),
                           range(trials), workers)
    record = KeyCheckRecord(mus, n, expected, list(observed), seed=seed,
                            prime=field.prime, trials=trials)
    if any(dim < max(0, expected) for dim in observed):
        raise InconsistencyError("Hom dimension below the expected bound", record.as_dict())
    record.a_holds = bool(observed) and min(observed) == expected
    record.b_holds = horn_inequality_check(mus, 2 * n, r).holds
    if expected == 0:
        record.invariant_holds = sl_invariant_dim(mus, r) != 0
    logger.debug(f"theorem_key_check {record.as_dict()}")
    if not record.agree or record.invariant_holds not in (None, record.a_holds):
        logger.error(f"Hom dimension and Horn inequalities disagree: {record.as_dict()}")
        raise InconsistencyError("Hom dimension and Horn inequalities disagree", record.as_dict())
    return record


def random_mu_tuples(r: int, n: int, count: int, s: int = 3,
                     seed: int = DEFAULT_SEED) -> List[Tuple[Tuple[int, ...], ...]]:
    """count random s-tuples of weakly decreasing length-r sequences in [0, 2n]."""
    rng = np.random.default_rng(derive_seed(seed, r, n, s))
    return [tuple(tuple(int(x) for x in sorted(rng.integers(0, 2 * n + 1, size=r), reverse=True))
                  for _ in range(s))
            for _ in range(count)]


def key_scan(r: int, n: int, samples: int, s: int = 3, trials: int = DEFAULT_TRIALS,
             seed: int = DEFAULT_SEED, field: Optional[Field] = None,
             workers: int = 1) -> Dict[str, int]:
    """Run theorem_key_check on random tuples drawn from seed.

    Returns:
        Counts of the tuples checked and of those where A holds

    Raises:
        InconsistencyError: On the first disagreement
    """
    counts = {"tuples": 0, "holds": 0}
    for k, mus in enumerate(random_mu_tuples(r, n, samples, s, seed)):
        record = theorem_key_check(mus, n, trials, derive_seed(seed, k), field, workers)
        counts["tuples"] += 1
        counts["holds"] += record.a_holds
    logger.info(f"Key scan r={r}, n={n}, seed={seed}: {counts}")
    return counts
