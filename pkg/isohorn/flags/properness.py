"""Monte Carlo check that intersections of Schubert varieties for isotropic flags are proper.

For each trial, independent flags E^1..E^s isotropic for the chosen form
are drawn and the dimension of
    Omega_{A^1}(E^1) cap ... cap Omega_{A^s}(E^s)   (closures)
is computed exactly. The closure of the first factor is split into open
cells Omega_B(E^1), B <= A^1, each parameterized by echelon coordinates;
the other factors become rank conditions on the coordinate matrix in their
own flag basis. With one column the conditions are affine linear and are
solved directly; otherwise a Groebner basis gives the dimension.
"""

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import partial
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..constants import CELL_CAP, DEFAULT_SEED, DEFAULT_TRIALS
from ..errors import InvalidIndexError, RankCapError
from ..index import AIndex, gr_dimension
from ..utils import ordered_map
from .field import Field
from .flags import FORMS, FlagBasis, check_form, flags_for_trial, form_ambient

logger = logging.getLogger("IsoHorn")


@dataclass
class PropernessReport:
    """Observed versus expected intersection dimensions.

    Attributes:
        indices: The Schubert conditions
        form: Form the flags are isotropic for
        n: Rank of the form
        expected: dim Gr(m, N) - sum of codimensions
        observed: Intersection dimension per trial, -1 for empty
        seed: Seed of the run
        prime: Field prime, None in rational mode
        trials: Number of trials
    """
    indices: Tuple[AIndex, ...]
    form: str
    n: int
    expected: int
    observed: List[int] = dc_field(default_factory=list)
    seed: int = DEFAULT_SEED
    prime: Optional[int] = None
    trials: int = DEFAULT_TRIALS

    @property
    def passed(self) -> bool:
        bound = max(self.expected, -1)
        return all(dim <= bound for dim in self.observed)

    def as_dict(self) -> dict:
        return {
            "indices": [list(index.elements) for index in self.indices],
            "form": self.form,
            "n": self.n,
            "expected": self.expected,
            "observed": list(self.observed),
            "passed": self.passed,
            "seed": self.seed,
            "prime": self.prime,
            "trials": self.trials,
        }


def cells_below(index: AIndex) -> List[AIndex]:
    """All B with b_l <= a_l for every l, i.e. the cells in the closure of Omega_A."""
    m, N = index.cardinality, index.ambient
    return [AIndex(combo, N) for combo in itertools.combinations(range(1, N + 1), m)
            if all(b <= a for b, a in zip(combo, index.elements))]


def _cell_layout(index: AIndex) -> List[Tuple[int, int]]:
    """(row, column) positions of the free echelon coordinates of Omega_B."""
    used = set()
    slots = []
    for col, b in enumerate(index.elements):
        slots.extend((row, col) for row in range(b - 1) if row not in used)
        used.add(b - 1)
    return slots


def _to_sympy(value, field: Field):
    if field.is_rational:
        value = Fraction(value)
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.Integer(int(value))


def _linear_cell_dim(cell: AIndex, transfers: Sequence[np.ndarray],
                     conditions: Sequence[AIndex], field: Field) -> int:
    slots = _cell_layout(cell)
    pivot = cell.elements[0] - 1
    rows, rhs = [], []
    for T, cond in zip(transfers, conditions):
        for i in range(cond.elements[0], T.shape[0]):
            rows.append([T[i, row] for row, _ in slots])
            rhs.append(field.normalize(-T[i, pivot]))
    if not rows:
        return len(slots)
    matrix = field.cast(np.array(rows, dtype=object).reshape(len(rows), len(slots)))
    solution = field.solve_affine(matrix, field.cast(np.array(rhs, dtype=object)))
    return -1 if solution is None else solution


def _minors(matrix: sympy.Matrix, size: int):
    rows, cols = matrix.shape
    for r_idx in itertools.combinations(range(rows), size):
        for c_idx in itertools.combinations(range(cols), size):
            yield matrix.extract(list(r_idx), list(c_idx)).det()


def _variety_dim(polys: List, gens: Sequence[sympy.Symbol], field: Field) -> int:
    """Dimension of the affine zero set over the algebraic closure, -1 if empty."""
    domain_args = {"domain": "QQ"} if field.is_rational else {"modulus": field.prime}
    nonzero = []
    for expr in polys:
        expr = sympy.expand(expr)
        if not gens:
            value = Fraction(str(expr)) if field.is_rational else int(expr)
            if not field.is_zero(value):
                return -1
            continue
        poly = sympy.Poly(expr, *gens, **domain_args)
        if not poly.is_zero:
            nonzero.append(poly.as_expr())
    if not nonzero:
        return len(gens)
    basis = sympy.groebner(nonzero, *gens, order="grevlex", **domain_args)
    if any(poly.is_ground for poly in basis.polys):
        return -1
    leads = [poly.monoms(order="grevlex")[0] for poly in basis.polys]
    for size in range(len(gens), -1, -1):
        for chosen in itertools.combinations(range(len(gens)), size):
            outside = [k for k in range(len(gens)) if k not in chosen]
            if all(any(lead[k] for k in outside) for lead in leads):
                return size
    return 0


def _polynomial_cell_dim(cell: AIndex, transfers: Sequence[np.ndarray],
                         conditions: Sequence[AIndex], field: Field) -> int:
    m, N = cell.cardinality, cell.ambient
    slots = _cell_layout(cell)
    gens = sympy.symbols(f"x0:{len(slots)}") if slots else ()
    coords = sympy.zeros(N, m)
    for col, b in enumerate(cell.elements):
        coords[b - 1, col] = 1
    for k, (row, col) in enumerate(slots):
        coords[row, col] = gens[k]
    polys = []
    for T, cond in zip(transfers, conditions):
        moved = sympy.Matrix(N, N, lambda i, j: _to_sympy(T[i, j], field)) * coords
        for ell, a in enumerate(cond.elements, start=1):
            tail = moved[a:, :]
            size = m - ell + 1
            if tail.shape[0] >= size:
                polys.extend(_minors(tail, size))
    return _variety_dim(polys, gens, field)


def intersection_dim(indices: Sequence[AIndex], flags: Sequence[FlagBasis]) -> int:
    """Dimension of the intersection of the Schubert varieties Omega_{A^j}(E^j); -1 if empty."""
    if len(indices) != len(flags) or not indices:
        raise InvalidIndexError("Need one flag per Schubert condition")
    field = flags[0].field
    first, rest = flags[0], flags[1:]
    transfers = [field.matmul(flag.inverse(), first.basis) for flag in rest]
    conditions = indices[1:]
    m = indices[0].cardinality
    solver = _linear_cell_dim if m == 1 else _polynomial_cell_dim
    best = -1
    for cell in cells_below(indices[0]):
        if cell.dim <= best:
            continue
        best = max(best, solver(cell, transfers, conditions, field))
    return best


def _properness_trial(trial: int, indices, form: str, seed: int, field: Field) -> int:
    N = indices[0].ambient
    flags = flags_for_trial(form, N, len(indices), seed, trial, field)
    return intersection_dim(indices, flags)


def mc_properness(indices: Sequence[AIndex], form: str, n: int,
                  trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                  field: Optional[Field] = None, cell_cap: int = CELL_CAP,
                  workers: int = 1) -> PropernessReport:
    """Draw isotropic flags and compare intersection dimensions with the expected one.

    Args:
        indices: Schubert conditions in S(m, N), N = 2n (2n+1 for "symmetric")
        form: One of "none", "symplectic", "symmetric", "even"
        n: Rank of the form
        trials: Independent draws
        seed: Run seed; trial t uses seeds derived from (seed, t, j)
        field: GF(p) or rational field
        cell_cap: Largest m * (N - m) accepted
        workers: Threads for the trials

    Returns:
        PropernessReport; passed iff no trial exceeds the expected dimension

    Raises:
        InvalidIndexError: Empty tuple or indices not in S(m, N)
        RankCapError: m * (N - m) exceeds cell_cap
    """
    if form not in FORMS:
        raise InvalidIndexError(f"Unknown form {form!r}")
    indices = tuple(indices)
    if not indices:
        raise InvalidIndexError("mc_properness needs at least one Schubert condition")
    N = form_ambient(form, n)
    check_form(form, N)
    m = indices[0].cardinality
    if any(index.ambient != N or index.cardinality != m for index in indices):
        raise InvalidIndexError(f"All indices must lie in S({m}, {N})")
    if gr_dimension(m, N) > cell_cap:
        raise RankCapError(f"dim Gr({m}, {N}) = {gr_dimension(m, N)} exceeds the cell cap {cell_cap}")
    field = field or Field()
    expected = gr_dimension(m, N) - sum(index.codim for index in indices)
    observed = ordered_map(partial(_properness_trial, indices=indices, form=form,
                                   seed=seed, field=field), range(trials), workers)
    report = PropernessReport(indices, form, n, expected, list(observed), seed=seed,
                              prime=field.prime, trials=trials)
    if not report.passed:
        logger.info(f"Improper intersection for {[str(i) for i in indices]} ({form}): "
                    f"observed {max(observed)} > expected {expected}")
    return report
