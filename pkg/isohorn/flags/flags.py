"""Random complete flags, optionally isotropic for a standard bilinear form.

A flag is stored as an ordered basis f_1..f_N (matrix columns); E_a is the
span of the first a columns. Forms use the antidiagonal Gram matrices:
symplectic with +1 above the antidiagonal midpoint and -1 below, odd
symmetric with 1s and a 2 in the middle entry, even symmetric with 1s.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from ..constants import DEFAULT_SEED, MAX_REDRAWS
from ..errors import InconsistencyError, InvalidIndexError
from ..index import AIndex
from .field import Field

logger = logging.getLogger("IsoHorn")

FORMS = ("none", "symplectic", "symmetric", "even")


class DegenerateDraw(Exception):
    """A random draw landed on a non-generic configuration."""


def check_form(form: str, dim: int) -> None:
    """Validate a (form, ambient dimension) pairing.

    Raises:
        InvalidIndexError: Unknown form, or parity of dim wrong for the form
    """
    if form not in FORMS:
        raise InvalidIndexError(f"Unknown form {form!r}; expected one of {', '.join(FORMS)}")
    if dim < 0:
        raise InvalidIndexError(f"Dimension must be nonnegative, got {dim}")
    if form in ("symplectic", "even") and dim % 2:
        raise InvalidIndexError(f"A {form} form needs an even dimension, got {dim}")
    if form == "symmetric" and dim % 2 == 0:
        raise InvalidIndexError(f"The symmetric form lives on odd dimension 2n+1, got {dim}")


def form_ambient(form: str, n: int) -> int:
    """Ambient dimension of the form of rank n (2n, or 2n+1 for symmetric)."""
    return 2 * n + 1 if form == "symmetric" else 2 * n


def gram_matrix(form: str, dim: int, field: Field) -> Optional[np.ndarray]:
    """Standard Gram matrix of the form, or None for "none"."""
    check_form(form, dim)
    if form == "none":
        return None
    gram = field.zeros((dim, dim))
    for i in range(dim):
        j = dim - 1 - i
        if form == "symplectic":
            gram[i, j] = 1 if i < dim // 2 else field.normalize(-1)
        elif form == "symmetric" and i == j:
            gram[i, j] = 2
        else:
            gram[i, j] = 1
    return gram


@dataclass
class FlagBasis:
    """A complete flag given by an ordered basis.

    Attributes:
        basis: N x N invertible matrix; column a spans E_a / E_{a-1}
        form: Form tag the flag is isotropic for ("none" if generic)
        field: Field the entries live in
    """
    basis: np.ndarray
    form: str
    field: Field
    _inverse: Optional[np.ndarray] = dc_field(default=None, init=False, repr=False)

    def __post_init__(self):
        rows, cols = self.basis.shape
        if rows != cols:
            raise InvalidIndexError(f"Flag basis must be square, got {rows}x{cols}")
        check_form(self.form, rows)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def subspace(self, a: int) -> np.ndarray:
        """Basis matrix (N x a) of E_a."""
        return self.basis[:, :a]

    def inverse(self) -> np.ndarray:
        if self._inverse is None:
            self._inverse = self.field.inverse(self.basis)
        return self._inverse

    def coordinates(self, vectors: np.ndarray) -> np.ndarray:
        """Coordinates of column vectors in the flag basis."""
        return self.field.matmul(self.inverse(), vectors)

    def gram(self) -> Optional[np.ndarray]:
        """Gram matrix of the form restricted to the flag basis."""
        standard = gram_matrix(self.form, self.dim, self.field)
        if standard is None:
            return None
        return self.field.matmul(self.field.matmul(self.basis.T, standard), self.basis)

    def is_isotropic(self) -> bool:
        """True iff E_a is orthogonal to E_{N-a} for every a (so E_a^perp = E_{N-a})."""
        gram = self.gram()
        if gram is None:
            return True
        N = self.dim
        return all(self.field.is_zero(gram[i, j])
                   for i in range(N) for j in range(N) if i + j <= N - 2)


def derive_seed(seed: int, *path: int) -> int:
    """Independent child seed for (seed, trial, flag, ...)."""
    state = np.random.SeedSequence([int(seed)] + [int(p) for p in path]).generate_state(1)
    return int(state[0])


def random_flag(form: str, dim: int, seed: int = DEFAULT_SEED,
                field: Optional[Field] = None) -> FlagBasis:
    """Draw a flag in general position, isotropic for the given form.

    The draw is deterministic in seed. A degenerate draw is retried with
    seed + 1, seed + 2, ... and logged.

    Args:
        form: "none", "symplectic", "symmetric" or "even"
        dim: Ambient dimension
        seed: Integer seed
        field: Field of the entries, default GF(2^31 - 1)

    Returns:
        FlagBasis satisfying the isotropy invariant of its form

    Raises:
        InvalidIndexError: Form and dimension do not match
        InconsistencyError: No generic draw within the redraw budget
    """
    field = field or Field()
    check_form(form, dim)
    for attempt in range(MAX_REDRAWS):
        rng = np.random.default_rng(seed + attempt)
        try:
            if form == "none":
                basis = _draw_generic(rng, dim, field)
            elif form == "symplectic":
                basis = _draw_symplectic(rng, dim, field)
            else:
                basis = _draw_orthogonal(rng, dim, form, field)
        except DegenerateDraw as exc:
            logger.warning(f"Degenerate {form} flag for seed {seed + attempt} ({exc}); redrawing")
            continue
        flag = FlagBasis(field.cast(basis), form, field)
        if not flag.is_isotropic():
            raise InconsistencyError(f"Drawn {form} flag is not isotropic",
                                     {"seed": seed + attempt, "dim": dim})
        return flag
    raise InconsistencyError(f"No generic {form} flag in {MAX_REDRAWS} draws",
                             {"seed": seed, "dim": dim})


def _draw_generic(rng: np.random.Generator, dim: int, field: Field) -> np.ndarray:
    matrix = field.random_matrix(rng, dim, dim)
    if field.rank(matrix) < dim:
        raise DegenerateDraw("singular matrix")
    return field.lift(matrix)


def _draw_symplectic(rng: np.random.Generator, dim: int, field: Field) -> np.ndarray:
    # Pair column i with column dim-1-i, scale so omega(f, g) = 1, then
    # project the remaining columns off span(f, g).
    gram = gram_matrix("symplectic", dim, field)
    cols = [field.lift(c) for c in _draw_generic(rng, dim, field).T]
    if not cols:
        return field.lift(field.identity(0))
    n = dim // 2
    for i in range(n):
        f, g = cols[i], cols[dim - 1 - i]
        pairing = field.bilinear(f, gram, g)
        if field.is_zero(pairing):
            raise DegenerateDraw(f"pair {i + 1} is degenerate")
        g = field.lift(field.cast(g * field.inv(pairing)))
        cols[dim - 1 - i] = g
        for k in range(i + 1, dim - 1 - i):
            v = cols[k]
            cols[k] = field.lift(field.cast(
                v - field.bilinear(v, gram, g) * f + field.bilinear(v, gram, f) * g))
    return np.stack(cols, axis=1)


def _draw_orthogonal(rng: np.random.Generator, dim: int, form: str, field: Field) -> np.ndarray:
    # Push the standard flag through a product of random reflections. The
    # parity of the count picks the connected component.
    gram = gram_matrix(form, dim, field)
    basis = field.lift(field.identity(dim))
    count = 2 * dim + int(rng.integers(0, 2))
    for _ in range(count):
        for _ in range(MAX_REDRAWS):
            v = field.lift(field.random_matrix(rng, dim, 1)[:, 0])
            q = field.bilinear(v, gram, v)
            if not field.is_zero(q):
                break
        else:
            raise DegenerateDraw("no anisotropic reflection vector")
        scale = 2 * field.inv(q)
        pairings = np.asarray(v, dtype=object).dot(np.asarray(gram, dtype=object)).dot(basis)
        basis = field.lift(field.cast(basis - scale * np.outer(v, pairings)))
    return basis


def schubert_position(X: np.ndarray, flag: FlagBasis) -> AIndex:
    """The index A with span(X) in the open cell Omega_A(E).

    a_l is the first b with dim(X cap E_b) >= l, where
    dim(X cap E_b) = m - rank of the last N - b flag coordinates of X.

    Raises:
        InvalidIndexError: X does not have full column rank or wrong height
    """
    field = flag.field
    N = flag.dim
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[0] != N:
        raise InvalidIndexError(f"Subspace basis must have {N} rows")
    m = X.shape[1]
    coords = flag.coordinates(X)
    if field.rank(coords) != m:
        raise InvalidIndexError("Subspace basis is not linearly independent")
    elements = []
    for b in range(1, N + 1):
        meet = m - field.rank(coords[b:, :])
        if meet > len(elements):
            elements.append(b)
    return AIndex(tuple(elements), N)


def flags_for_trial(form: str, dim: int, count: int, seed: int, trial: int,
                    field: Field) -> Sequence[FlagBasis]:
    """Independent flags for one Monte Carlo trial."""
    return [random_flag(form, dim, derive_seed(seed, trial, j), field) for j in range(count)]
