"""Exact linear algebra over GF(p) or over the rationals.

In prime mode matrices are int64 arrays reduced mod p; row operations
stay below 2**63 because p < 2**31. Matrix products go through Python
integers. In rational mode matrices are object arrays of Fractions.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..constants import AUDIT_ENTRY_BOUND, DEFAULT_PRIME
from ..errors import InvalidIndexError

logger = logging.getLogger("IsoHorn")


class Field:
    """GF(p) when a prime is given, Q when prime is None.

    Attributes:
        prime: The field characteristic, or None in rational audit mode
    """

    def __init__(self, prime: Optional[int] = DEFAULT_PRIME):
        if prime is not None and prime < 3:
            raise InvalidIndexError(f"Field prime must be at least 3, got {prime}")
        self.prime = prime

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    def describe(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.prime})"

    def __repr__(self) -> str:
        return f"Field({self.describe()})"

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    def array(self, values) -> np.ndarray:
        """Coerce nested values into a field matrix."""
        if self.is_rational:
            raw = np.array(values, dtype=object)
            return np.vectorize(Fraction, otypes=[object])(raw) if raw.size else raw
        raw = np.array(values, dtype=object)
        if raw.size == 0:
            return np.zeros(raw.shape, dtype=np.int64)
        return np.vectorize(self._reduce, otypes=[np.int64])(raw)

    def _reduce(self, value) -> int:
        value = Fraction(value)
        p = self.prime
        return (value.numerator % p) * pow(value.denominator % p, p - 2, p) % p

    def zeros(self, shape) -> np.ndarray:
        if self.is_rational:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros(shape, dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = 1 if not self.is_rational else Fraction(1)
        return out

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
        if self.is_rational:
            values = rng.integers(-AUDIT_ENTRY_BOUND, AUDIT_ENTRY_BOUND + 1, size=(rows, cols))
            return self.array(values.tolist())
        return rng.integers(0, self.prime, size=(rows, cols), dtype=np.int64)

    # ------------------------------------------------------------------
    # Scalars
    # ------------------------------------------------------------------

    def inv(self, value):
        if self.is_zero(value):
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational:
            return 1 / Fraction(value)
        return pow(int(value) % self.prime, self.prime - 2, self.prime)

    def is_zero(self, value) -> bool:
        if self.is_rational:
            return value == 0
        return int(value) % self.prime == 0

    def normalize(self, value):
        if self.is_rational:
            return Fraction(value)
        return self._reduce(value)

    # ------------------------------------------------------------------
    # Matrices
    # ------------------------------------------------------------------

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        product = np.asarray(left, dtype=object).dot(np.asarray(right, dtype=object))
        if self.is_rational:
            return product
        return np.asarray(product % self.prime, dtype=np.int64)

    def rref(self, matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
        """Reduced row echelon form and pivot columns."""
        A = np.array(matrix, copy=True, dtype=object if self.is_rational else np.int64)
        if not self.is_rational:
            A %= self.prime
        rows, cols = A.shape
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            candidates = [i for i in range(r, rows) if not self.is_zero(A[i, c])]
            if not candidates:
                continue
            piv = candidates[0]
            if piv != r:
                A[[r, piv]] = A[[piv, r]]
            inv = self.inv(A[r, c])
            if self.is_rational:
                A[r, :] = A[r, :] * inv
            else:
                A[r, :] = (A[r, :] * inv) % self.prime
            for i in range(rows):
                if i != r and not self.is_zero(A[i, c]):
                    factor = A[i, c]
                    if self.is_rational:
                        A[i, :] = A[i, :] - factor * A[r, :]
                    else:
                        A[i, :] = (A[i, :] - factor * A[r, :]) % self.prime
            pivots.append(c)
            r += 1
        return A, pivots

    def rank(self, matrix: np.ndarray) -> int:
        matrix = np.asarray(matrix)
        if matrix.size == 0:
            return 0
        return len(self.rref(matrix)[1])

    def nullspace(self, matrix: np.ndarray) -> np.ndarray:
        """Right nullspace basis; columns form a basis."""
        matrix = np.asarray(matrix)
        cols = matrix.shape[1]
        if matrix.shape[0] == 0:
            return self.identity(cols)
        R, pivots = self.rref(matrix)
        free = [j for j in range(cols) if j not in pivots]
        basis = self.zeros((cols, len(free)))
        for k, f in enumerate(free):
            basis[f, k] = 1
            for row, pc in enumerate(pivots):
                basis[pc, k] = self.normalize(-R[row, f])
        return basis

    def inverse(self, matrix: np.ndarray) -> np.ndarray:
        """Gauss-Jordan inverse.

        Raises:
            ZeroDivisionError: If the matrix is singular
        """
        n = matrix.shape[0]
        augmented = np.concatenate([np.asarray(matrix, dtype=object),
                                    np.asarray(self.identity(n), dtype=object)], axis=1)
        if not self.is_rational:
            augmented = np.asarray(augmented % self.prime, dtype=np.int64)
        R, pivots = self.rref(augmented)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return R[:, n:]

    def solve_affine(self, matrix: np.ndarray, rhs: np.ndarray) -> Optional[int]:
        """Dimension of {x : A x = b}, or None when inconsistent."""
        rows, cols = matrix.shape
        if rows == 0:
            return cols
        augmented = np.concatenate([np.asarray(matrix, dtype=object),
                                    np.asarray(rhs, dtype=object).reshape(rows, 1)], axis=1)
        if not self.is_rational:
            augmented = np.asarray(augmented % self.prime, dtype=np.int64)
        _, pivots = self.rref(augmented)
        if cols in pivots:
            return None
        return cols - len(pivots)

    # ------------------------------------------------------------------
    # Object-array arithmetic
    # ------------------------------------------------------------------

    def lift(self, matrix: np.ndarray) -> np.ndarray:
        """Object-array copy whose entries are Python ints or Fractions."""
        return np.array(matrix, dtype=object, copy=True)

    def cast(self, matrix: np.ndarray) -> np.ndarray:
        """Reduce an object array back into the field's native storage."""
        matrix = np.asarray(matrix, dtype=object)
        if self.is_rational:
            return matrix
        return np.asarray(matrix % self.prime, dtype=np.int64)

    def bilinear(self, x: np.ndarray, gram: np.ndarray, y: np.ndarray):
        """x^T G y as a field scalar."""
        value = np.asarray(x, dtype=object).dot(np.asarray(gram, dtype=object)).dot(
            np.asarray(y, dtype=object))
        return self.normalize(value)
