"""Schubert index sets for Gr(m,N), IG(r,2n) and OG(r,2n+1).

All three index types are immutable and validated at construction, so
downstream code may assume they are well formed.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from ..errors import InvalidIndexError

logger = logging.getLogger("IsoHorn")


def dominance_count(first: Iterable[int], second: Iterable[int], strict: bool = True) -> int:
    """Count the pairs (i, k) with i in first, k in second and i > k.

    Args:
        first: Integer set I
        second: Integer set K (may be empty)
        strict: Count i > k when True, i >= k when False

    Returns:
        |I > K| (or |I >= K|)

    Example:
        >>> dominance_count({3, 4}, {1, 2})
        4
    """
    second = list(second)
    if strict:
        return sum(1 for i in first for k in second if i > k)
    return sum(1 for i in first for k in second if i >= k)


def _check_sorted(elements: Tuple[int, ...], low: int, high: int, label: str) -> None:
    if any(b <= a for a, b in zip(elements, elements[1:])):
        raise InvalidIndexError(f"{label} {list(elements)} is not strictly increasing")
    if elements and (elements[0] < low or elements[-1] > high):
        raise InvalidIndexError(f"{label} {list(elements)} leaves [{low}, {high}]")


@dataclass(frozen=True)
class AIndex:
    """Schubert index A in S(m, N), indexing a cell of Gr(m, N).

    Attributes:
        elements: Strictly increasing integers in [N]
        ambient: N
    """
    elements: Tuple[int, ...]
    ambient: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(a) for a in self.elements))
        if self.ambient < 0:
            raise InvalidIndexError(f"Ambient size must be nonnegative, got {self.ambient}")
        _check_sorted(self.elements, 1, self.ambient, "AIndex")

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        """Dimension of the cell Omega_A."""
        return sum(a - i for i, a in enumerate(self.elements, start=1))

    @property
    def codim(self) -> int:
        m = self.cardinality
        return m * (self.ambient - m) - self.dim

    def permutation(self) -> Tuple[int, ...]:
        """The minimal-length permutation v_A = (a_1..a_m, [N] \\ A ascending)."""
        rest = [x for x in range(1, self.ambient + 1) if x not in self.elements]
        return self.elements + tuple(rest)

    def __str__(self) -> str:
        return str(list(self.elements))


@dataclass(frozen=True)
class CIndex:
    """Schubert index I in FS(r, 2n), indexing a cell of IG(r, 2n).

    The defining condition is I and its bar 2n+1-I being disjoint.

    Attributes:
        elements: Strictly increasing integers in [2n]
        n: Half the ambient dimension
    """
    elements: Tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(i) for i in self.elements))
        if self.n < 0:
            raise InvalidIndexError(f"Rank must be nonnegative, got {self.n}")
        _check_sorted(self.elements, 1, 2 * self.n, "CIndex")
        if set(self.elements) & set(self.bar):
            raise InvalidIndexError(
                f"CIndex {list(self.elements)} meets its bar in [{2 * self.n}]"
            )

    @property
    def ambient(self) -> int:
        return 2 * self.n

    @property
    def r(self) -> int:
        return len(self.elements)

    @property
    def bar(self) -> Tuple[int, ...]:
        return tuple(sorted(2 * self.n + 1 - i for i in self.elements))

    @property
    def tilde(self) -> Tuple[int, ...]:
        used = set(self.elements) | set(self.bar)
        return tuple(x for x in range(1, 2 * self.n + 1) if x not in used)

    def complements(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Return (bar, tilde); together with I they partition [2n]."""
        return self.bar, self.tilde

    def signed_values(self) -> Tuple[int, ...]:
        """Images of the first r window positions of w_I.

        Values up to n stay positive, a value v > n becomes -(2n+1-v).
        """
        n = self.n
        return tuple(i if i <= n else -(2 * n + 1 - i) for i in self.elements)

    def __str__(self) -> str:
        return str(list(self.elements))


@dataclass(frozen=True)
class BIndex:
    """Schubert index J in FS'(r, 2n+1), indexing a cell of OG(r, 2n+1).

    Attributes:
        elements: Strictly increasing integers in [2n+1], none equal to n+1
        n: Rank of SO(2n+1)
    """
    elements: Tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(j) for j in self.elements))
        if self.n < 0:
            raise InvalidIndexError(f"Rank must be nonnegative, got {self.n}")
        _check_sorted(self.elements, 1, 2 * self.n + 1, "BIndex")
        if self.n + 1 in self.elements:
            raise InvalidIndexError(
                f"BIndex {list(self.elements)} contains the middle value {self.n + 1}"
            )
        if set(self.elements) & set(self.bar):
            raise InvalidIndexError(
                f"BIndex {list(self.elements)} meets its bar in [{2 * self.n + 1}]"
            )

    @property
    def ambient(self) -> int:
        return 2 * self.n + 1

    @property
    def r(self) -> int:
        return len(self.elements)

    @property
    def bar(self) -> Tuple[int, ...]:
        return tuple(sorted(2 * self.n + 2 - j for j in self.elements))

    @property
    def tilde(self) -> Tuple[int, ...]:
        used = set(self.elements) | set(self.bar)
        return tuple(x for x in range(1, 2 * self.n + 2) if x not in used)

    def complements(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Return (bar', tilde). The middle value n+1 always lies in tilde."""
        return self.bar, self.tilde

    def signed_values(self) -> Tuple[int, ...]:
        n = self.n
        return tuple(j if j <= n else -(2 * n + 2 - j) for j in self.elements)

    def __str__(self) -> str:
        return str(list(self.elements))


def complements(index) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Return (barred set, tilde set) of a CIndex or BIndex.

    Args:
        index: A validated CIndex or BIndex

    Returns:
        (I bar, I tilde) for type C, (J bar', J tilde) for type B
    """
    if not isinstance(index, (CIndex, BIndex)):
        raise InvalidIndexError(f"complements() needs a CIndex or BIndex, got {type(index).__name__}")
    return index.complements()


def subsets(m: int, N: int) -> Iterator[AIndex]:
    """Enumerate S(m, N) in lexicographic order."""
    for combo in itertools.combinations(range(1, N + 1), m):
        yield AIndex(combo, N)


def isotropic_subsets(r: int, n: int) -> Iterator[CIndex]:
    """Enumerate FS(r, 2n) in lexicographic order."""
    for combo in itertools.combinations(range(1, 2 * n + 1), r):
        if not set(combo) & {2 * n + 1 - i for i in combo}:
            yield CIndex(combo, n)


def orthogonal_subsets(r: int, n: int) -> Iterator[BIndex]:
    """Enumerate FS'(r, 2n+1) in lexicographic order."""
    values = [x for x in range(1, 2 * n + 2) if x != n + 1]
    for combo in itertools.combinations(values, r):
        if not set(combo) & {2 * n + 2 - j for j in combo}:
            yield BIndex(combo, n)


def parse_index(text: str) -> Tuple[int, ...]:
    """Parse "1,3", "[1, 3]" or "{1 3}" into a sorted tuple of integers."""
    cleaned = text.strip().strip("[]{}()")
    if not cleaned.strip():
        return ()
    try:
        values = [int(tok) for tok in cleaned.replace(",", " ").split()]
    except ValueError:
        raise InvalidIndexError(f"Cannot parse index set from {text!r}")
    return tuple(sorted(values))
