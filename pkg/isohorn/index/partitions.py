"""Partitions in a box and the operations on them.

A partition is stored with a fixed number of parts, zeros included, since
the box it lives in matters for flip, dual and the subset bijection.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from ..errors import InvalidIndexError
from .subsets import AIndex


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative integer sequence.

    Attributes:
        parts: mu_1 >= ... >= mu_r >= 0 (length r, zeros kept)
        width: Optional bound m with mu_1 <= m
    """
    parts: Tuple[int, ...]
    width: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise InvalidIndexError(f"Partition {list(self.parts)} has a negative part")
        if any(b > a for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidIndexError(f"Partition {list(self.parts)} is not weakly decreasing")
        if self.width is not None and self.parts and self.parts[0] > self.width:
            raise InvalidIndexError(
                f"Partition {list(self.parts)} is wider than {self.width}"
            )

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, item):
        return self.parts[item]

    @property
    def size(self) -> int:
        """|mu|"""
        return sum(self.parts)

    def trimmed(self) -> Tuple[int, ...]:
        """Parts with trailing zeros removed."""
        parts = list(self.parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return tuple(parts)

    def __str__(self) -> str:
        return str(list(self.parts))


def _as_partition(mu) -> Partition:
    return mu if isinstance(mu, Partition) else Partition(tuple(mu))


def conjugate(mu: Sequence[int], length: Optional[int] = None) -> Partition:
    """Transpose the Young diagram of mu.

    Args:
        mu: A partition
        length: Pad (with zeros) to this many parts; defaults to mu_1

    Returns:
        The conjugate partition

    Example:
        >>> conjugate((3, 1)).parts
        (2, 1, 1)
    """
    mu = _as_partition(mu)
    top = mu[0] if len(mu) else 0
    if length is None:
        length = top
    if top > length:
        raise InvalidIndexError(f"Conjugate of {list(mu)} needs {top} parts, asked for {length}")
    parts = tuple(sum(1 for p in mu if p >= c) for c in range(1, length + 1))
    return Partition(parts)


def dual(mu: Sequence[int], k: int) -> Partition:
    """Complement inside the r x k box: (k - mu_r, ..., k - mu_1)."""
    mu = _as_partition(mu)
    if len(mu) and mu[0] > k:
        raise InvalidIndexError(f"Partition {list(mu)} does not fit in width {k}")
    return Partition(tuple(k - p for p in reversed(mu.parts)), width=k)


def flip(mu: Sequence[int], m: int) -> Partition:
    """The m-flip of mu: conjugate of (m - mu_r, ..., m - mu_1), with m parts.

    For mu with r parts the result has m parts bounded by r, and
    flip(flip(mu, m), r) == mu.

    Raises:
        InvalidIndexError: If mu_1 > m
    """
    mu = _as_partition(mu)
    complement = dual(mu, m)
    flipped = conjugate(complement, length=m)
    return Partition(flipped.parts, width=len(mu))


def partition_subset(mu: Sequence[int], m: int, N: int) -> AIndex:
    """Map a partition in the m x (N-m) box to its subset in S(m, N).

    The a-th element is N - m + a - mu_a.

    Example:
        >>> partition_subset((1, 0), 2, 4).elements
        (2, 4)
    """
    mu = _as_partition(mu)
    if len(mu) != m:
        raise InvalidIndexError(f"Partition {list(mu)} must have exactly {m} parts")
    if m > N or (m and mu[0] > N - m):
        raise InvalidIndexError(f"Partition {list(mu)} does not fit in the {m}x{N - m} box")
    return AIndex(tuple(N - m + a - mu[a - 1] for a in range(1, m + 1)), N)


def subset_partition(index: AIndex) -> Partition:
    """Inverse of partition_subset: mu_a = N - m + a - a_a."""
    m, N = index.cardinality, index.ambient
    return Partition(tuple(N - m + a - x for a, x in enumerate(index.elements, start=1)),
                     width=N - m)


def partitions_in_box(rows: int, width: int) -> Iterator[Partition]:
    """Enumerate partitions with `rows` parts bounded by `width`, largest first."""
    for parts in itertools.combinations_with_replacement(range(width, -1, -1), rows):
        yield Partition(parts, width=width)
