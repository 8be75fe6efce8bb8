"""Littlewood-Richardson coefficients and SL(r) invariant dimensions.

Coefficients are counted by enumerating LR skew tableaux cell by cell in
reading order (right to left, top to bottom) with the column-strict and
lattice-word conditions checked as each cell is filled.
"""

import itertools
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterator, Optional, Sequence, Tuple

logger = logging.getLogger("IsoHorn")

Shape = Tuple[int, ...]


def trim(parts: Sequence[int]) -> Shape:
    """Drop trailing zeros."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(int(p) for p in parts)


def _contains(outer: Shape, inner: Shape) -> bool:
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam, mu}: the multiplicity of s_nu in s_lam * s_mu.

    Returns 0 (not an error) when |lam| + |mu| != |nu|.

    Example:
        >>> lr_coefficient((1,), (1, 1), (2, 1))
        1
    """
    return _lr(trim(lam), trim(mu), trim(nu))


@lru_cache(maxsize=None)
def _lr(lam: Shape, mu: Shape, nu: Shape) -> int:
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if not _contains(nu, lam) or not _contains(nu, mu):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    if not lam:
        return 1 if mu == nu else 0

    rows = len(nu)
    inner = lam + (0,) * (rows - len(lam))
    cells = [(i, j) for i in range(rows) for j in range(nu[i] - 1, inner[i] - 1, -1)]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        high = len(mu)
        right = filling.get((i, j + 1))
        if right is not None:
            high = min(high, right)
        above = filling.get((i - 1, j)) if i > 0 and j >= inner[i - 1] else None
        low = 1 if above is None else above + 1
        # the letter v in row i can be at most i + 1
        high = min(high, i + 1)
        total = 0
        for v in range(low, high + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(i, j)] = v
            counts[v] += 1
            total += fill(k + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return fill(0)


def _outer_shapes(lam: Shape, size: int, rows: Optional[int],
                  width: Optional[int]) -> Iterator[Shape]:
    """Partitions nu of |lam| + size cells containing lam, inside the optional box."""
    max_rows = len(lam) + size if rows is None else rows
    if len(lam) > max_rows or (width is not None and lam and lam[0] > width):
        return
    padded = lam + (0,) * (max_rows - len(lam))

    def grow(i: int, prefix: Shape, left: int) -> Iterator[Shape]:
        if left == 0:
            yield trim(prefix + padded[i:])
            return
        if i == max_rows:
            return
        upper = padded[i] + left
        if prefix:
            upper = min(upper, prefix[-1])
        if width is not None:
            upper = min(upper, width)
        for value in range(upper, padded[i] - 1, -1):
            yield from grow(i + 1, prefix + (value,), left - (value - padded[i]))

    yield from grow(0, (), size)


def lr_product(lam: Sequence[int], mu: Sequence[int], rows: Optional[int] = None,
               width: Optional[int] = None) -> Dict[Shape, int]:
    """Expand s_lam * s_mu, optionally truncated to a rows x width box.

    Returns:
        Mapping from trimmed partitions nu to c^nu_{lam, mu} > 0
    """
    lam, mu = trim(lam), trim(mu)
    result = {}
    for nu in _outer_shapes(lam, sum(mu), rows, width):
        value = _lr(lam, mu, nu)
        if value:
            result[nu] = value
    return result


def lr_multi_product(shapes: Sequence[Sequence[int]], rows: Optional[int] = None,
                     width: Optional[int] = None) -> Dict[Shape, int]:
    """Left fold of lr_product over several factors, kept as a sparse map."""
    current: Dict[Shape, int] = {(): 1}
    for shape in shapes:
        following: Dict[Shape, int] = defaultdict(int)
        for partial, mult in current.items():
            for nu, value in lr_product(partial, shape, rows, width).items():
                following[nu] += mult * value
        current = dict(following)
        if not current:
            break
    return current


def sl_invariant_dim(shapes: Sequence[Sequence[int]], r: int) -> int:
    """dim (V_{mu^1} x ... x V_{mu^s})^{SL(r)} for polynomial highest weights.

    The invariants are the multiplicity of the rectangle (k^r), k = sum|mu|/r,
    in the GL(r) product; partitions with more than r rows or first part
    beyond k are pruned during the fold.
    """
    shapes = [trim(s) for s in shapes]
    if any(len(s) > r for s in shapes):
        return 0
    total = sum(sum(s) for s in shapes)
    if r <= 0 or total % r:
        return 0
    k = total // r
    if any(s and s[0] > k for s in shapes):
        return 0
    folded = lr_multi_product(shapes, rows=r, width=k)
    return folded.get(trim((k,) * r), 0)


def hive_lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam, mu} by counting integer hives.

    Vertices (i, j, k) with i + j + k = n carry integers; the three sides
    carry partial sums of lam, of mu (shifted by |lam|) and of nu, and every
    rhombus satisfies the concavity inequality. Exponential in the number of
    interior vertices, so only for cross-checking small cases.
    """
    lam, mu, nu = trim(lam), trim(mu), trim(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    n = max(len(lam), len(mu), len(nu), 1)
    lam, mu, nu = (tuple(p) + (0,) * (n - len(p)) for p in (lam, mu, nu))

    boundary = {}
    for t in range(n + 1):
        boundary[(0, t, n - t)] = sum(lam[:t])
        boundary[(t, 0, n - t)] = sum(nu[:t])
        boundary[(t, n - t, 0)] = sum(lam) + sum(mu[:t])
    interior = [(i, j, n - i - j) for i in range(1, n) for j in range(1, n - i)]

    size = sum(nu)
    count = 0
    for values in itertools.product(range(-size, 2 * size + 1), repeat=len(interior)):
        hive = dict(boundary)
        hive.update(zip(interior, values))
        if _is_hive(hive, n):
            count += 1
    return count


def _is_hive(h: Dict[Tuple[int, int, int], int], n: int) -> bool:
    for i in range(n - 1):
        for j in range(n - 1 - i):
            k = n - 2 - i - j
            if h[(i + 1, j + 1, k)] + h[(i, j + 1, k + 1)] < h[(i, j + 2, k)] + h[(i + 1, j, k + 1)]:
                return False
            if h[(i + 1, j + 1, k)] + h[(i + 1, j, k + 1)] < h[(i + 2, j, k)] + h[(i, j + 1, k + 1)]:
                return False
            if h[(i + 1, j, k + 1)] + h[(i, j + 1, k + 1)] < h[(i, j, k + 2)] + h[(i + 1, j + 1, k)]:
                return False
    return True
