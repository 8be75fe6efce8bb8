"""Cell statistics of isotropic Grassmannians and the index reindexings."""

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..errors import InvalidIndexError
from .subsets import BIndex, CIndex, dominance_count


@dataclass(frozen=True)
class CellStats:
    """Numerical data of the cell of IG(r, 2n) indexed by I.

    Attributes:
        mu: |I > n|, the number of negative entries of w_I
        sym2: (|I > I bar| + mu) / 2
        wedge2: |I > I bar| - sym2
        cosym2: r(r+1)/2 - sym2
        cowedge2: r(r-1)/2 - wedge2
        dim: |I > I tilde| + sym2
        codim: dim IG(r, 2n) - dim
    """
    mu: int
    sym2: int
    wedge2: int
    cosym2: int
    cowedge2: int
    dim: int
    codim: int

    @property
    def mubar(self) -> int:
        return self.cosym2 - self.cowedge2


@dataclass(frozen=True)
class BCellStats:
    """Numerical data of the cell of OG(r, 2n+1) indexed by J."""
    dim: int
    codim: int
    wedge2: int
    cowedge2: int


def ig_dimension(r: int, n: int) -> int:
    """dim IG(r, 2n) = r(4n - 3r + 1) / 2."""
    return r * (4 * n - 3 * r + 1) // 2


def og_dimension(r: int, n: int) -> int:
    """dim OG(r, 2n+1) = r(r-1)/2 + r(2n+1-2r)."""
    return r * (r - 1) // 2 + r * (2 * n + 1 - 2 * r)


def gr_dimension(m: int, N: int) -> int:
    return m * (N - m)


def cell_stats(index: CIndex) -> CellStats:
    """Compute the cell record of a CIndex.

    Example:
        >>> cell_stats(CIndex((2, 4), 2)).dim
        2
    """
    if not isinstance(index, CIndex):
        raise InvalidIndexError(f"cell_stats() needs a CIndex, got {type(index).__name__}")
    r, n = index.r, index.n
    bar, tilde = index.complements()
    mu = dominance_count(index.elements, [n])
    crossing = dominance_count(index.elements, bar)
    sym2 = (crossing + mu) // 2
    wedge2 = crossing - sym2
    dim = dominance_count(index.elements, tilde) + sym2
    return CellStats(
        mu=mu,
        sym2=sym2,
        wedge2=wedge2,
        cosym2=r * (r + 1) // 2 - sym2,
        cowedge2=r * (r - 1) // 2 - wedge2,
        dim=dim,
        codim=ig_dimension(r, n) - dim,
    )


def cell_stats_b(index: BIndex) -> BCellStats:
    """Compute the cell record of a BIndex.

    wedge2 is (|J > J bar'| - |J > n|) / 2, the alternating count of J read
    as a type C pattern inside J and its bar.
    """
    if not isinstance(index, BIndex):
        raise InvalidIndexError(f"cell_stats_b() needs a BIndex, got {type(index).__name__}")
    r, n = index.r, index.n
    bar, tilde = index.complements()
    mu = dominance_count(index.elements, [n])
    wedge2 = (dominance_count(index.elements, bar) - mu) // 2
    dim = dominance_count(index.elements, tilde) + wedge2
    return BCellStats(
        dim=dim,
        codim=og_dimension(r, n) - dim,
        wedge2=wedge2,
        cowedge2=r * (r - 1) // 2 - wedge2,
    )


def mubar(index: CIndex) -> int:
    """r - mu(w_I)."""
    return index.r - dominance_count(index.elements, [index.n])


def _compress(values: Sequence[int], support: Sequence[int]) -> Tuple[int, ...]:
    position = {v: k for k, v in enumerate(sorted(support), start=1)}
    return tuple(sorted(position[v] for v in values))


def reindex_io(index: CIndex) -> CIndex:
    """Compress I inside I and its bar onto [2r], giving I_o in FS(r, 2r).

    Example:
        >>> reindex_io(CIndex((1, 4), 3)).elements
        (1, 3)
    """
    support = index.elements + index.bar
    return CIndex(_compress(index.elements, support), index.r)


def reindex_jo(index: BIndex) -> CIndex:
    """Reduce J in FS'(r, 2n+1) to an index of FS(r-1, 2r-2).

    The largest a <= n in J and its bar is removed together with its
    partner b = 2n+2-a, then the rest is compressed.
    """
    if index.r == 0:
        raise InvalidIndexError("reindex_jo() needs a nonempty index")
    support = index.elements + index.bar
    a = max(v for v in support if v <= index.n)
    b = 2 * index.n + 2 - a
    support = [v for v in support if v not in (a, b)]
    kept = [v for v in index.elements if v not in (a, b)]
    return CIndex(_compress(kept, support), index.r - 1)


def _og_plus_check(elements: Sequence[int], r: int) -> None:
    if len(elements) != r or len(set(elements)) != r:
        raise InvalidIndexError(f"{list(elements)} must have {r} distinct elements")
    if any(not 1 <= x <= 2 * r for x in elements):
        raise InvalidIndexError(f"{list(elements)} leaves [{2 * r}]")
    if set(elements) & {2 * r + 1 - x for x in elements}:
        raise InvalidIndexError(f"{list(elements)} meets its bar in [{2 * r}]")
    if sum(1 for x in elements if x <= r) % 2 != r % 2:
        raise InvalidIndexError(
            f"{list(elements)} has |I in [r]| of the wrong parity for r={r}"
        )


def og_plus_compress(index: BIndex) -> Tuple[int, ...]:
    """Compress J inside J and its bar onto [2r], landing in the OG+(r, 2r) family.

    When the compressed set has the wrong parity of elements in [r], r and
    r+1 are exchanged, which identifies the two families.

    Example:
        >>> og_plus_compress(BIndex((1, 3), 3))
        (1, 2)
    """
    r = index.r
    support = sorted(index.elements + index.bar)
    position = {v: k for k, v in enumerate(support, start=1)}
    compressed = {position[v] for v in index.elements}
    if sum(1 for x in compressed if x <= r) % 2 != r % 2:
        compressed ^= {r, r + 1}
    return tuple(sorted(compressed))


def og_triple_bijection(elements: Sequence[int], r: int) -> CIndex:
    """Send an index of the OG+(r, 2r) family to FS(r-1, 2r-2).

    Drops whichever of r, r+1 lies in I, then compresses
    [2r] minus {r, r+1} onto [2r-2].

    Raises:
        InvalidIndexError: On a disjointness or parity violation
    """
    elements = tuple(sorted(elements))
    _og_plus_check(elements, r)
    kept = [x if x < r else x - 2 for x in elements if x not in (r, r + 1)]
    return CIndex(tuple(kept), r - 1)


def og_triple_inverse(index: CIndex) -> Tuple[int, ...]:
    """Inverse of og_triple_bijection."""
    r = index.n + 1
    lifted = [x if x < r else x + 2 for x in index.elements]
    low = sum(1 for x in lifted if x <= r)
    lifted.append(r + 1 if low % 2 == r % 2 else r)
    return tuple(sorted(lifted))
