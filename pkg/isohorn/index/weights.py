"""Weights, coweights and the numeric functionals built from them.

Weights and coweights are exact rational vectors in the epsilon basis
(and its dual basis of epsilon-bar coweights). Type A uses N coordinates
taken modulo (1, ..., 1); types B, C and Spin use n coordinates.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..errors import InconsistencyError, InvalidIndexError, PreconditionError
from .cells import mubar
from .subsets import CIndex, dominance_count
from .weyl import SignedPerm, weyl_element

logger = logging.getLogger("IsoHorn")

FAMILIES = ("A", "B", "C", "Spin")

_GROUP_PATTERN = re.compile(r"^\s*(SL|Sp|SO|Spin)\s*\(\s*(\d+)\s*\)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class GroupSpec:
    """A classical group of desk-scale rank.

    Attributes:
        family: "A" for SL(N), "B" for SO(2n+1), "C" for Sp(2n),
            "Spin" for Spin(2n+1)
        rank: Lie rank (N - 1 for SL(N), n otherwise)
    """
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidIndexError(f"Unknown group family {self.family!r}")
        if self.rank < 1:
            raise InvalidIndexError(f"Group rank must be positive, got {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse "SL(4)", "Sp(4)", "SO(5)" or "Spin(5)".

        Raises:
            InvalidIndexError: For unknown names or mismatched parity
        """
        match = _GROUP_PATTERN.match(text)
        if not match:
            raise InvalidIndexError(f"Cannot parse group name {text!r}")
        kind, size = match.group(1).lower(), int(match.group(2))
        if kind == "sl":
            return cls("A", size - 1)
        if kind == "sp":
            if size % 2:
                raise InvalidIndexError(f"Sp({size}) needs an even size")
            return cls("C", size // 2)
        if size % 2 == 0:
            raise InvalidIndexError(f"{match.group(1)}({size}) needs an odd size (type D is unsupported)")
        return cls("Spin" if kind == "spin" else "B", size // 2)

    @property
    def coords(self) -> int:
        """Number of epsilon coordinates."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def weyl_family(self) -> str:
        return "B" if self.family == "Spin" else self.family

    @property
    def name(self) -> str:
        if self.family == "A":
            return f"SL({self.rank + 1})"
        if self.family == "C":
            return f"Sp({2 * self.rank})"
        if self.family == "B":
            return f"SO({2 * self.rank + 1})"
        return f"Spin({2 * self.rank + 1})"

    def __str__(self) -> str:
        return self.name


def _fractions(coords: Sequence) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(c) for c in coords)
    except (TypeError, ValueError) as e:
        raise InvalidIndexError(f"Coordinates {list(coords)} are not rational: {e}")


@dataclass(frozen=True)
class Weight:
    """Element of h* in epsilon coordinates.

    Attributes:
        coords: Exact rational coordinates
        group: The group whose Cartan subalgebra this lives on
    """
    coords: Tuple[Fraction, ...]
    group: GroupSpec

    def __post_init__(self):
        object.__setattr__(self, "coords", _fractions(self.coords))
        if len(self.coords) != self.group.coords:
            raise InvalidIndexError(
                f"{self.group.name} weights have {self.group.coords} coordinates, got {len(self.coords)}"
            )

    @classmethod
    def integral(cls, coords: Sequence, group: GroupSpec) -> "Weight":
        """Build a weight and check it lies in the weight lattice of `group`."""
        weight = cls(tuple(coords), group)
        if not weight.is_integral():
            raise InvalidIndexError(
                f"{[str(c) for c in weight.coords]} is not an integral weight of {group.name}"
            )
        return weight

    def is_integral(self) -> bool:
        """Integer coordinates; Spin also allows all-half-integer ones."""
        if all(c.denominator == 1 for c in self.coords):
            return True
        if self.group.family == "Spin":
            return all(c.denominator == 2 for c in self.coords)
        return False

    def coroot_pairings(self) -> Tuple[Fraction, ...]:
        """Values on the simple coroots of the tagged group."""
        c = self.coords
        if self.group.family == "A":
            return tuple(c[i] - c[i + 1] for i in range(len(c) - 1))
        head = tuple(c[i] - c[i + 1] for i in range(len(c) - 1))
        if self.group.family == "C":
            return head + (c[-1],)
        return head + (2 * c[-1],)

    def is_dominant(self) -> bool:
        return all(p >= 0 for p in self.coroot_pairings())

    def normalized(self) -> "Weight":
        """Type A representative with last coordinate 0; identity otherwise."""
        if self.group.family != "A":
            return self
        shift = self.coords[-1]
        return Weight(tuple(c - shift for c in self.coords), self.group)

    def scaled(self, factor) -> "Weight":
        return Weight(tuple(Fraction(factor) * c for c in self.coords), self.group)

    def __add__(self, other: "Weight") -> "Weight":
        if other.group != self.group:
            raise InvalidIndexError(f"Cannot add weights of {self.group} and {other.group}")
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.group)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Coweight:
    """Element of h in epsilon-bar coordinates."""
    coords: Tuple[Fraction, ...]
    group: GroupSpec

    def __post_init__(self):
        object.__setattr__(self, "coords", _fractions(self.coords))
        if len(self.coords) != self.group.coords:
            raise InvalidIndexError(
                f"{self.group.name} coweights have {self.group.coords} coordinates, got {len(self.coords)}"
            )

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def pairing(weight, coweight) -> Fraction:
    """<lambda, x> = sum lambda_i x_i (both may be Weight/Coweight or plain vectors)."""
    left = weight.coords if isinstance(weight, Weight) else _fractions(weight)
    right = coweight.coords if isinstance(coweight, Coweight) else _fractions(coweight)
    if len(left) != len(right):
        raise InvalidIndexError("Weight and coweight lengths differ")
    return sum((a * b for a, b in zip(left, right)), Fraction(0))


def rho(group: GroupSpec) -> Weight:
    """Half sum of positive roots: (n, ..., 1) for C, (n-1/2, ..., 1/2) for B."""
    n = group.rank
    if group.family == "A":
        N = n + 1
        return Weight(tuple(Fraction(N - 1 - 2 * i, 2) for i in range(N)), group)
    if group.family == "C":
        return Weight(tuple(Fraction(n - i) for i in range(n)), group)
    return Weight(tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n)), group)


def fundamental_weight(group: GroupSpec, i: int) -> Weight:
    """omega_i; for types B/Spin omega_n is the half-spin weight."""
    n = group.rank
    if not 1 <= i <= n:
        raise InvalidIndexError(f"omega_{i} out of range for {group.name}")
    if group.family in ("B", "Spin") and i == n:
        return Weight(tuple(Fraction(1, 2) for _ in range(n)), group)
    return Weight(tuple(1 if k < i else 0 for k in range(group.coords)), group)


def fundamental_coweight(group: GroupSpec, i: int) -> Coweight:
    """x_i, dual to the simple roots.

    x_i = e1bar + ... + eibar except x_n^C = (e1bar + ... + enbar) / 2.
    Type A coweights are made traceless.
    """
    n = group.rank
    if not 1 <= i <= n:
        raise InvalidIndexError(f"x_{i} out of range for {group.name}")
    if group.family == "A":
        N = n + 1
        return Coweight(tuple(Fraction(N - i, N) if k < i else Fraction(-i, N)
                              for k in range(N)), group)
    if group.family == "C" and i == n:
        return Coweight(tuple(Fraction(1, 2) for _ in range(n)), group)
    return Coweight(tuple(1 if k < i else 0 for k in range(n)), group)


def kappa(coweight: Coweight) -> Weight:
    """The identification h -> h* sending epsilon-bar_i to epsilon_i."""
    return Weight(coweight.coords, coweight.group)


def restrict_weight(weight: Weight) -> Weight:
    """Restrict a dominant SL(2n) (resp. SL(2n+1)) weight to Sp(2n) (resp. SO(2n+1)).

    The epsilon_i coordinate of the restriction is lambda_i - lambda_{N+1-i}.

    Example:
        >>> restrict_weight(Weight((1, 1, 0, 0), GroupSpec("A", 3))).coords
        (Fraction(1, 1), Fraction(1, 1))
    """
    if weight.group.family != "A":
        raise InvalidIndexError(f"Only SL(N) weights can be restricted, got {weight.group.name}")
    if not weight.is_dominant():
        raise InvalidIndexError(f"Weight {weight} is not dominant for {weight.group.name}")
    N = weight.group.coords
    n = N // 2
    target = GroupSpec("C" if N % 2 == 0 else "B", n)
    c = weight.coords
    return Weight(tuple(c[i] - c[N - 1 - i] for i in range(n)), target)


def chi(w: SignedPerm) -> Tuple[Fraction, ...]:
    """chi_w = rho + w^{-1} rho for the family of w."""
    group = GroupSpec(w.family, w.n)
    base = rho(group).coords
    moved = w.inverse().act(base)
    return tuple(a + b for a, b in zip(base, moved))


@dataclass(frozen=True)
class ThetaValues:
    theta_c: Fraction
    theta_b: Fraction
    mubar: int


def _check_family(indices: Sequence[CIndex], r: int, n: int) -> None:
    if r > n:
        raise PreconditionError(f"theta_values needs r <= n, got r={r}, n={n}")
    for index in indices:
        if not isinstance(index, CIndex) or index.r != r or index.n != n:
            raise PreconditionError(f"{index} is not an index of FS({r},{2 * n})")


def theta_values(index: CIndex, context: Sequence[CIndex], r: int, n: int) -> ThetaValues:
    """theta^C(I) and theta^B(I) for I against the context I^1, ..., I^s.

    theta(I) = (chi_{w_I} - sum_j chi_{w_{I^j}})(x_r) with the rho and x_r of
    each type. The companion identity is asserted on every call:
    theta^C - theta^B = mubar(I) - sum mubar(I^j) for r < n, and
    2 theta^C - theta^B = mubar(I) - sum mubar(I^j) for r = n.

    Raises:
        PreconditionError: If some index is not in FS(r, 2n)
        InconsistencyError: If the companion identity fails
    """
    _check_family([index, *context], r, n)
    values = {}
    for family in ("C", "B"):
        group = GroupSpec(family, n)
        total = list(chi(weyl_element(index, family)))
        for other in context:
            for k, value in enumerate(chi(weyl_element(other, family))):
                total[k] -= value
        values[family] = pairing(total, fundamental_coweight(group, r)) if r else Fraction(0)

    bar_value = mubar(index)
    expected = bar_value - sum(mubar(other) for other in context)
    scale = 2 if r == n and r > 0 else 1
    if scale * values["C"] - values["B"] != expected:
        logger.error(f"theta identity failed for {index} against {[str(c) for c in context]}")
        raise InconsistencyError(
            "theta^C / theta^B identity violated",
            details={"index": list(index.elements), "theta_c": str(values["C"]),
                     "theta_b": str(values["B"]), "expected": expected},
        )
    return ThetaValues(theta_c=values["C"], theta_b=values["B"], mubar=bar_value)


def mu_functional(index: CIndex) -> Fraction:
    """(w_I^{-1} epsilon)(x_r^B), which equals r - 2 mu(w_I).

    Raises:
        InconsistencyError: If the two sides differ
    """
    n, r = index.n, index.r
    w = weyl_element(index, "B")
    moved = w.inverse().act([1] * n)
    value = sum(moved[:r], Fraction(0))
    expected = r - 2 * dominance_count(index.elements, [n])
    if value != expected:
        raise InconsistencyError(f"mu functional of {index} is {value}, expected {expected}")
    return value
