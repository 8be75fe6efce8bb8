"""Signed permutations: the Weyl groups of types B_n and C_n.

A signed permutation is stored as its window (w(1), ..., w(n)). Simple
reflections act on the right: s_i (i < n) swaps window positions i and
i+1, s_n negates the last position. Lengths are computed through the
embeddings into S_{2n} (type C) and S_{2n+1} (type B).
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from fractions import Fraction

from ..errors import InvalidIndexError
from .subsets import AIndex, BIndex, CIndex

logger = logging.getLogger("IsoHorn")

FAMILIES = ("B", "C")


def inversions(perm: Sequence[int]) -> int:
    """Number of inversions of a sequence of distinct integers (type A length)."""
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


@dataclass(frozen=True)
class SignedPerm:
    """Element of the Weyl group of type B_n or C_n.

    Attributes:
        window: (w(1), ..., w(n)), a signed arrangement of 1..n
        family: "B" or "C"
    """
    window: Tuple[int, ...]
    family: str = "C"

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(int(v) for v in self.window))
        if self.family not in FAMILIES:
            raise InvalidIndexError(f"Unknown Weyl group family {self.family!r}")
        if sorted(abs(v) for v in self.window) != list(range(1, len(self.window) + 1)):
            raise InvalidIndexError(f"{list(self.window)} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, n: int, family: str = "C") -> "SignedPerm":
        return cls(tuple(range(1, n + 1)), family)

    @classmethod
    def longest(cls, n: int, family: str = "C") -> "SignedPerm":
        return cls(tuple(-i for i in range(1, n + 1)), family)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int, family: str = "C") -> "SignedPerm":
        """Evaluate s_{i_1} s_{i_2} ... s_{i_k}."""
        w = cls.identity(n, family)
        for i in word:
            w = w.times_simple(i)
        return w

    def __call__(self, i: int) -> int:
        """Image of a signed value under w."""
        image = self.window[abs(i) - 1]
        return image if i > 0 else -image

    def neg_count(self) -> int:
        """mu(w): the number of negative window entries."""
        return sum(1 for v in self.window if v < 0)

    def embedding(self) -> Tuple[int, ...]:
        """The permutation of [2n] (type C) or [2n+1] (type B) attached to w.

        The image satisfies a_{N+1-i} = N+1-a_i and, in type B, fixes n+1.
        """
        n = self.n
        big = 2 * n + 1 if self.family == "B" else 2 * n
        head = [v if v > 0 else big + 1 + v for v in self.window]
        middle = [n + 1] if self.family == "B" else []
        tail = [big + 1 - a for a in reversed(head)]
        return tuple(head + middle + tail)

    def length(self) -> int:
        """Coxeter length, via the embedding into the symmetric group."""
        mu = self.neg_count()
        inv = inversions(self.embedding())
        if self.family == "B":
            return (inv - mu) // 2
        return (inv + mu) // 2

    def length_c(self) -> int:
        """(l(w_hat) + mu) / 2 with w_hat in S_{2n}."""
        return (inversions(self.as_family("C").embedding()) + self.neg_count()) // 2

    def length_b(self) -> int:
        """(l(w_hat') - mu) / 2 with w_hat' in S_{2n+1}."""
        return (inversions(self.as_family("B").embedding()) - self.neg_count()) // 2

    def as_family(self, family: str) -> "SignedPerm":
        return self if family == self.family else SignedPerm(self.window, family)

    def has_descent(self, i: int) -> bool:
        """Right descent at s_i, i.e. l(w s_i) < l(w)."""
        self._check_simple(i)
        if i == self.n:
            return self.window[-1] < 0
        return _signed_key(self.window[i - 1]) > _signed_key(self.window[i])

    def descents(self) -> List[int]:
        return [i for i in range(1, self.n + 1) if self.has_descent(i)]

    def times_simple(self, i: int) -> "SignedPerm":
        """Right multiplication w * s_i."""
        self._check_simple(i)
        window = list(self.window)
        if i == self.n:
            window[-1] = -window[-1]
        else:
            window[i - 1], window[i] = window[i], window[i - 1]
        return SignedPerm(tuple(window), self.family)

    def simple_times(self, i: int) -> "SignedPerm":
        """Left multiplication s_i * w."""
        return SignedPerm.from_word([i], self.n, self.family).compose(self)

    def compose(self, other: "SignedPerm") -> "SignedPerm":
        """The product self * other, acting as self(other(i))."""
        if other.n != self.n:
            raise InvalidIndexError("Cannot compose signed permutations of different rank")
        return SignedPerm(tuple(self(v) for v in other.window), self.family)

    def inverse(self) -> "SignedPerm":
        window = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            window[abs(v) - 1] = i if v > 0 else -i
        return SignedPerm(tuple(window), self.family)

    def reduced_word(self, largest: bool = False) -> Tuple[int, ...]:
        """A reduced word, by repeatedly stripping a right descent.

        Args:
            largest: Strip the largest descent instead of the smallest, which
                usually gives a second, different reduced word.
        """
        word: List[int] = []
        w = self
        while True:
            found = w.descents()
            if not found:
                break
            i = found[-1] if largest else found[0]
            word.append(i)
            w = w.times_simple(i)
        return tuple(reversed(word))

    def act(self, coords: Sequence) -> Tuple[Fraction, ...]:
        """Apply w to a vector in the epsilon basis: w(e_i) = +-e_|w(i)|."""
        if len(coords) != self.n:
            raise InvalidIndexError(f"Vector of length {len(coords)} does not match rank {self.n}")
        result = [Fraction(0)] * self.n
        for i, value in enumerate(coords):
            image = self.window[i]
            result[abs(image) - 1] = Fraction(value) if image > 0 else -Fraction(value)
        return tuple(result)

    def _check_simple(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise InvalidIndexError(f"Simple reflection s_{i} out of range for rank {self.n}")

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.window) + ")"


def _signed_key(v: int) -> Tuple[int, int]:
    """Order 1 < 2 < ... < n < -n < ... < -1."""
    return (0, v) if v > 0 else (1, v)


def all_elements(n: int, family: str = "C") -> Iterator[SignedPerm]:
    """Every element of W(B_n) / W(C_n), 2^n * n! of them."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPerm(tuple(s * p for s, p in zip(signs, perm)), family)


@lru_cache(maxsize=None)
def elements_by_length(n: int, family: str = "C") -> Tuple[SignedPerm, ...]:
    return tuple(sorted(all_elements(n, family), key=lambda w: (w.length(), w.window)))


def is_minimal_rep(w: SignedPerm, r: int) -> bool:
    """Membership in W^P for P = P_r: no right descent s_i with i != r."""
    return all(i == r for i in w.descents())


def parabolic_longest(n: int, r: int, family: str = "C") -> SignedPerm:
    """Longest element of W_P = S_r x W(B_{n-r})."""
    window = tuple(range(r, 0, -1)) + tuple(-i for i in range(r + 1, n + 1))
    return SignedPerm(window, family)


def max_coset_rep(w: SignedPerm, r: int) -> SignedPerm:
    """w * w_{0,P}: window (w(r), ..., w(1), -w(r+1), ..., -w(n))."""
    return w.compose(parabolic_longest(w.n, r, w.family))


def weyl_element(index, family: str = None):
    """Minimal-length coset representative attached to a Schubert index.

    Args:
        index: CIndex (gives w_I), BIndex (gives w'_J) or AIndex (gives v_A)
        family: Override the Weyl group tag of the result ("B" or "C")

    Returns:
        SignedPerm for CIndex/BIndex, a permutation tuple for AIndex
    """
    if isinstance(index, AIndex):
        return index.permutation()
    if isinstance(index, CIndex):
        default = "C"
    elif isinstance(index, BIndex):
        default = "B"
    else:
        raise InvalidIndexError(f"weyl_element() cannot handle {type(index).__name__}")
    head = index.signed_values()
    used = {abs(v) for v in head}
    tail = tuple(v for v in range(1, index.n + 1) if v not in used)
    return SignedPerm(head + tail, family or default)


def embedded_simple(i: int, n: int, family: str = "C") -> Tuple[Tuple[int, int], ...]:
    """Transpositions of the symmetric group whose product embeds s_i.

    Type C: s_i = r_i r_{2n-i}, s_n = r_n. Type B: s_i = r_i r_{2n+1-i},
    s_n = r_n r_{n+1} r_n (the transposition of n and n+2).
    """
    if not 1 <= i <= n:
        raise InvalidIndexError(f"Simple reflection s_{i} out of range for rank {n}")
    if family == "C":
        if i == n:
            return ((n, n + 1),)
        return ((i, i + 1), (2 * n - i, 2 * n - i + 1))
    if i == n:
        return ((n, n + 1), (n + 1, n + 2), (n, n + 1))
    return ((i, i + 1), (2 * n + 1 - i, 2 * n + 2 - i))


def apply_transpositions(perm: Sequence[int], transpositions) -> Tuple[int, ...]:
    """Right-multiply a one-line permutation by position transpositions in order."""
    result = list(perm)
    for a, b in transpositions:
        result[a - 1], result[b - 1] = result[b - 1], result[a - 1]
    return tuple(result)
