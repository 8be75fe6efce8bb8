"""Divided differences and Schubert representatives for types B_n and C_n.

Polynomials live in QQ[e1, ..., en] (sympy sparse rings). The simple roots
are e_i - e_{i+1} for i < n, and 2 e_n (type C) or e_n (type B). The
representative of the Schubert variety closure(B w B / B) is

    p_w = A_{w^{-1}} p_e,  p_e = (product of positive roots) / |W|,

where A_{s_{i_1} ... s_{i_k}} = A_{i_1} o ... o A_{i_k} for a reduced word.
p_w is homogeneous of degree l(w_0) - l(w), and the coefficient of p_x in
a homogeneous f of that degree is the constant A_{w_0 x}(f).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from ..constants import RANK_CAP
from ..errors import InvalidIndexError, RankCapError
from ..index import SignedPerm, elements_by_length
from ..models import CohomClassBC

logger = logging.getLogger("IsoHorn")


class CoinvariantRing:
    """The polynomial ring of a rank-n Cartan subalgebra with its Weyl group action.

    Attributes:
        n: Rank
        family: "B" or "C"
        ring: sympy PolyRing QQ[e1..en]
        gens: Generators e1..en
    """

    def __init__(self, n: int, family: str = "C", rank_cap: int = RANK_CAP):
        if family not in ("B", "C"):
            raise InvalidIndexError(f"Unknown root system family {family!r}")
        if n < 1:
            raise InvalidIndexError(f"Rank must be positive, got {n}")
        if n > rank_cap:
            raise RankCapError(f"Rank {n} exceeds the cap of {rank_cap}")
        self.n = n
        self.family = family
        self.ring, *gens = ring(",".join(f"e{i}" for i in range(1, n + 1)), QQ)
        self.gens = tuple(gens)
        self._reps: Dict[Tuple[int, ...], PolyElement] = {}
        self._build_representatives()

    def __repr__(self) -> str:
        return f"CoinvariantRing(n={self.n}, family={self.family!r})"

    # ------------------------------------------------------------------
    # Weyl group action and divided differences
    # ------------------------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise InvalidIndexError(f"Simple root index {i} out of range for rank {self.n}")

    def simple_root(self, i: int) -> PolyElement:
        self._check_index(i)
        e = self.gens
        if i < self.n:
            return e[i - 1] - e[i]
        return 2 * e[-1] if self.family == "C" else e[-1]

    def reflect(self, f: PolyElement, i: int) -> PolyElement:
        """s_i f: swap e_i and e_{i+1}, or negate e_n."""
        self._check_index(i)
        terms = {}
        for monom, coeff in f.terms():
            if i < self.n:
                exps = list(monom)
                exps[i - 1], exps[i] = exps[i], exps[i - 1]
                terms[tuple(exps)] = coeff
            else:
                terms[monom] = -coeff if monom[-1] % 2 else coeff
        return self.ring.from_dict(terms)

    def divided_difference(self, f: PolyElement, i: int) -> PolyElement:
        """A_i f = (f - s_i f) / alpha_i; the division is exact."""
        return (f - self.reflect(f, i)).exquo(self.simple_root(i))

    def apply_element(self, f: PolyElement, w: SignedPerm) -> PolyElement:
        """A_w f along a reduced word of w."""
        for i in reversed(w.reduced_word()):
            f = self.divided_difference(f, i)
            if not f:
                break
        return f

    # ------------------------------------------------------------------
    # Schubert representatives
    # ------------------------------------------------------------------

    def top_representative(self) -> PolyElement:
        """p_e = (product of the positive roots) / |W|."""
        e = self.gens
        product = self.ring.one
        for i in range(self.n):
            product *= e[i]
            for j in range(i + 1, self.n):
                product *= e[i] ** 2 - e[j] ** 2
        if self.family == "C":
            product *= 2 ** self.n
        return product * QQ(1, 2 ** self.n * factorial(self.n))

    def _build_representatives(self) -> None:
        identity = SignedPerm.identity(self.n, self.family)
        self._reps[identity.window] = self.top_representative()
        for w in elements_by_length(self.n, self.family):
            base = self._reps[w.window]
            for i in range(1, self.n + 1):
                if w.has_descent(i):
                    continue
                up = w.times_simple(i)
                if up.window not in self._reps:
                    self._reps[up.window] = self.divided_difference(base, i)
        logger.debug(f"Built {len(self._reps)} Schubert representatives for {self.family}{self.n}")

    def schubert_rep(self, w: SignedPerm) -> PolyElement:
        if w.n != self.n:
            raise InvalidIndexError(f"{w} is not in the Weyl group of rank {self.n}")
        return self._reps[w.window]

    @property
    def longest(self) -> SignedPerm:
        return SignedPerm.longest(self.n, self.family)

    @property
    def top_degree(self) -> int:
        return self.n * self.n

    # ------------------------------------------------------------------
    # Coefficient extraction
    # ------------------------------------------------------------------

    def constant(self, f: PolyElement) -> Fraction:
        """The degree-zero coefficient of f as a Fraction."""
        value = f.get(self.ring.zero_monom, QQ.zero)
        return Fraction(int(value.numerator), int(value.denominator))

    def coefficient(self, f: PolyElement, x: SignedPerm) -> Fraction:
        """Coefficient of p_x in a homogeneous f of degree l(w_0) - l(x)."""
        return self.constant(self.apply_element(f, self.longest.compose(x)))

    def expand(self, f: PolyElement, degree: int) -> CohomClassBC:
        """Expand a homogeneous f of the given degree in the basis p_x.

        Raises:
            InvalidIndexError: A coefficient is not an integer
        """
        result = CohomClassBC(space=f"{self.family}{self.n}/B")
        if degree > self.top_degree or not f:
            return result
        for x in elements_by_length(self.n, self.family):
            if x.length() != self.top_degree - degree:
                continue
            value = self.coefficient(f, x)
            if value.denominator != 1:
                raise InvalidIndexError(f"Non-integral structure constant {value} at {x}")
            result.add_term(x, int(value))
        return result


@lru_cache(maxsize=None)
def coinvariant_ring(n: int, family: str = "C", rank_cap: int = RANK_CAP) -> CoinvariantRing:
    """Shared ring per (n, family); building it computes all 2^n n! representatives."""
    return CoinvariantRing(n, family, rank_cap)


def _ring_of(f: PolyElement, family: str) -> CoinvariantRing:
    return coinvariant_ring(f.ring.ngens, family)


def divided_difference(f: PolyElement, i: int, family: str = "C") -> PolyElement:
    """A_i f for the root system of the given family."""
    return _ring_of(f, family).divided_difference(f, i)


def schubert_rep(w: SignedPerm, family: str = None) -> PolyElement:
    """p_w for w in W(B_n) or W(C_n); family defaults to the tag of w."""
    return coinvariant_ring(w.n, family or w.family).schubert_rep(w)


def flag_structure_constants(u: SignedPerm, v: SignedPerm, family: str = None,
                             n: int = None) -> CohomClassBC:
    """[X_u] [X_v] = sum c^w_{u,v} [X_w] in H*(G/B).

    Example:
        >>> w0 = SignedPerm.longest(2)
        >>> flag_structure_constants(SignedPerm((1, -2)), w0).terms
        {SignedPerm(window=(1, -2), family='C'): 1}
    """
    family = family or u.family
    n = n or u.n
    if u.n != n or v.n != n:
        raise InvalidIndexError(f"{u} and {v} must both lie in the Weyl group of rank {n}")
    engine = coinvariant_ring(n, family)
    u, v = u.as_family(family), v.as_family(family)
    degree = 2 * engine.top_degree - u.length() - v.length()
    product = engine.schubert_rep(u) * engine.schubert_rep(v)
    return engine.expand(product, degree)


def grain_check(n: int) -> bool:
    """p_w^C = 2^(n - mu(w)) p_w^B for every w, as polynomials."""
    type_c = coinvariant_ring(n, "C")
    type_b = coinvariant_ring(n, "B")
    for w in elements_by_length(n, "C"):
        left = type_c.schubert_rep(w)
        right = type_b.schubert_rep(w.as_family("B")) * 2 ** (n - w.neg_count())
        # The rings are built separately; compare term dictionaries.
        if dict(left.terms()) != dict(right.terms()):
            logger.info(f"2-power relation fails at w = {w}")
            return False
    return True
