"""Sparse cohomology classes in a Schubert basis."""

from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Tuple


def basis_sort_key(key: Any):
    """Order basis labels (index sets, signed permutations) deterministically."""
    if hasattr(key, "elements"):
        return (len(key.elements), key.elements)
    if hasattr(key, "window"):
        return (len(key.window), key.window)
    return (0, key)


@dataclass
class CohomClass:
    """A class sum c_key [key] with arbitrary-precision integer coefficients.

    Attributes:
        terms: Basis label -> nonzero integer coefficient
        space: Human-readable name of the ambient variety, e.g. "Gr(2,4)"
    """
    terms: Dict[Hashable, int] = field(default_factory=dict)
    space: str = ""

    def __post_init__(self):
        self.terms = {k: int(v) for k, v in self.terms.items() if v != 0}

    def coefficient(self, key: Hashable) -> int:
        return self.terms.get(key, 0)

    def add_term(self, key: Hashable, value: int) -> None:
        total = self.terms.get(key, 0) + int(value)
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Hashable]:
        return sorted(self.terms, key=basis_sort_key)

    def items(self) -> List[Tuple[Hashable, int]]:
        return [(k, self.terms[k]) for k in self.support()]

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.terms.values())

    def as_dict(self) -> Dict[str, int]:
        """Canonical textual form, e.g. {"[1, 3]": 2}."""
        return {str(k): v for k, v in self.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in self.items())


class CohomClassA(CohomClass):
    """Class on Gr(m, N) in the basis of Schubert classes [Omega_A]."""


class CohomClassBC(CohomClass):
    """Class on G/B or IG(r,2n) / OG(r,2n+1) in the Schubert basis."""
