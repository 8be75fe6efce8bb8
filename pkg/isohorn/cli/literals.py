"""Parsers for the textual forms used on the command line.

Index tuples are bracketed lists ("[2,4] [1,3]"), partitions and weights
are comma lists separated by spaces or semicolons ("2,1 1,0" or
"1/2,1/2; 1,0").
"""

import re
from fractions import Fraction
from typing import List, Tuple

from ..errors import InvalidIndexError
from ..index import AIndex, BIndex, CIndex, Coweight, GroupSpec, Partition, Weight, parse_index

_BRACKETED = re.compile(r"\[([^\[\]]*)\]")
_SEPARATORS = re.compile(r"[\s;]+")


def split_tuples(text: str) -> List[str]:
    """Split "a,b c,d; e,f" into ["a,b", "c,d", "e,f"]."""
    return [tok for tok in _SEPARATORS.split(text.strip()) if tok]


def parse_index_list(text: str) -> List[Tuple[int, ...]]:
    """Parse "[2,4] [1,3]" into [(2, 4), (1, 3)].

    Raises:
        InvalidIndexError: No bracketed lists, or text outside the brackets
    """
    found = _BRACKETED.findall(text)
    leftover = _BRACKETED.sub("", text).strip()
    if not found or leftover:
        raise InvalidIndexError(f"Expected bracketed index lists like \"[2,4] [1,3]\", got {text!r}")
    return [parse_index(body) for body in found]


def make_indices(text: str, kind: str, size: int) -> List:
    """Index objects of one kind: "A" (size = N), "C" or "B" (size = n)."""
    raw = parse_index_list(text)
    if kind == "A":
        return [AIndex(elements, size) for elements in raw]
    if kind == "C":
        return [CIndex(elements, size) for elements in raw]
    if kind == "B":
        return [BIndex(elements, size) for elements in raw]
    raise InvalidIndexError(f"Unknown index kind {kind!r}")


def _integers(token: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in token.split(",") if part != "")
    except ValueError:
        raise InvalidIndexError(f"Cannot parse integers from {token!r}")


def parse_partition(token: str) -> Tuple[int, ...]:
    """Parse one weakly decreasing comma list such as "3,1,0"."""
    return Partition(_integers(token)).parts


def parse_partitions(text: str) -> List[Tuple[int, ...]]:
    partitions = [parse_partition(tok) for tok in split_tuples(text)]
    if not partitions:
        raise InvalidIndexError("Expected at least one partition")
    return partitions


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InvalidIndexError(f"Cannot parse rational coordinate {token!r}")


def parse_vector(token: str) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(part) for part in token.split(",") if part != "")


def parse_weights(text: str, group: GroupSpec) -> List[Weight]:
    """Integral weights of group from "1,0 1/2,1/2"."""
    weights = [Weight.integral(parse_vector(tok), group) for tok in split_tuples(text)]
    if not weights:
        raise InvalidIndexError("Expected at least one weight")
    return weights


def parse_coweights(text: str, group: GroupSpec) -> List[Coweight]:
    coweights = [Coweight(parse_vector(tok), group) for tok in split_tuples(text)]
    if not coweights:
        raise InvalidIndexError("Expected at least one coweight")
    return coweights
