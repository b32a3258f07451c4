"""Ordering reals through their s-numbers.

The real order coincides with the lexicographic order of s-numbers, so a
comparison stops at the first differing quotient. Equality is only
decidable for rational tails; two streams that agree on ``fuel``
quotients are reported as :class:`Indistinguishable`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Union

from .snumber import RationalTail, SNumber, encode_rational


class Order(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Indistinguishable:
    n: int

    def __str__(self):
        return f"?{self.n}"


Comparison = Union[Order, Indistinguishable]


def _sign(x: int, y: int) -> Order:
    return Order.LESS if x < y else Order.GREATER


def compare(s: SNumber, t: SNumber, fuel: int = 1000) -> Comparison:
    """Compare ``s`` and ``t`` quotient by quotient.

    Two rational tails are always resolved (their canonical prefixes are
    finite), whatever ``fuel`` is. Otherwise at most ``fuel`` quotient
    pairs are inspected.
    """
    if fuel < 1:
        raise ValueError("fuel must be positive")
    if isinstance(s, RationalTail) and isinstance(t, RationalTail):
        width = max(len(s.prefix), len(t.prefix))
        for x, y in zip(itertools.islice(s, width), itertools.islice(t, width)):
            if x != y:
                return _sign(x, y)
        return Order.EQUAL
    for x, y in itertools.islice(zip(s, t), fuel):
        if x != y:
            return _sign(x, y)
    return Indistinguishable(fuel)


def compare_rational(s: SNumber, q, fuel: int = 1000) -> Comparison:
    return compare(s, encode_rational(q), fuel)
