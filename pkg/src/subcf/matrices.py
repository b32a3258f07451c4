"""Unimodular 2x2 integer matrices and their Mobius action on Q u {oo}.

Scalars are :class:`fractions.Fraction`; the point at infinity is the
module constant :data:`INF`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return "INF"


INF = _Infinity()

ExtendedRational = Union[Fraction, _Infinity]


@dataclass(frozen=True)
class Unimodular:
    """Integer matrix ``((a, b), (c, d))`` with determinant +1 or -1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"determinant {self.det} is not +-1 for {self.rows}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other: Unimodular) -> Unimodular:
        if not isinstance(other, Unimodular):
            return NotImplemented
        return mat_mul(self, other)

    def __call__(self, x):
        return mobius_apply(self, x)

    def inverse(self) -> Unimodular:
        return mat_inv(self)

    def __repr__(self):
        return f"Unimodular(({self.a}, {self.b}), ({self.c}, {self.d}))"


def _trusted(a: int, b: int, c: int, d: int) -> Unimodular:
    # for products and inverses of unimodular matrices; skips the determinant check
    g = object.__new__(Unimodular)
    g.__dict__.update(a=a, b=b, c=c, d=d)
    return g


IDENTITY = Unimodular(1, 0, 0, 1)


def v(m: int) -> Unimodular:
    """Subtraction step ``x -> m - 1/x``."""
    return Unimodular(m, -1, 1, 0)


def vdot(m: int) -> Unimodular:
    """Simple continued fraction step ``x -> m + 1/x``."""
    return Unimodular(m, 1, 1, 0)


def kappa() -> Unimodular:
    """The involution ``((1, 0), (1, -1))`` linking :func:`v` and :func:`vdot`."""
    return Unimodular(1, 0, 1, -1)


def v2_pow(k: int) -> Unimodular:
    """Closed form of ``v(2) ** k``, valid for every integer k."""
    return Unimodular(1 + k, -k, k, 1 - k)


def mat_mul(g: Unimodular, h: Unimodular) -> Unimodular:
    return _trusted(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def mat_inv(g: Unimodular) -> Unimodular:
    # adjugate divided by det, and det is its own inverse
    e = g.det
    return _trusted(e * g.d, -e * g.b, -e * g.c, e * g.a)


def mobius_apply(g: Unimodular, x) -> ExtendedRational:
    """Evaluate ``(a x + b) / (c x + d)`` exactly.

    ``g(INF)`` is ``a/c`` (or INF when c == 0) and the pole ``-d/c`` maps
    to INF.
    """
    if x is INF:
        if g.c == 0:
            return INF
        return Fraction(g.a, g.c)
    if not isinstance(x, Rational):
        raise TypeError(f"expected a rational or INF, got {type(x).__name__}")
    p, q = x.numerator, x.denominator
    num = g.a * p + g.b * q
    den = g.c * p + g.d * q
    if den == 0:
        return INF
    return Fraction(num, den)
