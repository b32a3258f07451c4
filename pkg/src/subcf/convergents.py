"""Right/left convergents, accuracies and everything read off them.

For an s-number ``s`` the matrix ``g_n = v(s0) v(s1) ... v(sn)`` has
entries ``((a, b), (c, d))``; the right convergent is ``a/c``, the left
convergent ``(a+b)/(c+d)`` and the accuracy ``(c+d)*c``. The value of
``s`` always lies in ``[left, right)`` and the bracket has width exactly
``1/accuracy``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterator

from .errors import DomainError, FuelExhausted
from .matrices import Unimodular, _trusted, mat_inv, mobius_apply
from .snumber import RationalTail, SNumber, eval_finite_scf

DEFAULT_DIGIT_FUEL = 100_000


@dataclass(frozen=True)
class ConvergentRecord:
    """Index ``n``, quotient ``s_n`` and ``g_n``; the convergents derive from ``g``."""

    n: int
    quotient: int
    g: Unimodular

    @cached_property
    def right(self) -> Fraction:
        return Fraction(self.g.a, self.g.c)

    @cached_property
    def left(self) -> Fraction:
        return Fraction(self.g.a + self.g.b, self.g.c + self.g.d)

    @property
    def accuracy(self) -> int:
        return (self.g.c + self.g.d) * self.g.c


def convergent_stream(s: SNumber) -> Iterator[ConvergentRecord]:
    """Yield the record for n = 0, 1, 2, ... by right-multiplying ``v(s_n)``.

    Unbounded for :class:`RationalTail`; for streams the iteration raises
    the stream's :class:`~subcf.errors.Exhausted` error when it runs out.
    """
    a, b, c, d = 1, 0, 0, 1
    for n, q in enumerate(s):
        # (a b; c d) v(q) = (qa+b  -a; qc+d  -c)
        a, b, c, d = q * a + b, -a, q * c + d, -c
        yield ConvergentRecord(n, q, _trusted(a, b, c, d))


def nth_record(s: SNumber, n: int) -> ConvergentRecord:
    if n < 0:
        raise ValueError("index must be non-negative")
    for rec in convergent_stream(s):
        if rec.n == n:
            return rec
    raise AssertionError("unreachable: convergent_stream ends only by raising")


def decode_rational(s: RationalTail) -> Fraction:
    """Inverse of :func:`~subcf.snumber.encode_rational`: ``<s0, ..., sk, 1>``."""
    if not isinstance(s, RationalTail):
        raise DomainError("only rational-tail s-numbers decode to an exact rational")
    return eval_finite_scf(s.prefix, 1)


def bracket(s: SNumber, n: int) -> tuple[Fraction, Fraction]:
    """``(L_n, R_n)`` with ``L_n <= value < R_n``."""
    rec = nth_record(s, n)
    return rec.left, rec.right


def approximate(s: SNumber, eps) -> Fraction:
    """First right convergent whose bracket width ``1/A_n`` is at most ``eps``.

    The returned ``R_n`` satisfies ``0 < R_n - value <= eps``.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    for rec in convergent_stream(s):
        if rec.accuracy * eps >= 1:
            return rec.right
    raise AssertionError("unreachable")


def recover_quotient(g_prev: Unimodular, right_n) -> int:
    """Quotient ``s_n = g_{n-1}^{-1}(R_n)``; pass the identity for n = 0."""
    val = mobius_apply(mat_inv(g_prev), Fraction(right_n))
    if not isinstance(val, Fraction) or val.denominator != 1:
        raise DomainError(f"{right_n} is not a right convergent following {g_prev}")
    return val.numerator


def matrix_from_right_convergent(right_n) -> Unimodular:
    """Rebuild ``g_n`` from ``R_n = a/c`` alone.

    ``d`` is the inverse of ``a`` modulo ``c`` moved into ``(-c, 0]`` and
    ``b`` follows from ``ad - bc = 1``.
    """
    right_n = Fraction(right_n)
    a, c = right_n.numerator, right_n.denominator
    inv = pow(a, -1, c) if c > 1 else 0
    d = inv - c if inv else 0
    b, rem = divmod(a * d - 1, c)
    assert rem == 0
    return Unimodular(a, b, c, d)


def _format_truncated(t: int, negative: bool, count: int) -> str:
    digits = str(abs(t)).rjust(count + 1, "0")
    sign = "-" if negative else ""
    if count == 0:
        return sign + digits
    return f"{sign}{digits[:-count]}.{digits[-count:]}"


def _certified_truncation(left: Fraction, right: Fraction, scale: int):
    """Common value of ``trunc(x * scale)`` over ``[left, right)``, or None."""
    if left >= 0:
        m = (left.numerator * scale) // left.denominator
        if right * scale <= m + 1:
            return m, False
    elif right <= 0:
        lo = -((-left.numerator * scale) // left.denominator)
        hi = -((-right.numerator * scale) // right.denominator)
        if lo == hi:
            return lo, True
    return None


def decimal_digits(s: SNumber, count: int, fuel: int = DEFAULT_DIGIT_FUEL) -> str:
    """Decimal expansion of the value truncated toward zero after ``count`` places.

    Rational-tail inputs use exact division. Streams refine the bracket
    ``[L_n, R_n)`` until every point of it truncates to the same string, so
    no uncertified digit is ever printed; more than ``fuel`` convergents
    raises :class:`~subcf.errors.FuelExhausted`.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    scale = 10 ** count
    if isinstance(s, RationalTail):
        x = decode_rational(s)
        return _format_truncated(int(x * scale), x < 0, count)
    for rec in convergent_stream(s):
        hit = _certified_truncation(rec.left, rec.right, scale)
        if hit is not None:
            return _format_truncated(hit[0], hit[1], count)
        if rec.n + 1 >= fuel:
            raise FuelExhausted(f"{count} digits not certified after {fuel} convergents",
                                pulled=rec.n + 1)
    raise AssertionError("unreachable")
