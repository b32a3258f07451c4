"""S-numbers and the subtraction continued fraction of rationals.

An s-number is an infinite integer sequence ``(s0, s1, ...)`` with
``s_n >= 2`` for ``n >= 1``. Two concrete forms exist:

* :class:`RationalTail` stores a finite canonical prefix; the sequence
  continues with 2 forever. These are exactly the encodings of rationals.
* :class:`StreamSNumber` wraps a factory of fresh iterators, so the
  sequence can be replayed; every pull is validated and may be capped by
  a budget.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import BudgetExhausted, DomainError, SourceExhausted


def _check_quotient(n: int, q: int) -> int:
    if not isinstance(q, int) or isinstance(q, bool):
        raise DomainError(f"quotient {n} is {q!r}, not an integer")
    if n > 0 and q < 2:
        raise DomainError(f"quotient {n} is {q}; quotients after the first must be >= 2")
    return q


class SNumber:
    """Common interface: iterate to get the quotients ``s0, s1, ...``."""

    def __iter__(self) -> Iterator[int]:
        raise NotImplementedError

    @property
    def is_rational(self) -> bool:
        return False

    def take(self, n: int) -> list[int]:
        """First ``n`` quotients; raises :class:`~subcf.errors.Exhausted` if unavailable."""
        return list(itertools.islice(self, n))

    def __getitem__(self, n: int) -> int:
        return self.take(n + 1)[n]


class RationalTail(SNumber):
    """The s-number ``(s0, ..., sk, 2, 2, 2, ...)``.

    Trailing 2's of the prefix are absorbed into the implicit tail, so two
    instances are equal exactly when they denote the same rational.
    """

    __slots__ = ("prefix",)

    def __init__(self, prefix: Iterable[int]):
        prefix = list(prefix)
        if not prefix:
            raise DomainError("an s-number needs at least the quotient s0")
        for n, q in enumerate(prefix):
            _check_quotient(n, q)
        while len(prefix) > 1 and prefix[-1] == 2:
            prefix.pop()
        object.__setattr__(self, "prefix", tuple(prefix))

    def __setattr__(self, name, value):
        raise AttributeError("RationalTail is immutable")

    def __iter__(self):
        return itertools.chain(self.prefix, itertools.repeat(2))

    @property
    def is_rational(self) -> bool:
        return True

    def __eq__(self, other):
        if isinstance(other, RationalTail):
            return self.prefix == other.prefix
        return NotImplemented

    def __hash__(self):
        return hash(("RationalTail", self.prefix))

    def __repr__(self):
        return f"RationalTail({list(self.prefix)})"

    def __str__(self):
        from .notation import format_snumber

        return format_snumber(self)


class StreamSNumber(SNumber):
    """An s-number produced lazily by ``factory()``.

    Each call to ``iter()`` starts a fresh iterator from the factory. The
    iterator raises :class:`~subcf.errors.SourceExhausted` when the
    underlying producer stops and :class:`~subcf.errors.BudgetExhausted`
    once ``budget`` quotients have been pulled.
    """

    def __init__(self, factory: Callable[[], Iterable[int]], budget: Optional[int] = None,
                 label: Optional[str] = None):
        if budget is not None and budget < 0:
            raise ValueError("budget must be non-negative")
        self.factory = factory
        self.budget = budget
        self.label = label

    @classmethod
    def from_terms(cls, terms: Sequence[int], label=None) -> StreamSNumber:
        """A stream that yields ``terms`` and then reports exhaustion."""
        terms = tuple(terms)
        for n, q in enumerate(terms):
            _check_quotient(n, q)
        return cls(lambda: iter(terms), label=label)

    def with_budget(self, budget: Optional[int]) -> StreamSNumber:
        return StreamSNumber(self.factory, budget=budget, label=self.label)

    def __iter__(self):
        budget = self.budget
        n = 0
        if budget == 0:
            raise BudgetExhausted("pull budget of 0 quotients reached", pulled=0)
        for q in self.factory():
            if type(q) is not int or (q < 2 and n > 0):
                _check_quotient(n, q)
            yield q
            n += 1
            if n == budget:
                raise BudgetExhausted(f"pull budget of {budget} quotients reached", pulled=n)
        raise SourceExhausted(f"source ended after {n} quotients", pulled=n)

    def __repr__(self):
        name = self.label or getattr(self.factory, "__name__", "factory")
        return f"StreamSNumber({name})"


def first_quotient(x: Fraction) -> int:
    """The integer x0 with ``0 < x0 - x <= 1``, i.e. ``floor(x) + 1``."""
    x = Fraction(x)
    return x.numerator // x.denominator + 1


def remnant(x: Fraction, n: int) -> Fraction:
    """n-th remnant: ``r0 = x`` and ``r(k+1) = 1 / (x_k - r_k)``."""
    if n < 0:
        raise ValueError("remnant index must be non-negative")
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    for _ in range(n):
        p, q = q, (p // q + 1) * q - p
    return Fraction(p, q)


def encode_rational(x) -> RationalTail:
    """Subtraction continued fraction of a rational, as a canonical prefix.

    The recursion stops at the first remnant equal to 1; from there on
    every quotient is 2. Works on the reduced pair ``(p, q)``, whose
    denominator strictly decreases until the remnant becomes an integer.
    """
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    prefix = []
    while True:
        x0 = p // q + 1
        prefix.append(x0)
        # next remnant is q / (x0*q - p)
        p, q = q, x0 * q - p
        if p == q:
            return RationalTail(prefix)


def eval_finite_scf(quotients: Sequence[int], tail) -> Fraction:
    """Value of ``<x0, ..., x(n-1), tail> = x0 - 1/(x1 - 1/(... - 1/tail))``."""
    # Horner-style from the inside out on a numerator/denominator pair
    tail = Fraction(tail)
    p, q = tail.numerator, tail.denominator
    for s in reversed(quotients):
        if p == 0:
            raise ZeroDivisionError("a remnant in the tower is zero")
        p, q = s * p - q, p
    return Fraction(p, q)


def sequence_remnant(s: SNumber, n: int) -> SNumber:
    """Drop the first ``n`` quotients of ``s``.

    For streams the first ``n`` pulls are performed eagerly so an
    exhausted source is reported here rather than later.
    """
    if n < 0:
        raise ValueError("remnant index must be non-negative")
    if n == 0:
        return s
    if isinstance(s, RationalTail):
        rest = s.prefix[n:]
        return RationalTail(rest if rest else (2,))
    s.take(n)

    def factory():
        it = iter(s)
        for _ in range(n):
            next(it)
        return it

    # the inner iterator already enforces the budget of ``s``
    return StreamSNumber(factory, label=f"{s!r}[{n}:]")
