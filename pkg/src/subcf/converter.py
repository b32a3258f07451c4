"""Simple continued fractions and conversion to and from s-numbers.

Finite (rational) inputs convert by exact evaluation and re-expansion.
Infinite streams convert lazily with two rules that follow from the
matrix identities in :mod:`subcf.matrices`:

simple -> subtraction
    emit ``a0 + 1``; then for every pair ``(a_odd, a_even)`` emit
    ``a_odd - 1`` twos followed by ``a_even + 2``.

subtraction -> simple
    with current head ``h`` (initially ``s0``) emit ``h - 1``; count the
    run of 2's that follows, ``k - 1`` of them, up to the next quotient
    ``q > 2``; emit ``k`` and continue with head ``q - 1``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .convergents import decode_rational
from .errors import DomainError, FuelExhausted, SourceExhausted
from .matrices import IDENTITY, mobius_apply, vdot
from .snumber import RationalTail, SNumber, StreamSNumber, encode_rational

DEFAULT_LOOKAHEAD = 10_000


def _check_term(n: int, t: int) -> int:
    if not isinstance(t, int) or isinstance(t, bool):
        raise DomainError(f"partial quotient {n} is {t!r}, not an integer")
    if n > 0 and t < 1:
        raise DomainError(f"partial quotient {n} is {t}; terms after the first must be >= 1")
    return t


class SimpleCF:
    """``[a0; a1, a2, ...] = a0 + 1/(a1 + 1/(a2 + ...))``."""

    def __iter__(self) -> Iterator[int]:
        raise NotImplementedError

    def take(self, n: int) -> list[int]:
        return list(itertools.islice(self, n))


class FiniteCF(SimpleCF):
    """Finite expansion kept in canonical form (last term >= 2 unless it is the only one)."""

    def __init__(self, terms: Iterable[int]):
        terms = [_check_term(n, t) for n, t in enumerate(terms)]
        if not terms:
            raise DomainError("a continued fraction needs at least one term")
        if len(terms) > 1 and terms[-1] == 1:
            terms.pop()
            terms[-1] += 1
        self.terms = tuple(terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, FiniteCF):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(("FiniteCF", self.terms))

    def __repr__(self):
        return f"FiniteCF({list(self.terms)})"


class StreamCF(SimpleCF):
    """Lazily produced expansion; ``factory()`` returns a fresh iterator.

    Iteration raises :class:`~subcf.errors.SourceExhausted` when the
    producer stops, since a stream stands for an infinite expansion.
    """

    def __init__(self, factory: Callable[[], Iterable[int]], label: Optional[str] = None):
        self.factory = factory
        self.label = label

    @classmethod
    def from_terms(cls, terms, label=None) -> StreamCF:
        terms = tuple(_check_term(n, t) for n, t in enumerate(terms))
        return cls(lambda: iter(terms), label=label)

    def __iter__(self):
        n = 0
        for t in self.factory():
            if type(t) is not int or (t < 1 and n > 0):
                _check_term(n, t)
            yield t
            n += 1
        raise SourceExhausted(f"source ended after {n} partial quotients", pulled=n)

    def __repr__(self):
        return f"StreamCF({self.label or 'factory'})"


def simple_cf_of_rational(x) -> FiniteCF:
    """Euclidean algorithm with floor division."""
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return FiniteCF(terms)


def eval_simple_cf(cf: FiniteCF) -> Fraction:
    *head, last = cf.terms
    g = IDENTITY
    for t in head:
        g = g @ vdot(t)
    return mobius_apply(g, Fraction(last))


def _pair_rule(terms: Iterator[int]) -> Iterator[int]:
    yield next(terms) + 1
    while True:
        yield from itertools.repeat(2, next(terms) - 1)
        yield next(terms) + 2


def _run_rule(quotients: Iterator[int], lookahead: int) -> Iterator[int]:
    head = next(quotients)
    while True:
        yield head - 1
        k = 1
        q = next(quotients)
        while q == 2:
            if k >= lookahead:
                raise FuelExhausted(
                    f"run of {k} twos without a larger quotient; cannot tell it from a rational tail",
                    pulled=k)
            k += 1
            q = next(quotients)
        yield k
        head = q - 1


def simple_to_subtraction(cf: SimpleCF) -> SNumber:
    if isinstance(cf, FiniteCF):
        return encode_rational(eval_simple_cf(cf))
    return StreamSNumber(lambda: _pair_rule(iter(cf)), label=f"subtraction({cf!r})")


def subtraction_to_simple(s: SNumber, fuel: int = DEFAULT_LOOKAHEAD) -> SimpleCF:
    """Inverse conversion.

    ``fuel`` caps how many quotients may be read while producing a single
    output term from a stream; exceeding it raises
    :class:`~subcf.errors.FuelExhausted`, as a long run of 2's is
    indistinguishable from a rational tail.
    """
    if fuel < 1:
        raise ValueError("fuel must be positive")
    if isinstance(s, RationalTail):
        return simple_cf_of_rational(decode_rational(s))
    return StreamCF(lambda: _run_rule(iter(s), fuel), label=f"simple({s!r})")
