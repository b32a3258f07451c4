"""Text forms of s-numbers, simple continued fractions and rationals.

See docs/formats.md for the grammar.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .converter import FiniteCF, SimpleCF, StreamCF
from .errors import Exhausted, ParseError
from .snumber import RationalTail, SNumber, StreamSNumber

TAIL = "&"
ELLIPSIS = "..."

_INT = re.compile(r"[+-]?\d+\Z")
_RUN = re.compile(r"2\^(\d+)\Z")
_RATIONAL = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text.strip())
    if not m:
        raise ParseError(f"not a rational p/q: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _join_quotients(quotients) -> list[str]:
    out = []
    if not quotients:
        return out
    out.append(str(quotients[0]))
    for q, group in itertools.groupby(quotients[1:]):
        n = len(list(group))
        if q == 2 and n > 1:
            out.append(f"2^{n}")
        else:
            out.extend([str(q)] * n)
    return out


def format_quotients(quotients, rational: bool) -> str:
    return "(" + ", ".join(_join_quotients(list(quotients)) + [TAIL if rational else ELLIPSIS]) + ")"


def format_snumber(s: SNumber, terms: int = 20) -> str:
    """Canonical text; streams show their first ``terms`` quotients then ``...``."""
    if isinstance(s, RationalTail):
        return format_quotients(s.prefix, True)
    return format_quotients(s.take(terms), False)


def parse_snumber(text: str) -> SNumber:
    """``(s0, s1, ..., &)`` gives a RationalTail, ``(s0, s1, ..., ...)`` a finite stream."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(f"s-number must be enclosed in parentheses: {text!r}")
    items = [item.strip() for item in body[1:-1].split(",")]
    if len(items) < 2 or items[-1] not in (TAIL, ELLIPSIS):
        raise ParseError(f"s-number must end with '{TAIL}' or '{ELLIPSIS}': {text!r}")
    head, *middle, end = items
    if not _INT.match(head):
        raise ParseError(f"bad leading quotient {head!r}")
    quotients = [int(head)]
    for item in middle:
        run = _RUN.match(item)
        if run:
            quotients.extend([2] * int(run.group(1)))
        elif _INT.match(item):
            quotients.append(int(item))
        else:
            raise ParseError(f"bad quotient {item!r}")
    try:
        if end == TAIL:
            return RationalTail(quotients)
        return StreamSNumber.from_terms(quotients, label=text.strip())
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_cf_terms(terms, complete: bool) -> str:
    terms = [str(t) for t in terms]
    if not complete:
        terms.append(ELLIPSIS)
    if len(terms) == 1:
        return f"[{terms[0]}]"
    return f"[{terms[0]}; {', '.join(terms[1:])}]"


def format_simple_cf(cf: SimpleCF, terms: int = 20) -> str:
    if isinstance(cf, FiniteCF):
        return format_cf_terms(cf.terms, True)
    return format_cf_terms(cf.take(terms), False)


def parse_simple_cf(text: str) -> SimpleCF:
    """``[a0; a1, ..., an]`` is finite; a trailing ``...`` makes it a stream."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(f"simple continued fraction must be enclosed in brackets: {text!r}")
    head, sep, rest = body[1:-1].partition(";")
    items = [head.strip()]
    if sep:
        items += [item.strip() for item in rest.split(",")]
    complete = items[-1] != ELLIPSIS
    if not complete:
        items.pop()
    if not items:
        raise ParseError(f"missing leading partial quotient: {text!r}")
    for item in items:
        if not _INT.match(item):
            raise ParseError(f"bad partial quotient {item!r}")
    terms = [int(item) for item in items]
    try:
        if complete:
            return FiniteCF(terms)
        return StreamCF.from_terms(terms, label=text.strip())
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def take_available(stream, n: int):
    """Up to ``n`` terms of a stream plus the exhaustion error that cut it short, if any."""
    out = []
    it = iter(stream)
    try:
        while len(out) < n:
            out.append(next(it))
    except StopIteration:
        pass
    except Exhausted as exc:
        return out, exc
    return out, None
