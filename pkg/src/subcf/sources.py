"""Simple continued fraction producers for named constants.

Transcendental constants come from bundled tables (``data/*.txt``: one
partial quotient per line, ``#`` starts a comment). Set ``SUBCF_DATA_DIR``
or pass ``data_dir`` to read tables from elsewhere.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .converter import StreamCF, _check_term
from .errors import DomainError, ParseError

DATA_ENV = "SUBCF_DATA_DIR"

# leading partial quotients worked by hand in the literature; tables must agree
PAPER_PREFIXES = {
    "pi": (3, 7, 15, 1, 292, 1, 1, 1, 2),
    "log2_3": (1, 1, 1, 2, 2, 3, 1, 5, 2),
}


@dataclass(frozen=True)
class ConstantTable:
    name: str
    quotients: tuple
    provenance: str  # "paper" or "bundled-data"

    def __post_init__(self):
        for n, t in enumerate(self.quotients):
            _check_term(n, t)

    def stream(self) -> StreamCF:
        return StreamCF(lambda: iter(self.quotients), label=self.name)


def parse_table(text: str, name: str = "<table>") -> tuple:
    terms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            terms.append(int(line))
        except ValueError:
            raise ParseError(f"{name}:{lineno}: not an integer: {line!r}") from None
    return tuple(terms)


def load_table(name: str, data_dir: Optional[os.PathLike] = None) -> ConstantTable:
    if name not in PAPER_PREFIXES:
        raise DomainError(f"no table for constant {name!r}")
    data_dir = data_dir or os.environ.get(DATA_ENV)
    filename = f"{name}.txt"
    if data_dir:
        text = Path(data_dir, filename).read_text()
    else:
        text = resources.files("subcf").joinpath("data", filename).read_text()
    quotients = parse_table(text, filename)
    paper = PAPER_PREFIXES[name]
    if quotients[: len(paper)] != paper[: len(quotients)]:
        raise DomainError(f"{filename} disagrees with the known leading terms {paper}")
    return ConstantTable(name, quotients, "bundled-data")


def paper_table(name: str) -> ConstantTable:
    return ConstantTable(name, PAPER_PREFIXES[name], "paper")


def const_phi() -> StreamCF:
    """Golden ratio ``[1; 1, 1, ...]``."""
    return StreamCF(lambda: itertools.repeat(1), label="phi")


def const_pi(data_dir=None) -> StreamCF:
    return load_table("pi", data_dir).stream()


def const_log2_3(data_dir=None) -> StreamCF:
    return load_table("log2_3", data_dir).stream()


def sqrt_period(d: int) -> tuple[int, tuple]:
    """``(a0, period)`` of the periodic expansion of ``sqrt(d)``."""
    if d < 2:
        raise DomainError(f"sqrt source needs d >= 2, got {d}")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise DomainError(f"{d} is a perfect square")
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return a0, tuple(period)


def sqrt_stream(d: int) -> StreamCF:
    a0, period = sqrt_period(d)
    return StreamCF(lambda: itertools.chain((a0,), itertools.cycle(period)), label=f"sqrt:{d}")


def resolve_constant(name: str, data_dir=None) -> StreamCF:
    """Look up ``pi``, ``phi``, ``log2_3`` or ``sqrt:D``."""
    if name == "phi":
        return const_phi()
    if name == "pi":
        return const_pi(data_dir)
    if name == "log2_3":
        return const_log2_3(data_dir)
    if name.startswith("sqrt:"):
        arg = name[5:]
        if not arg.isdigit():
            raise ParseError(f"bad radicand in {name!r}")
        return sqrt_stream(int(arg))
    raise ParseError(f"unknown constant {name!r}; expected pi, phi, log2_3 or sqrt:D")
