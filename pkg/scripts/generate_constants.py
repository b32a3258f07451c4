"""Regenerate the bundled partial-quotient tables in src/subcf/data/.

Offline tool; needs mpmath. For each constant the value is computed to
DIGITS decimal places, giving an interval [lo, lo + 10**-DIGITS] that
contains the constant. The simple continued fractions of both interval
endpoints are expanded exactly, and only their common prefix is written:
every term in the file is therefore a term of the true expansion.

    python scripts/generate_constants.py [--digits 2500] [--terms 1000]
"""

import argparse
from fractions import Fraction
from pathlib import Path

import mpmath

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "subcf" / "data"

CONSTANTS = {
    "pi": ("pi", lambda: mpmath.pi),
    "log2_3": ("log2(3)", lambda: mpmath.log(3, 2)),
}


def cf_terms(x):
    terms = []
    p, q = x.numerator, x.denominator
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return terms


def certified_terms(value, digits):
    scale = 10 ** digits
    lo = Fraction(int(mpmath.floor(value * scale)), scale)
    hi = lo + Fraction(1, scale)
    common = []
    # the last shared term may still differ in the limit; drop it
    for a, b in zip(cf_terms(lo), cf_terms(hi)):
        if a != b:
            break
        common.append(a)
    return common[:-1]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--digits", type=int, default=2500)
    parser.add_argument("--terms", type=int, default=1000)
    args = parser.parse_args()
    mpmath.mp.dps = args.digits + 50
    for name, (label, fn) in CONSTANTS.items():
        terms = certified_terms(fn(), args.digits)
        if len(terms) < args.terms:
            raise SystemExit(f"{name}: only {len(terms)} certified terms, raise --digits")
        terms = terms[: args.terms]
        header = [
            f"# Simple continued fraction of {label}, {len(terms)} partial quotients.",
            f"# Generated by scripts/generate_constants.py with mpmath at {args.digits} digits;",
            "# only the common prefix of the expansions of both endpoints of the",
            "# enclosing decimal interval is kept.",
        ]
        body = "\n".join(str(t) for t in terms)
        (DATA_DIR / f"{name}.txt").write_text("\n".join(header) + "\n" + body + "\n")
        print(name, len(terms), terms[:12])


if __name__ == "__main__":
    main()
