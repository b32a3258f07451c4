"""Command line front end: ``subcf <command> ...`` or ``python -m subcf``.

Exit codes: 0 success, 2 malformed input, 3 stream/fuel/table exhaustion,
4 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .convergents import DEFAULT_DIGIT_FUEL, convergent_stream, decimal_digits, decode_rational
from .converter import DEFAULT_LOOKAHEAD, FiniteCF, simple_to_subtraction, subtraction_to_simple
from .errors import DomainError, Exhausted, ParseError
from .notation import (
    format_cf_terms,
    format_quotients,
    format_rational,
    format_snumber,
    parse_rational,
    parse_simple_cf,
    parse_snumber,
    take_available,
)
from .order import compare
from .snumber import RationalTail, SNumber, encode_rational
from .sources import resolve_constant

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_EXHAUSTED = 3
EXIT_DOMAIN = 4


def parse_source(text: str, data_dir=None) -> SNumber:
    """Accept ``const:NAME``, an s-number ``(...)``, a simple CF ``[...]`` or ``p/q``."""
    text = text.strip()
    if text.startswith("const:"):
        return simple_to_subtraction(resolve_constant(text[6:], data_dir))
    if text.startswith("("):
        return parse_snumber(text)
    if text.startswith("["):
        return simple_to_subtraction(parse_simple_cf(text))
    return encode_rational(parse_rational(text))


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _positive_rational(text):
    try:
        x = parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return x


class Output:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, text, record):
        if self.fmt == "json-lines":
            if record is not None:
                self.stream.write(json.dumps(record) + "\n")
        else:
            self.stream.write(text + "\n")
        self.stream.flush()


def cmd_encode(args, out):
    x = parse_rational(args.value)
    s = encode_rational(x)
    out.emit(format_snumber(s), {"value": format_rational(x), "snumber": format_snumber(s),
                                 "prefix": list(s.prefix)})
    return EXIT_OK


def cmd_decode(args, out):
    s = parse_snumber(args.snumber)
    if not isinstance(s, RationalTail):
        raise DomainError("only '(..., &)' s-numbers decode exactly; use 'digits' or 'convergents'")
    x = decode_rational(s)
    out.emit(format_rational(x), {"snumber": format_snumber(s), "value": format_rational(x)})
    return EXIT_OK


def cmd_convergents(args, out):
    s = parse_source(args.source, args.data_dir)
    if args.terms is None and args.eps is None:
        args.terms = 10
    if args.format == "text":
        out.emit("n R_n L_n A_n", None)
    for rec in convergent_stream(s):
        if args.terms is not None and rec.n >= args.terms:
            break
        row = {"n": rec.n, "R_n": format_rational(rec.right), "L_n": format_rational(rec.left),
               "A_n": rec.accuracy}
        out.emit(f"{rec.n} {row['R_n']} {row['L_n']} {rec.accuracy}", row)
        if args.eps is not None and rec.accuracy * args.eps >= 1:
            break
    return EXIT_OK


def cmd_convert(args, out):
    terms = args.terms or 20
    fuel = args.fuel or DEFAULT_LOOKAHEAD
    if args.to == "simple":
        s = parse_source(args.input, args.data_dir)
        cf = subtraction_to_simple(s, fuel)
        if isinstance(cf, FiniteCF):
            got, err, complete = list(cf.terms), None, True
        else:
            (got, err), complete = take_available(cf, terms), False
        text = format_cf_terms(got, complete)
    else:
        text_in = args.input.strip()
        if text_in.startswith("const:"):
            s = simple_to_subtraction(resolve_constant(text_in[6:], args.data_dir))
        elif text_in.startswith("["):
            s = simple_to_subtraction(parse_simple_cf(text_in))
        else:
            s = encode_rational(parse_rational(text_in))
        if isinstance(s, RationalTail):
            got, err, complete = list(s.prefix), None, True
        else:
            (got, err), complete = take_available(s, terms), False
        text = format_quotients(got, complete)
    out.emit(text, {"to": args.to, "result": text, "terms": got, "complete": complete})
    if err is not None:
        raise err
    return EXIT_OK


def cmd_compare(args, out):
    s = parse_source(args.a, args.data_dir)
    t = parse_source(args.b, args.data_dir)
    result = compare(s, t, args.fuel or 1000)
    out.emit(str(result), {"result": str(result)})
    return EXIT_OK


def cmd_digits(args, out):
    s = parse_source(args.source, args.data_dir)
    digits = decimal_digits(s, args.count, args.fuel or DEFAULT_DIGIT_FUEL)
    out.emit(digits, {"digits": digits})
    return EXIT_OK


def cmd_const(args, out):
    cf = resolve_constant(args.name, args.data_dir)
    terms = args.terms or 10
    simple, err = take_available(cf, terms)
    s = simple_to_subtraction(cf)
    sub, err2 = take_available(s, terms)
    out.emit(f"{format_cf_terms(simple, False)}\n{format_quotients(sub, False)}",
             {"name": args.name, "simple": simple, "subtraction": sub})
    if err or err2:
        raise err or err2
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json-lines"], default="text")
    common.add_argument("--fuel", type=_positive_int,
                        help="lookahead/comparison/refinement bound")
    common.add_argument("--eps", type=_positive_rational,
                        help="stop the convergent table once 1/A_n <= eps")
    common.add_argument("--terms", type=_positive_int, help="number of terms to print")
    common.add_argument("--data-dir", help="directory with constant tables "
                                          "(default: $SUBCF_DATA_DIR or bundled)")

    parser = argparse.ArgumentParser(
        prog="subcf", description="Exact subtraction continued fractions and canonical convergents.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="rational p/q -> s-number")
    p.add_argument("value")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="s-number '(..., &)' -> p/q")
    p.add_argument("snumber")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("convergents", parents=[common], help="table of n R_n L_n A_n")
    p.add_argument("source")
    p.set_defaults(func=cmd_convergents)

    p = sub.add_parser("convert", parents=[common], help="simple <-> subtraction continued fractions")
    p.add_argument("--to", choices=["simple", "subtraction"], required=True)
    p.add_argument("input")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("compare", parents=[common], help="print <, =, > or ?N")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("digits", parents=[common], help="certified decimal digits")
    p.add_argument("source")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("const", parents=[common], help="show a named constant: pi, phi, log2_3, sqrt:D")
    p.add_argument("name")
    p.set_defaults(func=cmd_const)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, sys.stdout)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"subcf: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exhausted as exc:
        print(f"subcf: exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (DomainError, ValueError) as exc:
        print(f"subcf: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"subcf: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
