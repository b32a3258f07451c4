"""Exception hierarchy shared by the library and the command line."""


class SubcfError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SubcfError, ValueError):
    """Malformed textual notation."""


class DomainError(SubcfError, ValueError):
    """A value outside the domain of an operation (bad quotient, square radicand, ...)."""


class Exhausted(SubcfError):
    """A lazy stream could not produce the next term.

    ``pulled`` is the number of terms successfully produced before the
    stream gave out, when known.
    """

    def __init__(self, message, pulled=None):
        super().__init__(message)
        self.pulled = pulled


class SourceExhausted(Exhausted):
    """A finite table behind a stream ran out of terms."""


class BudgetExhausted(Exhausted):
    """A stream reached its per-iteration pull budget."""


class FuelExhausted(Exhausted):
    """A bounded search (lookahead, comparison, digit refinement) ran out of fuel."""
