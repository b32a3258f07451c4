"""Exact subtraction continued fractions.

Real numbers are encoded as s-numbers: integer sequences ``(s0, s1, ...)``
with ``s_n >= 2`` for ``n >= 1``, read as ``s0 - 1/(s1 - 1/(s2 - ...))``.
Each s-number carries a canonical strictly decreasing sequence of
rational right convergents with exact error brackets, and comparing
s-numbers lexicographically orders the reals they encode.
"""

from .convergents import (
    ConvergentRecord,
    approximate,
    bracket,
    convergent_stream,
    decimal_digits,
    decode_rational,
    matrix_from_right_convergent,
    recover_quotient,
)
from .converter import (
    FiniteCF,
    SimpleCF,
    StreamCF,
    eval_simple_cf,
    simple_cf_of_rational,
    simple_to_subtraction,
    subtraction_to_simple,
)
from .errors import (
    BudgetExhausted,
    DomainError,
    Exhausted,
    FuelExhausted,
    ParseError,
    SourceExhausted,
    SubcfError,
)
from .matrices import (
    IDENTITY,
    INF,
    Unimodular,
    kappa,
    mat_inv,
    mat_mul,
    mobius_apply,
    v,
    v2_pow,
    vdot,
)
from .notation import format_simple_cf, format_snumber, parse_simple_cf, parse_snumber
from .order import Indistinguishable, Order, compare, compare_rational
from .snumber import (
    RationalTail,
    SNumber,
    StreamSNumber,
    encode_rational,
    eval_finite_scf,
    first_quotient,
    remnant,
    sequence_remnant,
)
from .sources import const_log2_3, const_phi, const_pi, resolve_constant, sqrt_stream

__version__ = "0.1.0"
