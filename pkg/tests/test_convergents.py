from fractions import Fraction
from itertools import islice

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_records
from subcf.convergents import (
    approximate,
    bracket,
    convergent_stream,
    decimal_digits,
    decode_rational,
    matrix_from_right_convergent,
    nth_record,
    recover_quotient,
)
from subcf.converter import StreamCF, simple_to_subtraction
from subcf.errors import DomainError, FuelExhausted, SourceExhausted
from subcf.matrices import IDENTITY, Unimodular, mobius_apply, v
from subcf.snumber import RationalTail, StreamSNumber, encode_rational, remnant
from subcf.sources import const_phi, const_pi

PI_S = [4, 2, 2, 2, 2, 2, 2, 17, 294, 3, 4]
PI_RIGHT = ["4", "7/2", "10/3", "13/4", "16/5", "19/6", "22/7", "355/113",
            "104348/33215", "312689/99532", "1146408/364913"]

rationals = st.fractions(max_denominator=10**4).filter(lambda x: abs(x) < 10**6)
snumber_prefixes = st.builds(lambda h, t: [h] + t, st.integers(-50, 50),
                             st.lists(st.integers(2, 50), max_size=30))


def pi_s():
    return StreamSNumber.from_terms(PI_S)


def phi_s():
    return simple_to_subtraction(const_phi())


def rights(s, n):
    return [r.right for r in islice(convergent_stream(s), n)]


def test_half():
    recs = list(islice(convergent_stream(encode_rational(Fraction(1, 2))), 8))
    assert recs[0].g == v(1)
    assert recs[1].g.rows == ((2, -1), (3, -1))
    for r in recs:
        n = r.n
        assert r.right == Fraction(1 + n, 1 + 2 * n)
        assert r.g.rows == ((1, -1), (1, 0)) if n == 0 else r.g.rows == ((1 + n, -n), (1 + 2 * n, 1 - 2 * n))


@pytest.mark.parametrize("m", [-7, 0, 3, 40])
def test_integer(m):
    for r in islice(convergent_stream(encode_rational(m)), 12):
        assert r.right == m + Fraction(1, r.n + 1)
        assert r.g.rows == (((r.n + 1) * m + 1, -m * r.n - 1), (r.n + 1, -r.n))


def test_pi_rights_and_matches_oracle():
    assert rights(pi_s(), 11) == [Fraction(x) for x in PI_RIGHT]
    for (g, R, L, A), rec in zip(brute_records(PI_S), convergent_stream(pi_s())):
        assert rec.g.rows == g and (rec.right, rec.left, rec.accuracy) == (R, L, A)
    with pytest.raises(SourceExhausted):
        list(convergent_stream(pi_s()))


def test_decode():
    assert decode_rational(RationalTail([8])) == 7
    assert decode_rational(RationalTail([1, 3])) == Fraction(1, 2)
    assert decode_rational(encode_rational(Fraction(22, 7))) == Fraction(22, 7)
    with pytest.raises(DomainError):
        decode_rational(pi_s())


def test_bracket():
    x = Fraction(13, 5)
    s0 = encode_rational(x).prefix[0]
    assert bracket(encode_rational(x), 0) == (s0 - 1, s0)
    assert bracket(encode_rational(Fraction(1, 2)), 1) == (Fraction(1, 2), Fraction(2, 3))
    left, right = bracket(pi_s(), 6)
    assert right == Fraction(22, 7) and left == 3
    assert right - left == Fraction(1, nth_record(pi_s(), 6).accuracy)


def test_approximate():
    # A_n = n + 1 for an integer, so 1/A_n <= 1/10 first at n = 9
    assert approximate(encode_rational(5), Fraction(1, 10)) == Fraction(51, 10)
    assert approximate(encode_rational(Fraction(1, 2)), 1) == 1
    r = approximate(phi_s(), Fraction(1, 1000))
    assert r == Fraction(89, 55)
    phi = (1 + mpmath.sqrt(5)) / 2
    assert 0 < mpmath.mpf(r.numerator) / r.denominator - phi <= mpmath.mpf(1) / 1000
    with pytest.raises(ValueError):
        approximate(phi_s(), 0)


def test_recover_quotient():
    assert recover_quotient(IDENTITY, 4) == 4
    assert recover_quotient(v(1), Fraction(2, 3)) == 3
    g6 = nth_record(pi_s(), 6).g
    assert g6.rows == ((22, -19), (7, -6))
    assert recover_quotient(g6, Fraction(355, 113)) == 17
    with pytest.raises(DomainError):
        recover_quotient(v(1), Fraction(3, 5))


def test_matrix_from_right_convergent():
    assert matrix_from_right_convergent(-3) == v(-3)
    assert matrix_from_right_convergent(Fraction(2, 3)).rows == ((2, -1), (3, -1))
    assert matrix_from_right_convergent(Fraction(355, 113)).rows == ((355, -22), (113, -7))
    assert matrix_from_right_convergent(Fraction(355, 113)) == nth_record(pi_s(), 7).g


def test_decimal_digits():
    assert decimal_digits(encode_rational(Fraction(1, 2)), 3) == "0.500"
    assert decimal_digits(encode_rational(Fraction(-3, 2)), 3) == "-1.500"
    assert decimal_digits(encode_rational(Fraction(-1, 3)), 4) == "-0.3333"
    assert decimal_digits(encode_rational(Fraction(22, 7)), 0) == "3"
    mpmath.mp.dps = 50
    phi_ref = mpmath.nstr((1 + mpmath.sqrt(5)) / 2, 40, strip_zeros=False)
    assert decimal_digits(phi_s(), 10) == phi_ref[:12] == "1.6180339887"
    assert decimal_digits(simple_to_subtraction(const_pi()), 6) == "3.141592"
    # negative irrational: -phi = [-2; 2, 1, 1, 1, ...]
    neg_phi = simple_to_subtraction(StreamCF(lambda: iter([-2, 2] + [1] * 200)))
    assert decimal_digits(neg_phi, 8) == "-1.61803398"


def test_decimal_digits_fuel():
    # a disguised rational exactly on a grid point never certifies from brackets
    s = StreamSNumber(lambda: iter([0] + [2] * 10**6))
    with pytest.raises(FuelExhausted):
        decimal_digits(s, 1, fuel=50)


@given(snumber_prefixes)
def test_theorem1_invariants(qs):
    recs = list(islice(convergent_stream(StreamSNumber.from_terms(qs)), len(qs)))
    for r in recs:
        g = r.g
        assert g.det == 1 and g.c > 0 and g.c + g.d > 0 and g.d <= 0
        assert r.right - r.left == Fraction(1, r.accuracy)
    for p, n in zip(recs, recs[1:]):
        assert n.g.c > p.g.c
        assert n.g.c + n.g.d >= p.g.c + p.g.d
        assert n.right < p.right and n.left >= p.left and n.accuracy > p.accuracy
        assert mobius_apply(p.g, n.quotient) == n.right
        assert mobius_apply(p.g, n.quotient - 1) == n.left
    for r in recs:
        assert r.right > recs[0].left and r.left < recs[0].right


@given(rationals, st.integers(0, 8))
def test_value_through_remnant(x, n):
    s = encode_rational(x)
    g = nth_record(s, n).g
    assert mobius_apply(g, remnant(x, n + 1)) == x


@given(rationals)
def test_brackets_and_stabilisation(x):
    s = encode_rational(x)
    k = len(s.prefix) - 1
    for r in islice(convergent_stream(s), k + 6):
        assert r.left <= x < r.right
        assert 0 < r.right - x <= Fraction(1, r.accuracy)
        if r.n >= k:
            assert r.left == x


@given(snumber_prefixes)
def test_recovery(qs):
    g_prev = IDENTITY
    for r in islice(convergent_stream(StreamSNumber.from_terms(qs)), len(qs)):
        assert matrix_from_right_convergent(r.right) == r.g
        assert recover_quotient(g_prev, r.right) == r.quotient
        g_prev = r.g


def test_record_is_frozen():
    r = nth_record(encode_rational(2), 0)
    with pytest.raises(AttributeError):
        r.n = 3
    assert isinstance(r.g, Unimodular)
