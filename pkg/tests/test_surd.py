import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fibnest.surd import GOLDEN, GOLDEN_INV_SQ, GOLDEN_SQ, SQRT5, THRESHOLD_LABEL, Quad

small_rats = st.fractions(min_value=Fraction(-10), max_value=Fraction(10))


def test_defining_identities():
    assert SQRT5 * SQRT5 == 5
    assert GOLDEN * GOLDEN == GOLDEN + 1
    assert GOLDEN * GOLDEN == GOLDEN_SQ
    assert GOLDEN_SQ * GOLDEN_INV_SQ == 1
    assert Quad.of(1) / GOLDEN == GOLDEN - 1
    # 2/(3+sqrt5) rationalized
    assert Quad.of(2) / (Quad.of(3) + SQRT5) == GOLDEN_INV_SQ


def test_threshold_value_bracket():
    assert GOLDEN_INV_SQ > Fraction(3819660112, 10**10)
    assert GOLDEN_INV_SQ < Fraction(3819660113, 10**10)
    assert THRESHOLD_LABEL == "2/(3+sqrt5)"


def test_known_comparisons():
    assert Fraction(5, 13) > GOLDEN_INV_SQ
    assert Fraction(3, 8) < GOLDEN_INV_SQ
    assert Fraction(1597, 4181) > GOLDEN_INV_SQ
    assert Fraction(987, 2584) < GOLDEN_INV_SQ
    assert GOLDEN > 1
    assert SQRT5 < 3


def test_rationality():
    assert Quad.of(Fraction(1, 2)).is_rational
    assert not SQRT5.is_rational
    assert (SQRT5 - SQRT5).is_rational


def test_arithmetic_mixed_operands():
    assert GOLDEN + Fraction(1, 2) == Quad(Fraction(1), Fraction(1, 2))
    assert 2 * GOLDEN == Quad(Fraction(1), Fraction(1))
    assert GOLDEN - GOLDEN == 0
    assert (GOLDEN / GOLDEN) == 1
    assert -GOLDEN == Quad(Fraction(-1, 2), Fraction(-1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GOLDEN / Quad.of(0)


def test_equality_and_hash_with_fraction():
    q = Quad.of(Fraction(1, 2))
    assert q == Fraction(1, 2)
    assert hash(q) == hash(Fraction(1, 2))
    assert Quad.of(3) == 3
    assert hash(Quad.of(3)) == hash(3)


def test_float_conversion():
    assert math.isclose(float(GOLDEN), 1.618033988749895)
    assert math.isclose(float(GOLDEN_INV_SQ), 0.3819660112501051)


def test_str_rendering():
    assert str(Quad.of(Fraction(1, 2))) == "1/2"
    assert str(SQRT5) == "0 + 1*sqrt(5)"
    assert str(GOLDEN_INV_SQ) == "3/2 - 1/2*sqrt(5)"


def test_decimal_rendering():
    assert GOLDEN_INV_SQ.decimal(50) == (
        "0.38196601125010515179541316563436188227969082019424"
    )
    assert GOLDEN.decimal(10) == "1.6180339887"
    assert SQRT5.decimal(10) == "2.2360679775"
    assert Quad.of(Fraction(1, 4)).decimal(3) == "0.250"
    assert (-GOLDEN).decimal(5) == "-1.61803"


@given(small_rats, small_rats)
def test_sign_matches_float(a, b):
    q = Quad(a, b)
    v = float(a) + float(b) * math.sqrt(5.0)
    if abs(v) > 1e-9:  # away from the float noise floor
        assert q.sign() == (1 if v > 0 else -1)


@given(small_rats, small_rats, small_rats, small_rats)
def test_ordering_trichotomy(a1, b1, a2, b2):
    x, y = Quad(a1, b1), Quad(a2, b2)
    assert (x < y) + (x == y) + (x > y) == 1
    if x < y:
        assert float(x) <= float(y) + 1e-9


@given(small_rats, small_rats)
def test_mul_div_round_trip(a, b):
    q = Quad(a, b)
    if q != 0:
        assert (GOLDEN_SQ / q) * q == GOLDEN_SQ


@given(small_rats, small_rats, st.integers(min_value=1, max_value=30))
def test_decimal_error_bound(a, b, digits):
    q = Quad(a, b)
    rendered = Fraction(q.decimal(digits))
    # within half an ulp, exactly as for rationals
    diff = Quad.of(rendered) - q
    ulp_half = Fraction(1, 2 * 10**digits)
    assert -ulp_half <= diff <= ulp_half
