from fractions import Fraction

import pytest

from mindist.field import DEFAULT_PRIME, QQ, PrimeField, field_of, format_exact, get_field


def test_prime_field_arithmetic():
    F = PrimeField(7)
    a, b = F(3), F(5)
    assert a + b == F(1)
    assert a - b == F(5)
    assert a * b == F(1)
    assert a / b == F(2)  # 5 * 2 = 10 = 3 mod 7
    assert -a == F(4)
    assert (a / a) == F.one
    assert F(Fraction(1, 2)) * 2 == F.one


def test_prime_field_division_by_zero():
    F = PrimeField(11)
    with pytest.raises(ZeroDivisionError):
        F(3) / F(0)


def test_element_types_are_cached():
    assert type(PrimeField(13)(1)) is type(PrimeField(13)(2))
    assert PrimeField(13) == PrimeField(13)
    assert PrimeField(13) != PrimeField(17)


def test_rationals():
    assert QQ("3/4") == Fraction(3, 4)
    assert QQ(2) == Fraction(2)
    assert QQ.zero == 0 and QQ.one == 1


def test_get_field_and_field_of():
    assert get_field("q") == QQ
    assert get_field("fp") == PrimeField(DEFAULT_PRIME)
    assert field_of(Fraction(1, 3)) == QQ
    assert field_of(PrimeField(5)(2)) == PrimeField(5)


def test_format_exact():
    assert format_exact(Fraction(3)) == 3
    assert format_exact(Fraction(-3, 4)) == "-3/4"
    assert format_exact(PrimeField(7)(10)) == 3
