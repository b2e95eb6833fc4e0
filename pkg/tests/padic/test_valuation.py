import random
from fractions import Fraction

import pytest

from pytransdiam.padic.valuation import (UltrametricValue, check_prime,
                                         is_p_integral, padic_abs, valuation)
from pytransdiam.utils.exceptions import NotPrimeError


@pytest.mark.parametrize('x,p,expected', [
    (12, 2, 2),
    (12, 3, 1),
    (12, 5, 0),
    (Fraction(3, 8), 2, -3),
    (Fraction(-50, 7), 5, 2),
    (1, 7, 0),
])
def test_valuation(x, p, expected):
    assert valuation(x, p) == expected


def test_valuation_of_zero():
    with pytest.raises(ValueError):
        valuation(0, 3)


def test_padic_abs():
    assert padic_abs(16, 2) == UltrametricValue(2, -4)
    assert padic_abs(Fraction(1, 9), 3) == UltrametricValue(3, 2)
    assert padic_abs(7, 3) == UltrametricValue.one(3)
    assert padic_abs(0, 5).is_zero
    assert float(padic_abs(4, 2)) == 0.25


def test_integrality():
    assert is_p_integral(Fraction(5, 2), 3)
    assert not is_p_integral(Fraction(5, 3), 3)
    assert is_p_integral(0, 3)


@pytest.mark.parametrize('p', [1, 4, 15, 2.5, 'seven', -3])
def test_not_prime(p):
    with pytest.raises(NotPrimeError):
        check_prime(p)


def test_prime_passes():
    assert check_prime(7) == 7
    assert check_prime(7.0) == 7


class TestUltrametricValue(object):

    def test_arithmetic(self):
        a = UltrametricValue(2, -1)
        b = UltrametricValue(2, 3)
        assert a * b == UltrametricValue(2, 2)
        assert b / a == UltrametricValue(2, 4)
        assert b ** Fraction(1, 2) == UltrametricValue(2, Fraction(3, 2))
        assert a * UltrametricValue.zero(2) == UltrametricValue.zero(2)

    def test_order(self):
        zero = UltrametricValue.zero(3)
        values = [UltrametricValue(3, 1), zero, UltrametricValue(3, -2),
                  UltrametricValue.one(3)]
        assert sorted(values) == [zero, UltrametricValue(3, -2),
                                  UltrametricValue.one(3),
                                  UltrametricValue(3, 1)]

    def test_mixed_primes(self):
        with pytest.raises(ValueError):
            UltrametricValue(2, 1) < UltrametricValue(3, 1)

    def test_zero(self):
        zero = UltrametricValue.zero(5)
        assert float(zero) == 0.0
        assert str(zero) == '0'
        with pytest.raises(ZeroDivisionError):
            UltrametricValue.one(5) / zero
        with pytest.raises(ArithmeticError):
            zero.log_p

    def test_to_json(self):
        assert UltrametricValue(2, Fraction(-1, 3)).to_json() == \
            {'prime': 2, 'exponent': '-1/3'}
        assert UltrametricValue.zero(2).to_json() == {'prime': 2,
                                                      'zero': True}


@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_absolute_value_axioms(p):
    rng = random.Random(p)
    for _ in range(250):
        x = Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6))
        y = Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6))
        assert padic_abs(x * y, p) == padic_abs(x, p) * padic_abs(y, p)
        assert padic_abs(x + y, p) <= max(padic_abs(x, p), padic_abs(y, p))
        assert padic_abs(-x, p) == padic_abs(x, p)
