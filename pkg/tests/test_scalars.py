from fractions import Fraction

import pytest

from groebnercheck.errors import BadReduction, DivisionByZero, NotPrime
from groebnercheck.scalars import (
    PRIME_WINDOW,
    FpElement,
    fp_inv,
    is_prime,
    primes_in_window,
    rat_arith,
    reduce_mod_p,
)


def test_rat_add():
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)


def test_rat_mul_inverse_pair():
    assert rat_arith(Fraction(2, 5), Fraction(5, 2), "mul") == 1


def test_rat_div_by_zero():
    with pytest.raises(DivisionByZero):
        rat_arith(1, 0, "div")


def test_reduce_mod_p_examples():
    assert reduce_mod_p(Fraction(1, 2), 5).value == 3
    assert reduce_mod_p(-12, 7).value == 2
    with pytest.raises(BadReduction):
        reduce_mod_p(Fraction(1, 5), 5)


def test_fp_inv_examples():
    assert fp_inv(FpElement(3, 7)).value == 5
    assert fp_inv(FpElement(1, 32771)).value == 1
    with pytest.raises(DivisionByZero):
        fp_inv(FpElement(0, 7))


def test_fp_element_rejects_composite_modulus():
    with pytest.raises(NotPrime):
        FpElement(1, 15)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_primes_in_window_default():
    ps = primes_in_window(20)
    assert len(ps) == 20 and ps == sorted(ps)
    assert all(PRIME_WINDOW[0] < p < PRIME_WINDOW[1] and is_prime(p) for p in ps)
    assert ps[0] == 32771
