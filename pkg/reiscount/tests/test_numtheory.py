# -*- coding: utf-8 -*-
import math

import pytest
from hypothesis import given, settings, strategies as st

from reiscount.core.errors import DomainError
from reiscount.core.numtheory import (
    binomial, common_divisors, divisors, euler_phi, mobius, prime_factors, primes_dividing,
)


def test_small_values():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert prime_factors(360) == ((2, 3), (3, 2), (5, 1))
    assert primes_dividing(24) == [2, 3]
    assert [euler_phi(n) for n in (1, 2, 12, 24)] == [1, 1, 4, 8]
    assert [mobius(n) for n in (1, 2, 6, 12, 30)] == [1, -1, 1, 0, -1]


def test_binomial_out_of_range_is_zero():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(-1, 0) == 0
    assert binomial(4, -1) == 0
    assert binomial(40, 20) == 137846528820


def test_common_divisors():
    assert common_divisors(24, 8) == [1, 2, 4, 8]
    assert common_divisors(24, 8, min_d=2) == [2, 4, 8]
    assert common_divisors(24, 5, min_d=2) == []


@pytest.mark.parametrize("fn", [divisors, euler_phi, mobius, prime_factors])
def test_non_positive_refused(fn):
    with pytest.raises(DomainError):
        fn(0)
    with pytest.raises(DomainError):
        fn(-3)


@settings(derandomize=True, max_examples=200)
@given(st.integers(min_value=1, max_value=5000))
def test_phi_and_mobius_divisor_sums(n):
    assert sum(euler_phi(d) for d in divisors(n)) == n
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_pascal_rule_with_zero_outside():
    # C(0,0) = 1, a obie strony reguły są poza zakresem: jedyny wyjątek
    failures = [
        (a, b)
        for a in range(-200, 201)
        for b in range(-200, 201)
        if binomial(a, b) != binomial(a - 1, b) + binomial(a - 1, b - 1)
    ]
    assert failures == [(0, 0)]


def test_multiplicative_on_small_coprime_pairs():
    for a in range(1, 61):
        for b in range(1, 61):
            if math.gcd(a, b) == 1:
                assert euler_phi(a * b) == euler_phi(a) * euler_phi(b), (a, b)
                assert mobius(a * b) == mobius(a) * mobius(b), (a, b)


@settings(derandomize=True, max_examples=300)
@given(st.integers(min_value=1, max_value=1000), st.integers(min_value=1, max_value=1000))
def test_multiplicative_on_coprime_pairs(a, b):
    if math.gcd(a, b) != 1:
        return
    assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)
    assert mobius(a * b) == mobius(a) * mobius(b)
