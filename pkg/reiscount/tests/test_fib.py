# -*- coding: utf-8 -*-
import pytest

from reiscount.core.errors import DomainError, NegativeIndexError
from reiscount.core.fib import (
    clear_cache, fib_type1, fib_type1_binomial, fib_type2, fib_type2_binomial,
    fib_type2_binomial_literal, initial_block_type1, initial_block_type2,
)


def test_classic_fibonacci():
    assert [fib_type1(1, n) for n in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert fib_type1(1, 12) == 233
    assert fib_type2(1, 12) == 377


def test_initial_blocks():
    assert initial_block_type1(2) == [1, 1, 1]
    assert initial_block_type2(1) == [1, 2]
    assert initial_block_type2(2) == [1, 2, 2]
    assert initial_block_type2(3) == [1, 1, 2, 2]


def test_binomial_forms_match_recursion():
    for m in range(1, 10):
        for n in range(0, 61):
            assert fib_type1_binomial(m, n) == fib_type1(m, n), (m, n)
            assert fib_type2_binomial(m, n) == fib_type2(m, n), (m, n)


def test_uncorrected_closed_form_only_for_m1():
    assert all(fib_type2_binomial_literal(1, n) == fib_type2(1, n) for n in range(50))
    # f^(3)_3 = 2, a przesunięcie daje F^(3)_5 = 3
    assert fib_type2(3, 3) == 2 and fib_type1(3, 5) == 3
    assert fib_type2(2, 2) == 2 and fib_type2_binomial_literal(2, 2) == 3


def test_domain():
    with pytest.raises(NegativeIndexError):
        fib_type1(1, -1)
    with pytest.raises(DomainError):
        fib_type2(0, 5)


def test_clear_cache_recomputes():
    before = fib_type1(4, 40)
    clear_cache()
    assert fib_type1(4, 40) == before


@pytest.mark.parametrize("fib", [fib_type1, fib_type2])
def test_monotone_and_strict_after_initial_block(fib):
    for m in range(1, 10):
        values = [fib(m, n) for n in range(0, 121)]
        for n in range(1, len(values)):
            assert values[n] >= values[n - 1], (m, n)
            if n > m:
                assert values[n] > values[n - 1], (m, n)
