# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, settings, strategies as st

from reiscount.core.errors import DomainError, UnknownIdentityError
from reiscount.counting.identities import check_identity, evaluate_identity, identity_names


def test_registry_names():
    names = identity_names()
    assert names == sorted(names)
    for name in ("reflective_binomial_sum", "necklace_binomial_sum", "necklace_hyperbola_sum",
                 "signed_necklace_sum", "reflective_gap_sum", "necklace_gap_sum", "fib2_binomial"):
        assert name in names


@settings(derandomize=True, max_examples=60)
@given(st.integers(min_value=1, max_value=120))
def test_single_parameter_identities(n):
    for name in ("reflective_binomial_sum", "necklace_binomial_sum", "necklace_hyperbola_sum",
                 "signed_necklace_sum", "signed_sum_odd_terms", "total_classes"):
        assert check_identity(name, {"n": n}), (name, n)


@settings(derandomize=True, max_examples=60)
@given(st.integers(min_value=1, max_value=80), st.integers(min_value=1, max_value=8))
def test_gap_identities(n, m):
    assert check_identity("reflective_gap_sum", {"n": n, "m": m})
    assert check_identity("necklace_gap_sum", (n, m))


def test_signed_identity_uncorrected_holds_only_for_odd_n():
    res = evaluate_identity("signed_necklace_sum_literal", {"n": 2})
    assert not res.holds and (res.lhs, res.rhs) == (2, 4)
    assert all(check_identity("signed_necklace_sum_literal", [n]) for n in range(1, 60, 2))
    assert not any(check_identity("signed_necklace_sum_literal", [n]) for n in range(2, 60, 2))


def test_reflective_gap_uncorrected_even_m():
    assert not check_identity("reflective_gap_sum_literal", {"n": 10, "m": 2})
    assert not check_identity("reflective_gap_sum_literal", {"n": 6, "m": 2})
    assert check_identity("reflective_gap_sum", {"n": 10, "m": 2})
    assert all(check_identity("reflective_gap_sum_literal", {"n": n, "m": 3}) for n in range(1, 60))


def test_necklace_gap_uncorrected_fails():
    assert not check_identity("necklace_gap_sum_literal", {"n": 4, "m": 1})
    assert check_identity("necklace_gap_sum", {"n": 4, "m": 1})


def test_fib_identities():
    assert all(check_identity("fib2_shift_literal", {"m": 1, "n": n}) for n in range(0, 40))
    assert not check_identity("fib2_shift_literal", {"m": 3, "n": 3})
    assert check_identity("fib1_binomial", {"m": 2, "n": 0})
    with pytest.raises(DomainError):
        evaluate_identity("fib2_shift_literal", {"m": 2, "n": 3})


def test_zero_gap_extension_is_contradictory():
    res = evaluate_identity("no_zero_gap_extension", {"n1": 3, "n2": 4})
    assert res.relation == "ne"
    assert (res.lhs, res.rhs) == (1, 3)
    assert res.holds


def test_as_dict_uses_strings():
    d = evaluate_identity("necklace_gap_sum", {"n": 12, "m": 1}).as_dict()
    assert d["name"] == "necklace_gap_sum"
    assert d["params"] == {"n": 12, "m": 1}
    assert isinstance(d["lhs"], str) and d["holds"] is True


def test_bad_calls():
    with pytest.raises(UnknownIdentityError):
        check_identity("lemma99", {"n": 3})
    with pytest.raises(KeyError):
        check_identity("lemma99", {"n": 3})
    with pytest.raises(DomainError):
        check_identity("reflective_gap_sum", {"n": 3})
    with pytest.raises(DomainError):
        check_identity("necklace_binomial_sum", {"n": 0})
    with pytest.raises(DomainError):
        check_identity("reflective_gap_sum", (3,))
