# -*- coding: utf-8 -*-
import pytest

from reiscount.core.dyadic import DyadicRational
from reiscount.core.errors import DomainError
from reiscount.counting import formulas as F


def test_gupta_and_reflective():
    assert F.gupta_R(9, 3) == 7
    assert F.gupta_R(8, 4) == 8
    assert F.reflective_R1(8, 4) == 6
    assert F.lambda_total(4) == 5
    assert F.alpha_total(4) == 6
    assert F.beta_refl(4) == 6
    assert F.alpha_total(1) == 2


def test_total_classes_relation():
    for n in range(1, 40):
        assert F.alpha_total(n) - 1 == F.lambda_total(n)


def test_rotsym_small_values():
    assert (F.count_rotsym(4), F.count_rotsym_refl(4)) == (2, 2)
    assert (F.count_rotsym(6), F.count_rotsym_refl(6)) == (4, 4)
    assert F.count_rotsym(12) == 15
    assert F.count_rotsym(1) == 0 and F.count_rotsym_refl(1) == 0


def test_rotsym_k_refinement_sums_to_total():
    for n in range(2, 25):
        assert sum(F.count_rotsym_k(n, k) for k in range(1, n + 1)) == F.count_rotsym(n)
        assert sum(F.count_rotsym_refl_k(n, k) for k in range(1, n + 1)) == F.count_rotsym_refl(n)


def test_isolated_ones_n24():
    assert F.count_rotsym_gap(24, 1) == 30
    assert F.count_rotsym_refl_gap(24, 1) == 25
    assert (F.count_rotsym_gap_k(24, 1, 6), F.count_rotsym_refl_gap_k(24, 1, 6)) == (9, 6)
    assert (F.count_rotsym_gap_k(24, 1, 8), F.count_rotsym_refl_gap_k(24, 1, 8)) == (8, 6)


def test_isolated_ones_small():
    assert (F.count_rotsym_gap(6, 1), F.count_rotsym_refl_gap(6, 1)) == (2, 2)
    assert (F.count_rotsym_gap(12, 1), F.count_rotsym_refl_gap(12, 1)) == (5, 5)


def test_uncorrected_reflective_gap_count():
    assert F.count_rotsym_refl_gap_literal(6, 1) == 1
    assert F.count_rotsym_refl_gap_literal(24, 1) == 24


def test_gap_refl_total():
    assert F.gap_refl_total(24, 1) == 376
    assert F.gap_refl_total(6, 1) == 4
    assert F.gap_refl_total(3, 1) == 1
    # m parzyste, n parzyste ≥ 2m+2: postać bez poprawki zaniża o 1
    assert (F.gap_refl_total(6, 2), F.gap_refl_total_literal(6, 2)) == (2, 1)
    assert (F.gap_refl_total(10, 2), F.gap_refl_total_literal(10, 2)) == (5, 4)


def test_alpha_gap_half_values():
    assert F.alpha_gap(12, 1) == DyadicRational(51, -1)
    assert F.alpha_gap(8, 1) == DyadicRational(15, -1)
    assert F.alpha_gap(4, 1) == DyadicRational(5, -1)
    assert F.alpha_gap(6, 1) == DyadicRational(9, -1)


def test_alpha_gap_matches_direct_sum():
    for m in range(1, 5):
        for n in range(1, 50):
            assert F.alpha_gap(n, m) - F.HALF == F.alpha_gap_direct(n, m), (n, m)


def test_max_ones():
    assert F.max_ones(24, 1) == 12
    assert F.max_ones(10, 3) == 2


def test_ternary_closed_forms():
    assert F.ternary_rotsym_formula(12) == 13
    assert F.ternary_rotsym_refl_formula(12) == 13
    assert F.ternary_rotsym_heuristic(12) == 15
    assert F.ternary_rotsym_refl_heuristic(12) == 15


def test_domain_errors():
    with pytest.raises(DomainError):
        F.gupta_R(4, 5)
    with pytest.raises(DomainError):
        F.count_rotsym(0)
    with pytest.raises(DomainError):
        F.count_rotsym_gap(12, 0)
    with pytest.raises(DomainError):
        F.count_rotsym_gap_k(24, 1, 13)
    with pytest.raises(DomainError):
        F.ternary_rotsym_formula(1)


def test_rotsym_k_refinement_up_to_48():
    for n in range(25, 49):
        assert sum(F.count_rotsym_k(n, k) for k in range(1, n + 1)) == F.count_rotsym(n), n
        assert sum(F.count_rotsym_refl_k(n, k) for k in range(1, n + 1)) == F.count_rotsym_refl(n), n


def test_gap_k_refinement_sums_to_total():
    for m in range(1, 4):
        for n in range(2, 37):
            ks = range(1, F.max_ones(n, m) + 1)
            assert sum(F.count_rotsym_gap_k(n, m, k) for k in ks) == F.count_rotsym_gap(n, m), (n, m)
            assert sum(F.count_rotsym_refl_gap_k(n, m, k) for k in ks) == F.count_rotsym_refl_gap(n, m), (n, m)


def test_ordering():
    for n in range(1, 61):
        assert 0 <= F.count_rotsym_refl(n) <= F.count_rotsym(n), n
        previous = (F.count_rotsym(n), F.count_rotsym_refl(n))
        for m in range(1, 7):
            plain, refl = F.count_rotsym_gap(n, m), F.count_rotsym_refl_gap(n, m)
            assert 0 <= refl <= plain, (n, m)
            # m = 0 to liczby bez ograniczenia przerwy
            assert plain <= previous[0] and refl <= previous[1], (n, m)
            previous = (plain, refl)


@pytest.mark.slow
def test_integrality_grid():
    # każda asercja podzielności i skracania połówek przechodzi na całej siatce
    for n in range(2, 201):
        for k in range(1, n + 1):
            assert F.gupta_R(n, k) >= 0
            assert F.reflective_R1(n, k) >= 0
            assert F.count_rotsym_k(n, k) >= 0
            assert F.count_rotsym_refl_k(n, k) >= 0
        assert F.count_rotsym(n) >= F.count_rotsym_refl(n) >= 0
        for m in range(1, 6):
            assert F.alpha_gap(n, m) > 0
            assert F.count_rotsym_gap(n, m) >= F.count_rotsym_refl_gap(n, m) >= 0
            for k in range(1, F.max_ones(n, m) + 1):
                assert F.count_rotsym_gap_k(n, m, k) >= 0
                assert F.count_rotsym_refl_gap_k(n, m, k) >= 0
