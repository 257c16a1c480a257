# -*- coding: utf-8 -*-
"""Wybór wzoru zamkniętego dla zapytania (odpowiednik wyroczni po stronie wzorów)."""
from __future__ import annotations

from typing import NamedTuple

from reiscount.core.errors import DomainError
from reiscount.counting import formulas as F
from reiscount.oracle.query import Query


class FormulaAnswer(NamedTuple):
    value: int
    op: str
    exact: bool = True   # False: wzór o znanej rozbieżności z liczbą klas


def has_formula(q: Query) -> bool:
    if q.axis_filter is not None:
        return False
    if q.alphabet == 3:
        return q.min_gap == 1 and q.require_rotsym and q.k is None and q.n >= 2
    return True


def formula_count(q: Query) -> FormulaAnswer:
    if q.axis_filter is not None:
        raise DomainError("axis-filtered counts have no closed form; use the oracle")
    if q.alphabet == 3:
        return _ternary(q)
    if q.min_gap == 0:
        return _plain(q)
    return _gapped(q)


def _plain(q: Query) -> FormulaAnswer:
    n, k, refl = q.n, q.k, q.require_reflective
    if q.require_rotsym:
        if k is not None:
            return (FormulaAnswer(F.count_rotsym_refl_k(n, k), "count_rotsym_refl_k") if refl
                    else FormulaAnswer(F.count_rotsym_k(n, k), "count_rotsym_k"))
        return (FormulaAnswer(F.count_rotsym_refl(n), "count_rotsym_refl") if refl
                else FormulaAnswer(F.count_rotsym(n), "count_rotsym"))
    if k is not None:
        return (FormulaAnswer(F.reflective_R1(n, k), "reflective_R1") if refl
                else FormulaAnswer(F.gupta_R(n, k), "gupta_R"))
    if refl:
        return FormulaAnswer((F.beta_refl(n) - 1).to_int(what=f"beta_refl({n}) - 1"), "beta_refl")
    return FormulaAnswer(F.lambda_total(n), "lambda_total")


def _gapped(q: Query) -> FormulaAnswer:
    n, m, k, refl = q.n, q.min_gap, q.k, q.require_reflective
    if k is not None:
        if k > F.max_ones(n, m):
            return FormulaAnswer(0, "empty")
        if q.require_rotsym:
            return (FormulaAnswer(F.count_rotsym_refl_gap_k(n, m, k), "count_rotsym_refl_gap_k") if refl
                    else FormulaAnswer(F.count_rotsym_gap_k(n, m, k), "count_rotsym_gap_k"))
        # bijekcja: usunięcie m zer za każdą jedynką
        return (FormulaAnswer(F.reflective_R1(n - m * k, k), "reflective_R1") if refl
                else FormulaAnswer(F.gupta_R(n - m * k, k), "gupta_R"))
    if q.require_rotsym:
        return (FormulaAnswer(F.count_rotsym_refl_gap(n, m), "count_rotsym_refl_gap") if refl
                else FormulaAnswer(F.count_rotsym_gap(n, m), "count_rotsym_gap"))
    if refl:
        return FormulaAnswer(F.gap_refl_total(n, m), "gap_refl_total")
    return FormulaAnswer((F.alpha_gap(n, m) - F.HALF).to_int(what=f"alpha_gap({n},{m}) - 1/2"), "alpha_gap")


def _ternary(q: Query) -> FormulaAnswer:
    if not has_formula(q):
        raise DomainError("ternary closed forms exist only for rotation-symmetric counts with gap 1, n >= 2 and no k")
    if q.require_reflective:
        return FormulaAnswer(F.ternary_rotsym_refl_formula(q.n), "ternary_rotsym_refl_formula", exact=False)
    return FormulaAnswer(F.ternary_rotsym_formula(q.n), "ternary_rotsym_formula", exact=False)
