# -*- coding: utf-8 -*-
"""
Suite'y weryfikacyjne uruchamiane przez `reisctl verify`.

  lemmas  – katalog tożsamości w arytmetyce dokładnej (formy poprawione muszą
            zachodzić, formy bez poprawki muszą gdzieś zawieść),
  cross   – siatka wzór vs wyrocznia + zgodność silników + liczby z Tabeli 1,
  ternary – raport rozbieżności wzorów dla alfabetu {0,1,2} przy n = 12.

Każda komórka to CellResult; komórki `info` niczego nie przesądzają, tylko
dokumentują znane rozbieżności.
"""
from __future__ import annotations

import sys
import time
from collections import Counter
from typing import Any, Callable, Dict, Iterable, List, Optional

from loguru import logger
from pydantic import BaseModel
from tqdm import tqdm

from reiscount.core.errors import DomainError, ReisError
from reiscount.counting import formulas as F
from reiscount.counting.dispatch import formula_count
from reiscount.counting.identities import evaluate_identity
from reiscount.oracle.classes import axis_breakdown, count_classes, enumerate_classes
from reiscount.oracle.engines import class_records
from reiscount.oracle.fixtures import load_fixture, table_fixture
from reiscount.oracle.query import Query
from reiscount.oracle.words import canonical_form, satisfies_gap
from reiscount.protocol.report import RunReport
from reiscount.utils.config import get_settings

SUITES = ("lemmas", "cross", "ternary")

LEMMA_N_MAX = 300
LEMMA_GAP_N_MAX = 120
LEMMA_FIB_N_MAX = 200
LEMMA_GAP_MAX = 8
CROSS_N_MAX = 24
CROSS_GAP_MAX = 3
CROSS_TERNARY_N_MAX = 14
TERNARY_NAIVE_N_MAX = 10

TABLE1_K_DISTRIBUTION = {2: 1, 3: 1, 4: 5, 6: 9, 8: 8, 9: 2, 10: 3, 12: 1}
TABLE1_AXES = {"no-axis": 5, "gap-gap-only": 4, "point:0-1": 3}
HEADLINE_N24 = {
    # (k, diameter) → liczba klas, n = 24, przerwa 1
    (None, False): 30, (None, True): 25,
    (6, False): 9, (6, True): 6,
    (8, False): 8, (8, True): 6,
}


class CellResult(BaseModel):
    check: str
    params: Dict[str, Any] = {}
    expected: Optional[str] = None
    actual: Optional[str] = None
    ok: bool
    info: bool = False
    note: Optional[str] = None

    def as_dict(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


class SuiteResult(BaseModel):
    suite: str
    params: Dict[str, Any] = {}
    cells: List[CellResult] = []
    elapsed_ms: Optional[int] = None

    @property
    def failures(self) -> List[CellResult]:
        return [c for c in self.cells if not c.ok and not c.info]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, int]:
        return {
            "cells": len(self.cells),
            "passed": sum(1 for c in self.cells if c.ok and not c.info),
            "failed": len(self.failures),
            "info": sum(1 for c in self.cells if c.info),
        }

    def to_report(self, *, timing: bool = True) -> RunReport:
        # w raporcie tylko to, co wymaga uwagi: porażki i komórki informacyjne
        shown = [c.as_dict() for c in self.cells if c.info or not c.ok]
        return RunReport(
            command="verify",
            query={"suite": self.suite, **self.params},
            matches=self.passed,
            items=shown,
            summary=self.summary(),
            elapsed_ms=self.elapsed_ms if timing else None,
        )


def _progress(items: Iterable, desc: str) -> Iterable:
    return tqdm(items, desc=desc, disable=not get_settings().progress, file=sys.stderr, leave=False)


def _cell(check: str, params: Dict[str, Any], expected: Any, actual: Any, *, info: bool = False,
          note: Optional[str] = None) -> CellResult:
    return CellResult(
        check=check, params=params, expected=str(expected), actual=str(actual),
        ok=expected == actual, info=info, note=note,
    )


def _guarded(check: str, params: Dict[str, Any], fn: Callable[[], CellResult]) -> CellResult:
    # błąd w komórce to porażka komórki, nie całego suite'u
    try:
        return fn()
    except ReisError as e:
        logger.warning(f"[VERIFY] {check} {params}: {e.code} {e}")
        return CellResult(check=check, params=params, ok=False, note=f"{e.code}: {e}")


# ---------------------------------------------------------------------------
# lemmas
# ---------------------------------------------------------------------------

def _identity_cell(name: str, params: Dict[str, int], expect_holds: bool = True) -> CellResult:
    def run() -> CellResult:
        res = evaluate_identity(name, params)
        return CellResult(
            check=name, params=res.params, expected=str(res.rhs), actual=str(res.lhs),
            ok=res.holds == expect_holds,
            note=None if expect_holds else "expected to fail",
        )
    return _guarded(name, params, run)


def _fails_somewhere(name: str, grid: Iterable[Dict[str, int]], scope: Dict[str, Any]) -> CellResult:
    for params in grid:
        res = evaluate_identity(name, params)
        if not res.holds:
            return CellResult(check=f"{name}:fails-somewhere", params=scope, ok=True,
                              note=f"first counterexample {res.params}: lhs={res.lhs} rhs={res.rhs}")
    return CellResult(check=f"{name}:fails-somewhere", params=scope, ok=False, note="no counterexample found")


def run_lemmas(n_max: Optional[int] = None, gap_max: Optional[int] = None) -> SuiteResult:
    n_max = LEMMA_N_MAX if n_max is None else n_max
    gap_max = LEMMA_GAP_MAX if gap_max is None else gap_max
    gap_n_max = min(n_max, LEMMA_GAP_N_MAX)
    fib_n_max = min(n_max, LEMMA_FIB_N_MAX)
    started = time.perf_counter()
    cells: List[CellResult] = []

    for n in _progress(range(1, n_max + 1), "lemmas n"):
        for name in ("reflective_binomial_sum", "necklace_binomial_sum", "necklace_hyperbola_sum",
                     "signed_necklace_sum", "signed_sum_odd_terms", "total_classes"):
            cells.append(_identity_cell(name, {"n": n}))
        cells.append(_identity_cell("signed_necklace_sum_literal", {"n": n}, expect_holds=n % 2 == 1))

    for m in range(1, gap_max + 2):
        for n in range(0, fib_n_max + 1):
            cells.append(_identity_cell("fib1_binomial", {"m": m, "n": n}))
            cells.append(_identity_cell("fib2_binomial", {"m": m, "n": n}))
        fib_grid = [{"m": m, "n": n} for n in range(0, fib_n_max + 1)]
        if m == 1:
            cells.extend(_identity_cell("fib2_binomial_literal", p) for p in fib_grid)
            cells.extend(_identity_cell("fib2_shift_literal", p) for p in fib_grid)
        else:
            cells.append(_fails_somewhere("fib2_binomial_literal", fib_grid, {"m": m, "n_max": fib_n_max}))
            if m % 2 == 1:
                cells.append(_fails_somewhere("fib2_shift_literal", fib_grid, {"m": m, "n_max": fib_n_max}))

    literal_grid: List[Dict[str, int]] = []
    for m in _progress(range(1, gap_max + 1), "lemmas m"):
        even_grid = []
        for n in range(1, gap_n_max + 1):
            p = {"n": n, "m": m}
            cells.append(_identity_cell("reflective_gap_sum", p))
            cells.append(_identity_cell("necklace_gap_sum", p))
            literal_grid.append(p)
            if m % 2 == 1:
                cells.append(_identity_cell("reflective_gap_sum_literal", p))
            else:
                even_grid.append(p)
        if even_grid and gap_n_max >= 2 * m + 2:
            cells.append(_fails_somewhere("reflective_gap_sum_literal", even_grid, {"m": m, "n_max": gap_n_max}))
    if literal_grid:
        cells.append(_fails_somewhere("necklace_gap_sum_literal", literal_grid,
                                      {"n_max": gap_n_max, "gap_max": gap_max}))

    cells.append(_identity_cell("no_zero_gap_extension", {"n1": 3, "n2": 4}))

    result = SuiteResult(suite="lemmas", params={"n_max": n_max, "gap_max": gap_max}, cells=cells,
                         elapsed_ms=int((time.perf_counter() - started) * 1000))
    logger.info(f"[VERIFY] lemmas {result.summary()}")
    return result


# ---------------------------------------------------------------------------
# cross
# ---------------------------------------------------------------------------

def _grid_cell(q: Query) -> CellResult:
    def run() -> CellResult:
        answer = formula_count(q)
        return _cell(answer.op, q.echo(), count_classes(q), answer.value)
    return _guarded("formula", q.echo(), run)


def _engine_cells(n: int, alphabet: int, m: int) -> List[CellResult]:
    params = {"n": n, "alphabet": alphabet, "gap": m}
    cells = []
    for engine, rotsym_only in (("necklace", False), ("periodic", True)):
        naive = class_records(n, alphabet, m, rotsym_only, "naive")
        other = class_records(n, alphabet, m, rotsym_only, engine)
        cells.append(CellResult(check=f"engine:{engine}", params=params, expected=str(len(naive)),
                                actual=str(len(other)), ok=naive == other))
    return cells


def _table1_cells() -> List[CellResult]:
    cells: List[CellResult] = []
    for (k, refl), expected in HEADLINE_N24.items():
        q = Query(n=24, min_gap=1, k=k, require_rotsym=True, require_reflective=refl)
        cells.append(_cell("headline:formula", q.echo(), expected, formula_count(q).value))
        cells.append(_cell("headline:oracle", q.echo(), expected, count_classes(q)))

    q = Query(n=24, min_gap=1, require_rotsym=True)
    found = enumerate_classes(q)
    fixture = table_fixture(1)
    params = q.echo()
    cells.append(CellResult(check="table1:classes", params=params, expected=str(len(fixture)),
                            actual=str(len(found)), ok=set(found) == fixture))
    dist = dict(sorted(Counter(c.k for c in found).items()))
    cells.append(_cell("table1:k-distribution", params, TABLE1_K_DISTRIBUTION, dist))
    hist = axis_breakdown(q)
    for key, expected in TABLE1_AXES.items():
        cells.append(_cell(f"table1:{key}", params, expected, hist.get(key, 0)))
    return cells


def run_cross(n_max: Optional[int] = None, gap_max: Optional[int] = None,
              ternary_n_max: Optional[int] = None) -> SuiteResult:
    n_max = CROSS_N_MAX if n_max is None else n_max
    gap_max = CROSS_GAP_MAX if gap_max is None else gap_max
    ternary_n_max = min(n_max, CROSS_TERNARY_N_MAX) if ternary_n_max is None else ternary_n_max
    settings = get_settings()
    started = time.perf_counter()
    cells: List[CellResult] = []

    for n in _progress(range(1, n_max + 1), "cross n"):
        for m in range(0, gap_max + 1):
            for rotsym in (True, False):
                for refl in (False, True):
                    for k in [None, *range(1, n + 1)]:
                        q = Query(n=n, min_gap=m, k=k, require_rotsym=rotsym, require_reflective=refl)
                        cells.append(_grid_cell(q))
            if m >= 1:
                q = Query(n=n, min_gap=m, require_rotsym=True, require_reflective=True)
                literal = F.count_rotsym_refl_gap_literal(n, m)
                oracle = count_classes(q)
                if literal != oracle:
                    cells.append(_cell("count_rotsym_refl_gap_literal", q.echo(), oracle, literal, info=True,
                                       note="beta in the Moebius sum instead of the corrected seed"))
            if n <= settings.naive_cap:
                cells.extend(_engine_cells(n, 2, m))

    for n in _progress(range(2, ternary_n_max + 1), "cross ternary"):
        for refl in (False, True):
            q = Query(n=n, alphabet=3, min_gap=1, require_rotsym=True, require_reflective=refl)
            oracle = count_classes(q)
            periodic_vs_necklace = sum(
                1 for r in class_records(n, 3, 1, False, "necklace") if r.rotsym and (r.reflective or not refl)
            )
            cells.append(_cell("ternary:engines", q.echo(), oracle, periodic_vs_necklace))
            literal = formula_count(q)
            cells.append(_cell(literal.op, q.echo(), oracle, literal.value, info=True,
                               note="ternary closed form is not a class count"))
        if n <= min(settings.naive_cap, TERNARY_NAIVE_N_MAX):
            for m in range(0, gap_max + 1):
                cells.extend(_engine_cells(n, 3, m))

    if n_max >= 24 and gap_max >= 1:
        cells.extend(_table1_cells())

    result = SuiteResult(
        suite="cross",
        params={"n_max": n_max, "gap_max": gap_max, "ternary_n_max": ternary_n_max},
        cells=cells,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
    )
    logger.info(f"[VERIFY] cross {result.summary()}")
    return result


# ---------------------------------------------------------------------------
# ternary
# ---------------------------------------------------------------------------

TERNARY_N = 12
TERNARY_LITERAL = {"rotsym": 13, "diameter": 13}
TERNARY_ORACLE = {"rotsym": 15, "diameter": 14}
TERNARY_HEURISTIC = {"rotsym": 15, "diameter": 15}


def run_ternary() -> SuiteResult:
    n = TERNARY_N
    started = time.perf_counter()
    cells: List[CellResult] = []
    q_all = Query(n=n, alphabet=3, min_gap=1, require_rotsym=True)
    q_refl = q_all.model_copy(update={"require_reflective": True})

    literal = {"rotsym": F.ternary_rotsym_formula(n), "diameter": F.ternary_rotsym_refl_formula(n)}
    oracle = {"rotsym": count_classes(q_all), "diameter": count_classes(q_refl)}
    heuristic = {"rotsym": F.ternary_rotsym_heuristic(n), "diameter": F.ternary_rotsym_refl_heuristic(n)}
    for key in ("rotsym", "diameter"):
        params = {"n": n, "alphabet": 3, "gap": 1, "count": key}
        cells.append(_cell("literal", params, TERNARY_LITERAL[key], literal[key]))
        cells.append(_cell("oracle", params, TERNARY_ORACLE[key], oracle[key]))
        cells.append(_cell("heuristic", params, TERNARY_HEURISTIC[key], heuristic[key]))
        cells.append(CellResult(check="divergence", params=params, expected="!=", actual=f"{literal[key]} vs {oracle[key]}",
                                ok=literal[key] != oracle[key]))

    fixture = load_fixture(2)
    found = enumerate_classes(q_all)
    params = q_all.echo()
    cells.append(CellResult(check="table2:classes", params=params, expected=str(len(fixture.rows)),
                            actual=str(len(found)), ok=set(found) == fixture.classes()))
    reflective = set(enumerate_classes(q_refl))
    lonely = [c for c in found if c not in reflective]
    row15 = canonical_form(fixture.rows[14])
    cells.append(CellResult(check="table2:non-reflective", params=params, expected=str(row15),
                            actual=",".join(str(c) for c in lonely), ok=lonely == [row15]))
    for row, word in sorted(fixture.printed_rows.items()):
        cells.append(CellResult(check=f"table2:printed-row-{row}", params=params, expected="gap violation",
                                actual=str(word), ok=not satisfies_gap(word, 1)))

    if get_settings().naive_cap >= n:
        naive = class_records(n, 3, 1, True, "naive")
        cells.append(_cell("engine:naive-scan", params, len(class_records(n, 3, 1, True, "periodic")), len(naive)))

    result = SuiteResult(suite="ternary", params={"n": n}, cells=cells,
                         elapsed_ms=int((time.perf_counter() - started) * 1000))
    logger.info(f"[VERIFY] ternary {result.summary()}")
    return result


def run_suite(name: str, *, n_max: Optional[int] = None, gap_max: Optional[int] = None) -> SuiteResult:
    if name == "lemmas":
        return run_lemmas(n_max, gap_max)
    if name == "cross":
        return run_cross(n_max, gap_max)
    if name == "ternary":
        # siatka ternary jest stała (n = 12)
        if n_max is not None or gap_max is not None:
            raise DomainError("suite ternary takes no --n-max / --gap-max")
        return run_ternary()
    raise ReisError(f"unknown suite: {name!r} (known: {', '.join(SUITES)})", code="REFUSE.UNKNOWN_SUITE")
