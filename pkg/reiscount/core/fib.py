# -*- coding: utf-8 -*-
"""
Liczby m-Fibonacciego typu 1 (F^(m)) i typu 2 (f^(m)).

Obie rodziny spełniają x_n = x_{n-1} + x_{n-m-1}; różnią się blokiem
początkowym:
  F^(m)_0 = ... = F^(m)_m = 1,
  f^(m)_i = 1 dla i ≤ ⌊(m-1)/2⌋, f^(m)_i = 2 dla ⌊(m+1)/2⌋ ≤ i ≤ m.

Wartości liczymy iteracyjnie (rekursja), a postaci dwumianowe są osobnymi
ewaluatorami używanymi przez testy i katalog tożsamości.
"""
from __future__ import annotations

import threading
from typing import Dict, List

from loguru import logger

from reiscount.core.errors import DomainError, NegativeIndexError
from reiscount.core.numtheory import BigCount, binomial

_LOCK = threading.Lock()
_ROWS_T1: Dict[int, List[int]] = {}
_ROWS_T2: Dict[int, List[int]] = {}


def _check(m: int, n: int, op: str) -> None:
    if m < 1:
        # m = 0 nie ma sensownego rozszerzenia (sprzeczne warunki g(1)=1 i g(1)=3)
        raise DomainError(f"{op}: m must be >= 1, got {m}")
    if n < 0:
        raise NegativeIndexError(f"{op}: negative index n={n} (m={m})")


def initial_block_type1(m: int) -> List[int]:
    return [1] * (m + 1)


def initial_block_type2(m: int) -> List[int]:
    split = (m - 1) // 2
    return [1 if i <= split else 2 for i in range(m + 1)]


def _extend(rows: Dict[int, List[int]], m: int, n: int, seed: List[int]) -> int:
    with _LOCK:
        row = rows.get(m)
        if row is None:
            row = list(seed)
            rows[m] = row
        if len(row) <= n:
            logger.trace(f"[FIB] extend m={m} {len(row)}..{n}")
            while len(row) <= n:
                i = len(row)
                row.append(row[i - 1] + row[i - m - 1])
        return row[n]


def fib_type1(m: int, n: int) -> BigCount:
    _check(m, n, "fib_type1")
    return _extend(_ROWS_T1, m, n, initial_block_type1(m))


def fib_type2(m: int, n: int) -> BigCount:
    _check(m, n, "fib_type2")
    return _extend(_ROWS_T2, m, n, initial_block_type2(m))


# --- postaci dwumianowe ---

def fib_type1_binomial(m: int, n: int) -> BigCount:
    """Σ_{k≥0} C(n − mk, k)."""
    _check(m, n, "fib_type1_binomial")
    return _diagonal_sum(n, m)


def fib_type2_binomial(m: int, n: int) -> BigCount:
    """f^(m)_n = Σ_k C(n − mk, k) + Σ_k C(n − ⌈m/2⌉ − mk, k); druga suma pusta dla n < ⌈m/2⌉."""
    _check(m, n, "fib_type2_binomial")
    shift = (m + 1) // 2
    return _diagonal_sum(n, m) + _diagonal_sum(n - shift, m)


def fib_type2_binomial_literal(m: int, n: int) -> BigCount:
    """
    Postać z podziałem na parzystość m w wersji bez poprawki:
      m nieparzyste: Σ C(n + (m+1)/2 − mk, k),
      m parzyste:    Σ C(n + m/2 − (m−1)k, k).
    Zgadza się z rekursją tylko dla m = 1.
    """
    _check(m, n, "fib_type2_binomial_literal")
    if m % 2:
        return _diagonal_sum(n + (m + 1) // 2, m)
    return _diagonal_sum(n + m // 2, m - 1)


def _diagonal_sum(top: int, step: int) -> int:
    """Σ_{k≥0} C(top − step·k, k); 0 dla top < 0."""
    total = 0
    k = 0
    while top - step * k >= k:
        total += binomial(top - step * k, k)
        k += 1
    return total


def clear_cache() -> None:
    with _LOCK:
        _ROWS_T1.clear()
        _ROWS_T2.clear()
