# -*- coding: utf-8 -*-
"""
Funkcje arytmetyczne wspólne dla wszystkich wzorów: dzielniki, φ Eulera,
μ Möbiusa i dokładne współczynniki dwumianowe.

Rozkład na czynniki przez dzielenie próbne z pamięcią podręczną (lru_cache jest
bezpieczny wątkowo). Argumenty w tym pakiecie nie przekraczają ~10^4.
"""
from __future__ import annotations

import functools
import math
from typing import List, Tuple

from reiscount.core.errors import DomainError

# Liczności klas są zawsze dokładnymi liczbami całkowitymi Pythona.
BigCount = int


def _require_positive(n: int, op: str) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"{op}: integer argument required, got {n!r}")
    if n < 1:
        raise DomainError(f"{op}: n must be >= 1, got {n}")


@functools.lru_cache(maxsize=4096)
def prime_factors(n: int) -> Tuple[Tuple[int, int], ...]:
    """Rozkład n ≥ 1 na pary (p, krotność), rosnąco po p."""
    _require_positive(n, "prime_factors")
    result: List[Tuple[int, int]] = []
    value = n
    p = 2
    while p * p <= value:
        if value % p == 0:
            count = 0
            while value % p == 0:
                value //= p
                count += 1
            result.append((p, count))
        p += 1 if p == 2 else 2
    if value > 1:
        result.append((value, 1))
    return tuple(result)


@functools.lru_cache(maxsize=4096)
def _divisors(n: int) -> Tuple[int, ...]:
    divs = [1]
    for p, count in prime_factors(n):
        divs = [d * p ** e for d in divs for e in range(count + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> List[int]:
    _require_positive(n, "divisors")
    return list(_divisors(n))


def euler_phi(n: int) -> BigCount:
    _require_positive(n, "euler_phi")
    result = n
    for p, _ in prime_factors(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    _require_positive(n, "mobius")
    factors = prime_factors(n)
    if any(count > 1 for _, count in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def primes_dividing(n: int) -> List[int]:
    _require_positive(n, "primes_dividing")
    return [p for p, _ in prime_factors(n)]


def binomial(a: int, b: int) -> BigCount:
    """C(a, b); poza zakresem 0 ≤ b ≤ a zwraca 0 (sumy urywają się same)."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def common_divisors(n: int, k: int, *, min_d: int = 1) -> List[int]:
    """Dzielniki gcd(n, k) nie mniejsze niż min_d."""
    return [d for d in divisors(math.gcd(n, k)) if d >= min_d]
