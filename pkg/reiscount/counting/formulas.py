# -*- coding: utf-8 -*-
"""
Wzory zamknięte na liczby klas przystawania konfiguracji na okręgu.

Oznaczenia (n punktów podziału, k jedynek, m minimalna przerwa):
  R(n,k)        – klasy k-podzbiorów pod działaniem grupy diedralnej,
  R¹(n,k)       – te z nich, które mają średnicę symetrii,
  α_n, β_n      – sumy pomocnicze (diadyczne), λ_n = α_n − 1,
  N, S          – klasy symetryczne względem obrotu (S: dodatkowo względem średnicy),
  α̃^(m)_n       – odpowiednik α_n dla konfiguracji z przerwą ≥ m.

Każdy wynik końcowy przechodzi przez asercję całkowitości (`IntegralityError`).
"""
from __future__ import annotations

import functools
from typing import Dict

from loguru import logger

from reiscount.core.dyadic import DyadicRational, HalfIndex
from reiscount.core.errors import ConsistencyError, DomainError, IntegralityError
from reiscount.core.fib import fib_type1, fib_type2
from reiscount.core.numtheory import (
    BigCount,
    binomial,
    common_divisors,
    divisors,
    euler_phi,
    mobius,
)

HALF = DyadicRational(1, -1)


def _require_k(n: int, k: int, op: str) -> None:
    if n < 1:
        raise DomainError(f"{op}: n must be >= 1, got {n}")
    if k < 1 or k > n:
        raise DomainError(f"{op}: k must satisfy 1 <= k <= n, got n={n} k={k}")


def _require_m(m: int, op: str) -> None:
    if m < 1:
        raise DomainError(f"{op}: m must be >= 1, got {m} (m = 0 queries use the rotation-only counts)")


def _require_n(n: int, op: str) -> None:
    if n < 1:
        raise DomainError(f"{op}: n must be >= 1, got {n}")


def _nonneg(value: DyadicRational, what: str) -> int:
    v = value.to_int(what=what)
    if v < 0:
        raise IntegralityError(f"{what} is negative: {v}")
    return v


# ---------------------------------------------------------------------------
# Klasy k-podzbiorów
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def gupta_R(n: int, k: int) -> BigCount:
    _require_k(n, k, "gupta_R")
    rotational = sum(euler_phi(d) * binomial(n // d - 1, k // d - 1) for d in common_divisors(n, k))
    if rotational % k:
        raise IntegralityError(f"gupta_R({n},{k}): dihedral sum {rotational} not divisible by k")
    doubled = rotational // k + reflective_R1(n, k)
    if doubled % 2:
        raise IntegralityError(f"gupta_R({n},{k}): half-sum of {doubled} not integral")
    return doubled // 2


def reflective_R1(n: int, k: int) -> BigCount:
    _require_k(n, k, "reflective_R1")
    return binomial(HalfIndex.of(k).floor_k(n), k // 2)


def lambda_total(n: int) -> BigCount:
    _require_n(n, "lambda_total")
    return sum(gupta_R(n, k) for k in range(1, n + 1))


@functools.lru_cache(maxsize=None)
def alpha_total(n: int) -> DyadicRational:
    """α_n = (1/n)Σ_{d|n} φ(d)2^{n/d−1} + (5+(−1)^n)·2^{⌊(n−5)/2⌋}."""
    _require_n(n, "alpha_total")
    s = sum(euler_phi(d) << (n // d) for d in divisors(n))
    if s % n:
        raise IntegralityError(f"alpha_total({n}): necklace sum {s} not divisible by n")
    return DyadicRational(s // n, -1) + DyadicRational(5 + (-1) ** n, (n - 5) // 2)


@functools.lru_cache(maxsize=None)
def beta_refl(n: int) -> DyadicRational:
    _require_n(n, "beta_refl")
    return DyadicRational(5 + (-1) ** n, (n - 3) // 2)


# ---------------------------------------------------------------------------
# Symetria obrotowa (bez przerw)
# ---------------------------------------------------------------------------

def _mobius_tail(n: int, term) -> DyadicRational:
    """Σ_{d|n, d≥2} μ(d)·term(n/d)."""
    acc = DyadicRational(0)
    for d in divisors(n)[1:]:
        mu = mobius(d)
        if mu:
            acc = acc + DyadicRational.of(term(n // d)) * mu
    return acc


def count_rotsym(n: int) -> BigCount:
    _require_n(n, "count_rotsym")
    if n == 1:
        return 0
    return _nonneg(-1 - _mobius_tail(n, alpha_total), f"count_rotsym({n})")


def count_rotsym_refl(n: int) -> BigCount:
    _require_n(n, "count_rotsym_refl")
    if n == 1:
        return 0
    return _nonneg(-1 - _mobius_tail(n, beta_refl), f"count_rotsym_refl({n})")


def count_rotsym_k(n: int, k: int) -> BigCount:
    _require_k(n, k, "count_rotsym_k")
    total = -sum(mobius(d) * gupta_R(n // d, k // d) for d in common_divisors(n, k, min_d=2))
    if total < 0:
        raise IntegralityError(f"count_rotsym_k({n},{k}) is negative: {total}")
    return total


def count_rotsym_refl_k(n: int, k: int) -> BigCount:
    _require_k(n, k, "count_rotsym_refl_k")
    total = -sum(mobius(d) * reflective_R1(n // d, k // d) for d in common_divisors(n, k, min_d=2))
    if total < 0:
        raise IntegralityError(f"count_rotsym_refl_k({n},{k}) is negative: {total}")
    return total


# ---------------------------------------------------------------------------
# Konfiguracje z przerwą ≥ m
# ---------------------------------------------------------------------------

def max_ones(n: int, m: int) -> int:
    """Największe k, dla którego istnieje konfiguracja z przerwą ≥ m (n − mk ≥ k)."""
    return n // (m + 1)


@functools.lru_cache(maxsize=None)
def gap_refl_seed(n: int, m: int) -> BigCount:
    """
    Σ_{k≥0} C(⌊(n − mk − h_k)/2⌋, ⌊k/2⌋) w postaci zamkniętej
    F^(m)_{⌊n/2⌋} + F^(m)_{⌊(n−m−1)/2⌋} (drugi składnik tylko dla n ≥ m+1).
    Liczy też słowo zerowe.
    """
    _require_n(n, "gap_refl_seed")
    _require_m(m, "gap_refl_seed")
    odd_part = fib_type1(m, (n - m - 1) // 2) if n >= m + 1 else 0
    return fib_type1(m, n // 2) + odd_part


def gap_refl_total(n: int, m: int) -> BigCount:
    """β^(m)_n: klasy z przerwą ≥ m posiadające średnicę symetrii."""
    return gap_refl_seed(n, m) - 1


def gap_refl_total_literal(n: int, m: int) -> BigCount:
    """f^(m)_{⌊(n−γ_m)/2⌋} − 1; poprawne dla m nieparzystych, dla parzystych tylko gdy n nieparzyste lub n < 2m+2."""
    _require_n(n, "gap_refl_total_literal")
    _require_m(m, "gap_refl_total_literal")
    return fib_type2(m, HalfIndex.of(0, m).floor_m(n)) - 1


def _necklace_gap_sum(n: int, m: int) -> int:
    """Σ_{d|n, d ≤ ⌊n/(m+1)⌋} φ(d)·((m+1)F_{n/d} − m·F_{n/d−1} − 1)."""
    bound = max_ones(n, m)
    total = 0
    for d in divisors(n):
        if d > bound:
            break
        q = n // d
        total += euler_phi(d) * ((m + 1) * fib_type1(m, q) - m * fib_type1(m, q - 1) - 1)
    return total


def alpha_gap_direct(n: int, m: int) -> BigCount:
    """α^(m)_n = Σ_k R(n − mk, k) po k = 1..⌊n/(m+1)⌋."""
    _require_n(n, "alpha_gap_direct")
    _require_m(m, "alpha_gap_direct")
    return sum(gupta_R(n - m * k, k) for k in range(1, max_ones(n, m) + 1))


@functools.lru_cache(maxsize=None)
def alpha_gap(n: int, m: int) -> DyadicRational:
    """
    α̃^(m)_n = (1/2n)·Σ φ(d)((m+1)F_{n/d} − mF_{n/d−1} − 1) + (1/2)·gap_refl_seed(n, m).

    Sprawdzane względem bezpośredniej sumy: α̃ = α + 1/2.
    """
    _require_n(n, "alpha_gap")
    _require_m(m, "alpha_gap")
    inner = _necklace_gap_sum(n, m)
    if inner % n:
        raise IntegralityError(f"alpha_gap({n},{m}): necklace sum {inner} not divisible by n")
    value = DyadicRational(inner // n + gap_refl_seed(n, m), -1)
    direct = alpha_gap_direct(n, m)
    if value != direct + HALF:
        raise ConsistencyError(f"alpha_gap({n},{m}) = {value} disagrees with direct sum {direct} + 1/2")
    return value


def count_rotsym_gap(n: int, m: int) -> BigCount:
    """N_{n,m} = −1/2 − Σ_{δ|n,δ≥2} μ(δ)·α̃^(m)_{n/δ}."""
    _require_n(n, "count_rotsym_gap")
    _require_m(m, "count_rotsym_gap")
    if n == 1:
        return 0
    value = -HALF - _mobius_tail(n, lambda q: alpha_gap(q, m))
    return _nonneg(value, f"count_rotsym_gap({n},{m})")


def count_rotsym_refl_gap(n: int, m: int) -> BigCount:
    """S_{n,m} = −1 − Σ_{d|n,d≥2} μ(d)·gap_refl_seed(n/d, m)."""
    _require_n(n, "count_rotsym_refl_gap")
    _require_m(m, "count_rotsym_refl_gap")
    if n == 1:
        return 0
    value = -1 - _mobius_tail(n, lambda q: gap_refl_seed(q, m))
    return _nonneg(value, f"count_rotsym_refl_gap({n},{m})")


def count_rotsym_refl_gap_literal(n: int, m: int) -> int:
    """Wersja z β^(m) = f^(m)_{⌊(q−γ_m)/2⌋} − 1 w sumie Möbiusa (bez poprawek). Może być ujemna."""
    _require_n(n, "count_rotsym_refl_gap_literal")
    _require_m(m, "count_rotsym_refl_gap_literal")
    if n == 1:
        return 0
    return (-1 - _mobius_tail(n, lambda q: gap_refl_total_literal(q, m))).to_int()


def _require_gap_k(n: int, m: int, k: int, op: str) -> None:
    _require_n(n, op)
    _require_m(m, op)
    if k < 1 or k > max_ones(n, m):
        raise DomainError(f"{op}: k must satisfy 1 <= k <= n/(m+1), got n={n} m={m} k={k}")


def count_rotsym_gap_k(n: int, m: int, k: int) -> BigCount:
    _require_gap_k(n, m, k, "count_rotsym_gap_k")
    r = n - m * k
    return -sum(mobius(d) * gupta_R(r // d, k // d) for d in common_divisors(n, k, min_d=2))


def count_rotsym_refl_gap_k(n: int, m: int, k: int) -> BigCount:
    _require_gap_k(n, m, k, "count_rotsym_refl_gap_k")
    r = n - m * k
    return -sum(
        mobius(d) * binomial(HalfIndex.of(k // d, m).floor_k(r // d), k // (2 * d))
        for d in common_divisors(n, k, min_d=2)
    )


# ---------------------------------------------------------------------------
# Alfabet {0,1,2}, przerwa 1
# ---------------------------------------------------------------------------

def _ternary_terms(n: int) -> Dict[int, tuple[int, int]]:
    """k → (N^(k)_{n,1}, S^(k)_{n,1}) dla 4 ≤ k ≤ ⌊n/2⌋, gcd(k, n) > 1."""
    terms: Dict[int, tuple[int, int]] = {}
    for k in range(4, n // 2 + 1):
        if len(common_divisors(n, k)) > 1:
            terms[k] = (count_rotsym_gap_k(n, 1, k), count_rotsym_refl_gap_k(n, 1, k))
    return terms


def ternary_rotsym_formula(n: int) -> BigCount:
    """N_{n,1} + Σ_k N^(k)_{n,1}·N_k bez poprawki (nie jest prawdziwą liczbą klas)."""
    if n < 2:
        raise DomainError(f"ternary_rotsym_formula: n must be >= 2, got {n}")
    value = count_rotsym_gap(n, 1) + sum(nk * count_rotsym(k) for k, (nk, _) in _ternary_terms(n).items())
    logger.debug(f"[COUNT] ternary literal N n={n} -> {value}")
    return value


def ternary_rotsym_refl_formula(n: int) -> BigCount:
    if n < 2:
        raise DomainError(f"ternary_rotsym_refl_formula: n must be >= 2, got {n}")
    value = count_rotsym_refl_gap(n, 1) + sum(
        sk * count_rotsym_refl(k) for k, (_, sk) in _ternary_terms(n).items()
    )
    logger.debug(f"[COUNT] ternary literal S n={n} -> {value}")
    return value


def ternary_rotsym_heuristic(n: int) -> BigCount:
    """2·N_{n,1} + Σ_k N^(k)_{n,1}·(N_k − 1); tylko do raportu rozbieżności."""
    if n < 2:
        raise DomainError(f"ternary_rotsym_heuristic: n must be >= 2, got {n}")
    return 2 * count_rotsym_gap(n, 1) + sum(nk * (count_rotsym(k) - 1) for k, (nk, _) in _ternary_terms(n).items())


def ternary_rotsym_refl_heuristic(n: int) -> BigCount:
    if n < 2:
        raise DomainError(f"ternary_rotsym_refl_heuristic: n must be >= 2, got {n}")
    return 2 * count_rotsym_refl_gap(n, 1) + sum(
        sk * (count_rotsym_refl(k) - 1) for k, (_, sk) in _ternary_terms(n).items()
    )
