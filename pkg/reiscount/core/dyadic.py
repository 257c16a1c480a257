# -*- coding: utf-8 -*-
"""
Dokładne liczby diadyczne p·2^e (e może być ujemne).

Przechowują wartości pośrednie α_n, β_n i α̃^(m)_n, które dla małych n są
połówkowe lub ćwiartkowe; kombinacje Möbiusa muszą się skrócić do liczby
całkowitej, co sprawdza `to_int()`.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from reiscount.core.errors import DomainError, IntegralityError

IntLike = Union[int, "DyadicRational"]


def _normalize(numerator: int, exponent: int) -> tuple[int, int]:
    if numerator == 0:
        return 0, 0
    # wyciągamy czynniki 2 z licznika do wykładnika
    tz = (numerator & -numerator).bit_length() - 1
    return numerator >> tz, exponent + tz


@functools.total_ordering
@dataclass(frozen=True, init=False)
class DyadicRational:
    numerator: int
    exponent: int

    def __init__(self, numerator: int, exponent: int = 0):
        num, exp = _normalize(int(numerator), int(exponent))
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    # --- konstrukcja ---

    @classmethod
    def of(cls, value: IntLike) -> "DyadicRational":
        if isinstance(value, DyadicRational):
            return value
        return cls(int(value), 0)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "DyadicRational":
        den = value.denominator
        if den & (den - 1):
            raise DomainError(f"not a dyadic rational: {value}")
        return cls(value.numerator, -(den.bit_length() - 1))

    # --- arytmetyka ---

    def _aligned(self, other: "DyadicRational") -> tuple[int, int, int]:
        e = min(self.exponent, other.exponent)
        return self.numerator << (self.exponent - e), other.numerator << (other.exponent - e), e

    def __add__(self, other: IntLike) -> "DyadicRational":
        if not isinstance(other, (int, DyadicRational)):
            return NotImplemented
        a, b, e = self._aligned(DyadicRational.of(other))
        return DyadicRational(a + b, e)

    __radd__ = __add__

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.numerator, self.exponent)

    def __sub__(self, other: IntLike) -> "DyadicRational":
        if not isinstance(other, (int, DyadicRational)):
            return NotImplemented
        return self + (-DyadicRational.of(other))

    def __rsub__(self, other: IntLike) -> "DyadicRational":
        return DyadicRational.of(other) - self

    def __mul__(self, other: IntLike) -> "DyadicRational":
        if not isinstance(other, (int, DyadicRational)):
            return NotImplemented
        o = DyadicRational.of(other)
        return DyadicRational(self.numerator * o.numerator, self.exponent + o.exponent)

    __rmul__ = __mul__

    def scale2(self, e: int) -> "DyadicRational":
        """Mnożenie przez 2^e."""
        return DyadicRational(self.numerator, self.exponent + e)

    def half(self) -> "DyadicRational":
        return self.scale2(-1)

    # --- porównania ---

    def as_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.numerator << self.exponent)
        return Fraction(self.numerator, 1 << -self.exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = DyadicRational.of(other)
        if isinstance(other, Fraction):
            return self.as_fraction() == other
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return (self.numerator, self.exponent) == (other.numerator, other.exponent)

    def __lt__(self, other: IntLike) -> bool:
        if isinstance(other, Fraction):
            return self.as_fraction() < other
        if not isinstance(other, (int, DyadicRational)):
            return NotImplemented
        a, b, _ = self._aligned(DyadicRational.of(other))
        return a < b

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    # --- konwersje ---

    @property
    def is_integer(self) -> bool:
        return self.exponent >= 0 or self.numerator == 0

    def to_int(self, *, what: str = "value") -> int:
        if not self.is_integer:
            raise IntegralityError(f"{what} is not integral: {self}")
        return self.numerator << self.exponent

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.numerator << self.exponent)
        return f"{self.numerator}/{1 << -self.exponent}"

    def __repr__(self) -> str:
        return f"DyadicRational({self})"


@dataclass(frozen=True)
class HalfIndex:
    """Znaczniki parzystości: h_k ≡ k (mod 2), γ_m ≡ m − 1 (mod 2)."""
    h_k: int
    gamma_m: int

    @classmethod
    def of(cls, k: int, m: int = 1) -> "HalfIndex":
        return cls(h_k=k % 2, gamma_m=(m - 1) % 2)

    def floor_k(self, n: int) -> int:
        """⌊(n − h_k)/2⌋"""
        return (n - self.h_k) // 2

    def floor_m(self, n: int) -> int:
        """⌊(n − γ_m)/2⌋"""
        return (n - self.gamma_m) // 2
