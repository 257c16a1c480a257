# -*- coding: utf-8 -*-
"""
Słowa cykliczne, postać kanoniczna i klasyfikacja symetrii.

Wewnątrz pętli słowa są obiektami `bytes` (symbol i na pozycji i, indeksy od 0);
modele pydantic służą na granicach (CLI, raporty, fixture'y).
"""
from __future__ import annotations

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from reiscount.core.errors import DomainError

AxisKind = Literal["point-point", "point-gap", "gap-gap"]
AxisClass = Literal["no-axis", "gap-gap-only", "point-axis"]

SUPPORTED_ALPHABETS = (2, 3)


# ---------------------------------------------------------------------------
# Operacje na bytes
# ---------------------------------------------------------------------------

def least_rotation(b: bytes) -> bytes:
    n = len(b)
    doubled = b + b
    return min(doubled[i:i + n] for i in range(n))


def canonical_bytes(b: bytes) -> bytes:
    """Minimum leksykograficzne po wszystkich 2n obrazach diedralnych."""
    if not b:
        return b
    return min(least_rotation(b), least_rotation(b[::-1]))


def minimal_period(b: bytes) -> int:
    # najmniejsze przesunięcie t > 0, dla którego obrót daje to samo słowo; t | n
    return (b + b).find(b, 1)


def min_gap(b: bytes) -> int:
    """
    Najkrótsza cykliczna seria zer między kolejnymi niezerowymi symbolami.
    Jeden niezerowy symbol: n − 1. Słowo zerowe: n.
    """
    n = len(b)
    ones = [i for i, x in enumerate(b) if x]
    if not ones:
        return n
    if len(ones) == 1:
        return n - 1
    gaps = [ones[j + 1] - ones[j] - 1 for j in range(len(ones) - 1)]
    gaps.append(ones[0] + n - ones[-1] - 1)
    return min(gaps)


def weight(b: bytes) -> int:
    return sum(1 for x in b if x)


def reflection_fixes(b: bytes, c: int) -> bool:
    """Czy odbicie i ↦ (c − i) mod n przeprowadza słowo na siebie."""
    n = len(b)
    return all(b[(c - i) % n] == b[i] for i in range(n))


def is_reflective(b: bytes) -> bool:
    return least_rotation(b[::-1]) == least_rotation(b)


# ---------------------------------------------------------------------------
# Modele
# ---------------------------------------------------------------------------

class CyclicWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    alphabet: int = 2
    symbols: Tuple[int, ...]

    @field_validator("alphabet")
    @classmethod
    def _alphabet(cls, v: int) -> int:
        if v not in SUPPORTED_ALPHABETS:
            raise ValueError(f"alphabet must be 2 or 3, got {v}")
        return v

    @model_validator(mode="after")
    def _symbols_in_range(self) -> "CyclicWord":
        if not self.symbols:
            raise ValueError("word must have at least one symbol")
        bad = [s for s in self.symbols if s < 0 or s >= self.alphabet]
        if bad:
            raise ValueError(f"symbols {sorted(set(bad))} outside alphabet of size {self.alphabet}")
        return self

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def k(self) -> int:
        return weight(self.as_bytes())

    def as_bytes(self) -> bytes:
        return bytes(self.symbols)

    @classmethod
    def from_bytes(cls, b: bytes, alphabet: int = 2) -> "CyclicWord":
        return cls(alphabet=alphabet, symbols=tuple(b))

    @classmethod
    def parse(cls, text: str, alphabet: Optional[int] = None) -> "CyclicWord":
        """'010101' albo '0 1 0 1 0 1'; alfabet domyślnie z największego symbolu."""
        raw = text.split() if " " in text.strip() else list(text.strip())
        try:
            symbols = tuple(int(x) for x in raw)
        except ValueError as e:
            raise DomainError(f"not a word: {text!r}") from e
        if alphabet is None:
            alphabet = 3 if any(s == 2 for s in symbols) else 2
        return cls(alphabet=alphabet, symbols=symbols)

    def __str__(self) -> str:
        return "".join(str(s) for s in self.symbols)


class DihedralClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    canonical: CyclicWord

    @property
    def n(self) -> int:
        return self.canonical.n

    @property
    def alphabet(self) -> int:
        return self.canonical.alphabet

    @property
    def k(self) -> int:
        return self.canonical.k

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.k, self.canonical.symbols

    def __str__(self) -> str:
        return str(self.canonical)


class AxisInfo(BaseModel):
    kind: AxisKind
    points: List[int] = []
    arcs: List[Tuple[int, int]] = []
    endpoint_values: List[int] = []

    def describe(self) -> str:
        """Opis z pozycjami liczonymi od 1."""
        parts = []
        if self.points:
            parts.append("positions " + ",".join(str(p + 1) for p in self.points))
        for a, b in self.arcs:
            parts.append(f"midpoint between positions {a + 1},{b + 1}")
        return f"{self.kind}: " + "; ".join(parts)

    @property
    def value_key(self) -> Optional[str]:
        """'a-b' dla osi punkt–punkt, 'v-gap' dla punkt–przerwa, None dla przerwa–przerwa."""
        if self.kind == "point-point":
            a, b = sorted(self.endpoint_values)
            return f"{a}-{b}"
        if self.kind == "point-gap":
            return f"{self.endpoint_values[0]}-gap"
        return None


class SymmetryProfile(BaseModel):
    stabilizer_order: int
    minimal_period: int
    axes: List[AxisInfo]

    @property
    def is_rotsym(self) -> bool:
        return self.stabilizer_order >= 2

    @property
    def is_reflective(self) -> bool:
        return bool(self.axes)

    def axis_class(self) -> AxisClass:
        if not self.axes:
            return "no-axis"
        if all(a.kind == "gap-gap" for a in self.axes):
            return "gap-gap-only"
        return "point-axis"

    def point_value_keys(self) -> List[str]:
        return sorted({a.value_key for a in self.axes if a.value_key})


def axis_for_reflection(b: bytes, c: int) -> AxisInfo:
    """Geometria osi odbicia i ↦ (c − i) mod n."""
    n = len(b)
    if n % 2:
        p = (c * (n + 1) // 2) % n
        q = (p + (n - 1) // 2) % n
        return AxisInfo(kind="point-gap", points=[p], arcs=[(q, (q + 1) % n)], endpoint_values=[b[p]])
    half = n // 2
    if c % 2 == 0:
        p = c // 2
        q = p + half
        return AxisInfo(kind="point-point", points=[p, q], endpoint_values=[b[p], b[q]])
    a = (c - 1) // 2
    return AxisInfo(kind="gap-gap", arcs=[(a, (a + 1) % n), ((a + half) % n, (a + half + 1) % n)])


def axes_of(b: bytes) -> List[AxisInfo]:
    n = len(b)
    return [axis_for_reflection(b, c) for c in range(n) if reflection_fixes(b, c)]


# ---------------------------------------------------------------------------
# API
# ---------------------------------------------------------------------------

def canonical_form(w: CyclicWord) -> DihedralClass:
    return DihedralClass(canonical=CyclicWord.from_bytes(canonical_bytes(w.as_bytes()), w.alphabet))


def symmetry_profile(w: CyclicWord) -> SymmetryProfile:
    b = w.as_bytes()
    period = minimal_period(b)
    return SymmetryProfile(stabilizer_order=len(b) // period, minimal_period=period, axes=axes_of(b))


def satisfies_gap(w: CyclicWord, m: int) -> bool:
    if m < 0:
        raise DomainError(f"min gap must be >= 0, got {m}")
    b = w.as_bytes()
    if not any(b):
        return True
    return min_gap(b) >= m
