# -*- coding: utf-8 -*-
"""
Zapytanie o liczbę (lub listę) klas: n, alfabet, minimalna przerwa, k oraz filtry symetrii.

Słowo zerowe nie jest nigdy liczone.
"""
from __future__ import annotations

import re
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

AxisFilterKind = Literal["no-axis", "gap-gap-only", "point-values"]

_POINT_RE = re.compile(r"^point[:=]?\s*(\d)\s*-\s*(\d)$")


class AxisFilter(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: AxisFilterKind
    values: Optional[Tuple[int, int]] = None

    @field_validator("values")
    @classmethod
    def _sorted_pair(cls, v: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        return None if v is None else tuple(sorted(v))

    @model_validator(mode="after")
    def _values_for_points(self) -> "AxisFilter":
        if self.kind == "point-values":
            if self.values is None:
                raise ValueError("point-values filter needs a pair of endpoint values")
        elif self.values is not None:
            raise ValueError(f"{self.kind} filter takes no endpoint values")
        return self

    @classmethod
    def parse(cls, text: str) -> "AxisFilter":
        """'no-axis', 'gap-gap-only' albo 'point:0-1'."""
        s = (text or "").strip().lower().replace("_", "-")
        if s in ("no-axis", "gap-gap-only"):
            return cls(kind=s)
        match = _POINT_RE.match(s)
        if match:
            return cls(kind="point-values", values=(int(match.group(1)), int(match.group(2))))
        raise ValueError(f"unknown axis filter: {text!r} (use no-axis, gap-gap-only or point:A-B)")

    def label(self) -> str:
        if self.kind == "point-values":
            return f"point:{self.values[0]}-{self.values[1]}"
        return self.kind


class Query(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    alphabet: int = 2
    min_gap: int = Field(default=0, ge=0)
    k: Optional[int] = None
    require_rotsym: bool = False
    require_reflective: bool = False
    axis_filter: Optional[AxisFilter] = None

    @field_validator("alphabet")
    @classmethod
    def _alphabet(cls, v: int) -> int:
        if v not in (2, 3):
            raise ValueError(f"alphabet must be 2 or 3, got {v}")
        return v

    @field_validator("axis_filter", mode="before")
    @classmethod
    def _parse_axis(cls, v: Any) -> Any:
        if isinstance(v, str):
            return AxisFilter.parse(v)
        return v

    @model_validator(mode="after")
    def _k_range(self) -> "Query":
        if self.k is not None and not 1 <= self.k <= self.n:
            raise ValueError(f"k must satisfy 1 <= k <= n, got k={self.k} n={self.n}")
        if self.axis_filter is not None and self.axis_filter.values is not None:
            if max(self.axis_filter.values) >= self.alphabet:
                raise ValueError(f"axis filter values {self.axis_filter.values} outside alphabet {self.alphabet}")
        return self

    def echo(self) -> Dict[str, Any]:
        """Płaski słownik do raportów (bez pól pustych)."""
        out: Dict[str, Any] = {
            "n": self.n,
            "alphabet": self.alphabet,
            "gap": self.min_gap,
            "rotsym": self.require_rotsym,
            "diameter": self.require_reflective,
        }
        if self.k is not None:
            out["k"] = self.k
        if self.axis_filter is not None:
            out["axis"] = self.axis_filter.label()
        return out

    def without_axis(self) -> "Query":
        return self.model_copy(update={"axis_filter": None})
