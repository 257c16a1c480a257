# -*- coding: utf-8 -*-
"""
Raport z uruchomienia (koperta JSON wypisywana przez reisctl).

Liczby zawsze jako napisy dziesiętne; pola puste są pomijane przy serializacji,
więc dumps(loads(s)) == s dla każdego raportu.
"""
from __future__ import annotations

import json
import re
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, field_validator, model_validator

Method = Literal["formula", "oracle", "both"]
Command = Literal["count", "enumerate", "tables", "verify", "axes"]

_DECIMAL = re.compile(r"^-?\d+(/\d+)?$")


def as_decimal(v: Any) -> str:
    """int / DyadicRational / str → napis dziesiętny; float odrzucany."""
    if isinstance(v, bool) or isinstance(v, float):
        raise ValueError(f"counts must be exact, got {v!r}")
    s = str(v).strip()
    if not _DECIMAL.match(s):
        raise ValueError(f"not an exact decimal value: {v!r}")
    return s


def normalize_method(v: Any) -> str:
    s = str(v or "").strip().lower()
    return {"formulas": "formula", "brute": "oracle", "brute-force": "oracle"}.get(s, s)


class RunReport(BaseModel):
    command: Command
    query: Dict[str, Any] = {}
    method: Optional[Method] = None
    op: Optional[str] = None
    value: Optional[str] = None
    values: Optional[Dict[str, str]] = None
    matches: Optional[bool] = None
    known_divergence: Optional[bool] = None
    classes: Optional[List[str]] = None
    histogram: Optional[Dict[str, int]] = None
    items: Optional[List[Dict[str, Any]]] = None
    summary: Optional[Dict[str, Any]] = None
    notes: Optional[List[str]] = None
    elapsed_ms: Optional[int] = None

    # --- walidatory ---

    @field_validator("method", mode="before")
    @classmethod
    def _norm_method(cls, v: Any) -> Any:
        return None if v is None else normalize_method(v)

    @field_validator("value", mode="before")
    @classmethod
    def _value_decimal(cls, v: Any) -> Any:
        return None if v is None else as_decimal(v)

    @field_validator("values", mode="before")
    @classmethod
    def _values_decimal(cls, v: Any) -> Any:
        if v is None:
            return None
        return {str(key): as_decimal(val) for key, val in dict(v).items()}

    @model_validator(mode="after")
    def _both_has_values(self) -> "RunReport":
        # w trybie both oba wyniki muszą być widoczne
        if self.command == "count" and self.method == "both":
            if not self.values or not {"formula", "oracle"} <= set(self.values):
                raise ValueError("method=both needs values for formula and oracle")
            if self.matches is None:
                self.matches = self.values["formula"] == self.values["oracle"]
        return self

    # --- serializacja ---

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @staticmethod
    def loads(body: str) -> "RunReport":
        return RunReport(**json.loads(body or "{}"))

    @property
    def failed(self) -> bool:
        return self.matches is False
