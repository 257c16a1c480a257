# -*- coding: utf-8 -*-
"""
Wyjątki pakietu reiscount.

Każdy wyjątek niesie stały kod (`code`) w konwencji REFUSE.* / FAILURE.*:
  REFUSE.*  – zapytanie odrzucone (złe parametry, przekroczony limit),
  FAILURE.* – obliczenie się nie powiodło (sprzeczność, utrata dokładności).
"""
from __future__ import annotations


class ReisError(Exception):
    code: str = "FAILURE.GENERIC"

    def __init__(self, message: str = "", *, code: str | None = None):
        super().__init__(message)
        if code:
            self.code = code

    def as_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class DomainError(ReisError, ValueError):
    """Naruszony warunek wstępny operacji (n = 0, k > n, m = 0 dla operacji m ≥ 1 itd.)."""
    code = "REFUSE.DOMAIN"


class NegativeIndexError(DomainError):
    code = "REFUSE.NEGATIVE_INDEX"


class CapExceededError(DomainError):
    code = "REFUSE.CAP_EXCEEDED"


class IntegralityError(ReisError):
    """Wartość, która musi być całkowita (lub diadyczna), wyszła ułamkowa."""
    code = "FAILURE.INTEGRALITY"


class ConsistencyError(ReisError):
    code = "FAILURE.CONSISTENCY"


class UnknownIdentityError(ReisError, KeyError):
    code = "REFUSE.UNKNOWN_IDENTITY"

    def __str__(self) -> str:
        # KeyError domyślnie cytuje argument
        return str(self.args[0]) if self.args else ""


class ConfigError(ReisError):
    code = "REFUSE.CONFIG"
