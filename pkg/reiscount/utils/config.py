# -*- coding: utf-8 -*-
"""
Konfiguracja z env (opcjonalnie z pliku .env).

REIS_WORKERS      – maks. liczba procesów wyroczni (domyślnie 1)
REIS_CAP_BINARY   – limit n dla alfabetu {0,1} (domyślnie 28)
REIS_CAP_TERNARY  – limit n dla alfabetu {0,1,2} (domyślnie 16)
REIS_NAIVE_CAP    – największe n dla silnika pełnego przeglądu (domyślnie 14)
REIS_LOG_LEVEL    – poziom logów na stderr (domyślnie WARNING)
REIS_PROGRESS     – 1 = paski postępu tqdm w długich suite'ach
"""
from __future__ import annotations

import functools
import os
from typing import Optional

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, field_validator

from reiscount.core.errors import ConfigError

# --- dotenv (opcjonalnie) ---
try:
    from dotenv import find_dotenv, load_dotenv

    _dotenv_path = find_dotenv(filename=".env", usecwd=True)
    if _dotenv_path:
        load_dotenv(_dotenv_path)
except Exception as e:  # brak .env nie jest błędem
    logger.debug(f"[CFG] dotenv skipped: {e}")


def _env(*names: str, default: Optional[str] = None) -> Optional[str]:
    for n in names:
        v = os.getenv(n)
        if v:
            return v
    return default


class Settings(BaseModel):
    workers: int = Field(default=1, ge=1)
    cap_binary: int = Field(default=28, ge=28)
    cap_ternary: int = Field(default=16, ge=16)
    naive_cap: int = Field(default=14, ge=1)
    log_level: str = "WARNING"
    progress: bool = False

    @field_validator("log_level")
    @classmethod
    def _level(cls, v: str) -> str:
        level = (v or "").strip().upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v!r}")
        return level

    def cap_for(self, alphabet: int) -> int:
        return self.cap_binary if alphabet == 2 else self.cap_ternary


def load_settings() -> Settings:
    raw = {
        "workers": _env("REIS_WORKERS", default="1"),
        "cap_binary": _env("REIS_CAP_BINARY", default="28"),
        "cap_ternary": _env("REIS_CAP_TERNARY", default="16"),
        "naive_cap": _env("REIS_NAIVE_CAP", default="14"),
        "log_level": _env("REIS_LOG_LEVEL", default="WARNING"),
        "progress": (_env("REIS_PROGRESS", default="0") or "0") == "1",
    }
    try:
        return Settings(**raw)
    except ValidationError as e:
        raise ConfigError(f"invalid REIS_* environment: {e.errors()[0].get('msg')} ({e.errors()[0].get('loc')})") from e


@functools.lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
