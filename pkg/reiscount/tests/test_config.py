# -*- coding: utf-8 -*-
import pytest

from reiscount.core.errors import ConfigError
from reiscount.utils.config import load_settings


def test_defaults(monkeypatch):
    for name in ("REIS_WORKERS", "REIS_CAP_BINARY", "REIS_CAP_TERNARY", "REIS_NAIVE_CAP",
                 "REIS_LOG_LEVEL", "REIS_PROGRESS"):
        monkeypatch.delenv(name, raising=False)
    s = load_settings()
    assert (s.workers, s.cap_binary, s.cap_ternary, s.naive_cap) == (1, 28, 16, 14)
    assert s.log_level == "WARNING" and s.progress is False
    assert s.cap_for(2) == 28 and s.cap_for(3) == 16


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("REIS_WORKERS", "4")
    monkeypatch.setenv("REIS_LOG_LEVEL", "debug")
    monkeypatch.setenv("REIS_PROGRESS", "1")
    s = load_settings()
    assert s.workers == 4 and s.log_level == "DEBUG" and s.progress is True


@pytest.mark.parametrize("name,value", [
    ("REIS_WORKERS", "0"),
    ("REIS_CAP_BINARY", "20"),
    ("REIS_LOG_LEVEL", "LOUD"),
    ("REIS_NAIVE_CAP", "many"),
])
def test_invalid_env(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError) as e:
        load_settings()
    assert e.value.code == "REFUSE.CONFIG"
