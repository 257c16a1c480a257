# -*- coding: utf-8 -*-
"""
Złote tabele (fixture'y) w formacie tekstowym:

    n=<n> alphabet=<a>
    # komentarze (pochodzenie, poprawki)
    # printed row <i>: <symbole>     ← wiersz w postaci pierwotnej, jeśli poprawiony
    s s s ... s                     ← jeden wiersz = jedna konfiguracja

Porównania zawsze jako zbiory postaci kanonicznych, nigdy jako listy wierszy.
"""
from __future__ import annotations

import functools
import re
from importlib import resources
from typing import Dict, List, Set

from pydantic import BaseModel

from reiscount.core.errors import DomainError
from reiscount.oracle.words import CyclicWord, DihedralClass, canonical_form

FIXTURE_FILES: Dict[int, str] = {
    1: "rotsym_isolated_n24.txt",
    2: "rotsym_ternary_n12.txt",
}

_HEADER_RE = re.compile(r"^n=(\d+)\s+alphabet=(\d+)$")
_PRINTED_RE = re.compile(r"^#\s*printed row (\d+):\s*(.+)$")


class Fixture(BaseModel):
    which: int
    n: int
    alphabet: int
    rows: List[CyclicWord]
    printed_rows: Dict[int, CyclicWord] = {}
    comments: List[str] = []

    def classes(self) -> Set[DihedralClass]:
        return {canonical_form(w) for w in self.rows}


def parse_fixture(text: str, which: int = 0) -> Fixture:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty fixture")
    header = _HEADER_RE.match(lines[0])
    if not header:
        raise DomainError(f"bad fixture header: {lines[0]!r}")
    n, alphabet = int(header.group(1)), int(header.group(2))
    rows: List[CyclicWord] = []
    printed: Dict[int, CyclicWord] = {}
    comments: List[str] = []
    for ln in lines[1:]:
        if ln.startswith("#"):
            comments.append(ln.lstrip("# ").rstrip())
            m = _PRINTED_RE.match(ln)
            if m:
                printed[int(m.group(1))] = CyclicWord.parse(m.group(2), alphabet)
            continue
        word = CyclicWord.parse(ln, alphabet)
        if word.n != n:
            raise DomainError(f"fixture row {len(rows) + 1} has length {word.n}, expected {n}")
        rows.append(word)
    return Fixture(which=which, n=n, alphabet=alphabet, rows=rows, printed_rows=printed, comments=comments)


@functools.lru_cache(maxsize=None)
def load_fixture(which: int) -> Fixture:
    name = FIXTURE_FILES.get(which)
    if name is None:
        raise DomainError(f"unknown table: {which} (known: {sorted(FIXTURE_FILES)})")
    text = resources.files("reiscount.oracle").joinpath("data", name).read_text(encoding="utf-8")
    return parse_fixture(text, which)


def table_fixture(which: int) -> Set[DihedralClass]:
    return load_fixture(which).classes()
