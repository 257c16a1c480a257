# -*- coding: utf-8 -*-
"""
Silniki wyroczni: wszystkie klasy diedralne (bez słowa zerowego) o danym n,
alfabecie i minimalnej przerwie.

  naive    – kanonizacja wszystkich alphabet^n słów (tylko do sprawdzeń, n ≤ REIS_NAIVE_CAP),
  periodic – słowa o okresie n/p dla liczb pierwszych p | n (klasy symetryczne obrotowo),
  necklace – naszyjniki generowane algorytmem Duvala, z testem bransoletki.

Wynik każdego silnika to krotka ClassRecord posortowana po (k, słowo), więc
liczba procesów nie wpływa na wynik.
"""
from __future__ import annotations

import functools
import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, List, Literal, NamedTuple, Set, Tuple

from loguru import logger

from reiscount.core.errors import CapExceededError, DomainError
from reiscount.core.numtheory import primes_dividing
from reiscount.oracle.words import canonical_bytes, is_reflective, least_rotation, min_gap, minimal_period, weight
from reiscount.utils.config import get_settings

EngineName = Literal["auto", "naive", "periodic", "necklace"]
ENGINES = ("auto", "naive", "periodic", "necklace")


class ClassRecord(NamedTuple):
    word: bytes        # postać kanoniczna
    k: int             # liczba niezerowych symboli
    gap: int           # minimalna przerwa (n − 1 dla pojedynczego symbolu)
    period: int        # okres minimalny; period < n ⇔ symetria obrotowa
    reflective: bool   # ma średnicę symetrii

    @property
    def rotsym(self) -> bool:
        return self.period < len(self.word)


def _record(word: bytes) -> ClassRecord:
    return ClassRecord(word, weight(word), min_gap(word), minimal_period(word), is_reflective(word))


def _admissible(word: bytes, m: int) -> bool:
    return any(word) and (m == 0 or min_gap(word) >= m)


# ---------------------------------------------------------------------------
# Generatory
# ---------------------------------------------------------------------------

def _naive_classes(n: int, alphabet: int, m: int) -> Set[bytes]:
    seen: Set[bytes] = set()
    for t in itertools.product(range(alphabet), repeat=n):
        w = bytes(t)
        if _admissible(w, m):
            seen.add(canonical_bytes(w))
    return seen


def _periodic_chunk(n: int, alphabet: int, m: int, length: int, first: int) -> Set[bytes]:
    """Ziarna długości `length` o pierwszym symbolu `first`, powtórzone n/length razy."""
    reps = n // length
    seen: Set[bytes] = set()
    for tail in itertools.product(range(alphabet), repeat=length - 1):
        w = bytes((first, *tail)) * reps
        if _admissible(w, m):
            seen.add(canonical_bytes(w))
    return seen


def _periodic_classes(n: int, alphabet: int, m: int, workers: int) -> Set[bytes]:
    tasks = [(n, alphabet, m, n // p, first) for p in primes_dividing(n) for first in range(alphabet)]
    seen: Set[bytes] = set()
    if workers > 1 and len(tasks) > 1:
        logger.debug(f"[ORACLE] periodic n={n} a={alphabet} m={m}: {len(tasks)} tasks on {min(workers, len(tasks))} workers")
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            for part in pool.map(_periodic_chunk, *zip(*tasks)):
                seen |= part
    else:
        for task in tasks:
            seen |= _periodic_chunk(*task)
    return seen


def necklaces(n: int, alphabet: int) -> Iterator[bytes]:
    """Najmniejsze rotacje (naszyjniki) długości n w porządku leksykograficznym."""
    w = [-1]
    while w:
        w[-1] += 1
        size = len(w)
        if n % size == 0:
            yield bytes(w * (n // size))
        while len(w) < n:
            w.append(w[-size])
        while w and w[-1] == alphabet - 1:
            w.pop()


def _necklace_classes(n: int, alphabet: int, m: int) -> Iterable[bytes]:
    for w in necklaces(n, alphabet):
        if not _admissible(w, m):
            continue
        # w jest najmniejszą rotacją; bransoletkę bierzemy raz, gdy w ≤ odbicie
        if w <= least_rotation(w[::-1]):
            yield w


# ---------------------------------------------------------------------------
# API
# ---------------------------------------------------------------------------

def check_cap(n: int, alphabet: int) -> None:
    cap = get_settings().cap_for(alphabet)
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap} for alphabet {alphabet}")


def resolve_engine(engine: str, rotsym_only: bool) -> str:
    if engine not in ENGINES:
        raise DomainError(f"unknown engine: {engine!r}")
    if engine == "auto":
        return "periodic" if rotsym_only else "necklace"
    if engine == "periodic" and not rotsym_only:
        raise DomainError("periodic engine enumerates rotation-symmetric classes only")
    return engine


@functools.lru_cache(maxsize=16)
def class_records(n: int, alphabet: int, m: int = 0, rotsym_only: bool = False,
                  engine: str = "auto") -> Tuple[ClassRecord, ...]:
    """Wszystkie niezerowe klasy z przerwą ≥ m (opcjonalnie tylko symetryczne obrotowo)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    check_cap(n, alphabet)
    settings = get_settings()
    chosen = resolve_engine(engine, rotsym_only)

    if chosen == "naive":
        if n > settings.naive_cap:
            raise CapExceededError(f"naive engine is limited to n <= {settings.naive_cap}, got n={n}")
        words: Iterable[bytes] = _naive_classes(n, alphabet, m)
    elif chosen == "periodic":
        words = _periodic_classes(n, alphabet, m, settings.workers)
    else:
        words = _necklace_classes(n, alphabet, m)

    records: List[ClassRecord] = [_record(w) for w in words]
    if rotsym_only:
        records = [r for r in records if r.rotsym]
    records.sort(key=lambda r: (r.k, r.word))
    logger.debug(f"[ORACLE] {chosen} n={n} a={alphabet} m={m} rotsym={rotsym_only}: {len(records)} classes")
    return tuple(records)
