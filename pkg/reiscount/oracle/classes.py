# -*- coding: utf-8 -*-
from __future__ import annotations

import functools
from collections import Counter
from typing import Dict, Iterator, List, Tuple

from reiscount.oracle.engines import ClassRecord, class_records
from reiscount.oracle.query import AxisFilter, Query
from reiscount.oracle.words import CyclicWord, DihedralClass, SymmetryProfile, axes_of

BASE_AXIS_KEYS = ("no-axis", "gap-gap-only", "point-axis")


def record_profile(rec: ClassRecord) -> SymmetryProfile:
    n = len(rec.word)
    return SymmetryProfile(stabilizer_order=n // rec.period, minimal_period=rec.period, axes=axes_of(rec.word))


def _axis_matches(rec: ClassRecord, flt: AxisFilter) -> bool:
    profile = record_profile(rec)
    if flt.kind == "point-values":
        wanted = f"{flt.values[0]}-{flt.values[1]}"
        return any(a.kind == "point-point" and a.value_key == wanted for a in profile.axes)
    return profile.axis_class() == flt.kind


def matching_records(q: Query, *, engine: str = "auto") -> Iterator[ClassRecord]:
    for rec in class_records(q.n, q.alphabet, q.min_gap, q.require_rotsym, engine):
        if q.k is not None and rec.k != q.k:
            continue
        if q.require_reflective and not rec.reflective:
            continue
        if q.axis_filter is not None and not _axis_matches(rec, q.axis_filter):
            continue
        yield rec


def enumerate_classes(q: Query, *, engine: str = "auto") -> List[DihedralClass]:
    """Klasy spełniające zapytanie, posortowane po (k, postać kanoniczna)."""
    return [
        DihedralClass(canonical=CyclicWord.from_bytes(rec.word, q.alphabet))
        for rec in matching_records(q, engine=engine)
    ]


@functools.lru_cache(maxsize=64)
def class_histogram(n: int, alphabet: int, m: int = 0, rotsym_only: bool = False,
                    engine: str = "auto") -> Dict[Tuple[int, bool], int]:
    """Liczby klas wg (k, ma średnicę)."""
    return dict(Counter((rec.k, rec.reflective) for rec in class_records(n, alphabet, m, rotsym_only, engine)))


def count_classes(q: Query, *, engine: str = "auto") -> int:
    if q.axis_filter is not None:
        return sum(1 for _ in matching_records(q, engine=engine))
    hist = class_histogram(q.n, q.alphabet, q.min_gap, q.require_rotsym, engine)
    return sum(
        c for (k, refl), c in hist.items()
        if (q.k is None or k == q.k) and (refl or not q.require_reflective)
    )


def axis_breakdown(q: Query, *, engine: str = "auto") -> Dict[str, int]:
    """
    Histogram klas wg osi. Klucze główne (rozłączne): no-axis, gap-gap-only,
    point-axis. Podklucze (mogą się nakładać): point:a-b dla osi punkt–punkt,
    point:v-gap dla osi punkt–przerwa (n nieparzyste).
    """
    hist: Dict[str, int] = {key: 0 for key in BASE_AXIS_KEYS}
    for rec in matching_records(q.without_axis(), engine=engine):
        profile = record_profile(rec)
        hist[profile.axis_class()] += 1
        for key in profile.point_value_keys():
            label = f"point:{key}"
            hist[label] = hist.get(label, 0) + 1
    return dict(sorted(hist.items(), key=lambda kv: (kv[0] not in BASE_AXIS_KEYS, kv[0])))
