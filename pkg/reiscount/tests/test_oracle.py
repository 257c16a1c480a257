# -*- coding: utf-8 -*-
from collections import Counter

import pytest

from reiscount.core.errors import CapExceededError, DomainError
from reiscount.counting.dispatch import formula_count
from reiscount.oracle import engines
from reiscount.oracle.classes import axis_breakdown, class_histogram, count_classes, enumerate_classes
from reiscount.oracle.engines import class_records, necklaces
from reiscount.oracle.query import Query
from reiscount.utils import config


def test_necklaces_binary_4():
    assert [w.hex() for w in necklaces(4, 2)] == [
        "00000000", "00000001", "00000101", "00010001", "00010101", "01010101",
    ]


def test_all_classes_n6():
    # 13 bransoletek długości 6 bez słowa zerowego, jedna z nich chiralna
    assert len(class_records(6, 2)) == 12
    assert count_classes(Query(n=6, require_reflective=True)) == 11


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("m", [0, 1, 2])
def test_engines_agree(n, m):
    naive = class_records(n, 2, m, False, "naive")
    assert class_records(n, 2, m, False, "necklace") == naive
    assert class_records(n, 2, m, True, "periodic") == class_records(n, 2, m, True, "naive")


def test_engines_agree_ternary():
    for n in range(2, 8):
        for m in (0, 1):
            assert class_records(n, 3, m, False, "necklace") == class_records(n, 3, m, False, "naive")
            assert class_records(n, 3, m, True, "periodic") == class_records(n, 3, m, True, "naive")


def test_isolated_ones_n24_oracle():
    base = dict(n=24, min_gap=1, require_rotsym=True)
    assert count_classes(Query(**base)) == 30
    assert count_classes(Query(**base, require_reflective=True)) == 25
    assert count_classes(Query(**base, k=6)) == 9
    assert count_classes(Query(**base, k=6, require_reflective=True)) == 6
    assert count_classes(Query(**base, k=8)) == 8
    assert count_classes(Query(**base, k=8, require_reflective=True)) == 6


def test_table1_shape():
    q = Query(n=24, min_gap=1, require_rotsym=True)
    found = enumerate_classes(q)
    assert [c.sort_key() for c in found] == sorted(c.sort_key() for c in found)
    assert dict(Counter(c.k for c in found)) == {2: 1, 3: 1, 4: 5, 6: 9, 8: 8, 9: 2, 10: 3, 12: 1}
    hist = axis_breakdown(q)
    assert hist["no-axis"] == 5
    assert hist["gap-gap-only"] == 4
    assert hist["point:0-1"] == 3
    assert hist["no-axis"] + hist["gap-gap-only"] + hist["point-axis"] == 30
    assert count_classes(Query(n=24, min_gap=1, require_rotsym=True, axis_filter="point:0-1")) == 3
    assert count_classes(Query(n=24, min_gap=1, require_rotsym=True, axis_filter="no-axis")) == 5


def test_ternary_ground_truth():
    q = Query(n=12, alphabet=3, min_gap=1, require_rotsym=True)
    assert count_classes(q) == 15
    assert count_classes(q.model_copy(update={"require_reflective": True})) == 14


@pytest.mark.parametrize("query,expected", [
    (Query(n=4, require_rotsym=True), 2),
    (Query(n=4, require_rotsym=True, require_reflective=True), 2),
    (Query(n=6, require_rotsym=True), 4),
    (Query(n=6, require_rotsym=True, require_reflective=True), 4),
    (Query(n=12, require_rotsym=True), 15),
    (Query(n=6, min_gap=1, require_rotsym=True), 2),
    (Query(n=6, min_gap=1, require_rotsym=True, require_reflective=True), 2),
    (Query(n=12, min_gap=1, require_rotsym=True), 5),
    (Query(n=12, min_gap=1, require_rotsym=True, require_reflective=True), 5),
])
def test_hand_values_both_paths(query, expected):
    assert formula_count(query).value == expected
    assert count_classes(query) == expected


def test_formula_grid_small():
    for n in range(1, 13):
        for m in range(0, 3):
            for rotsym in (True, False):
                for refl in (False, True):
                    for k in [None, *range(1, n + 1)]:
                        q = Query(n=n, min_gap=m, k=k, require_rotsym=rotsym, require_reflective=refl)
                        assert formula_count(q).value == count_classes(q), q.echo()


def _count_matches_enumeration(n, alphabet=2):
    for m in range(0, 3):
        for rotsym in (True, False):
            for refl in (False, True):
                q = Query(n=n, alphabet=alphabet, min_gap=m, require_rotsym=rotsym, require_reflective=refl)
                found = enumerate_classes(q)
                assert count_classes(q) == len(found), q.echo()
                per_k = Counter(c.k for c in found)
                for k in range(1, n + 1):
                    qk = q.model_copy(update={"k": k})
                    assert count_classes(qk) == per_k.get(k, 0), qk.echo()


@pytest.mark.parametrize("n", range(1, 15))
def test_count_matches_enumeration(n):
    _count_matches_enumeration(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(15, 21))
def test_count_matches_enumeration_large(n):
    _count_matches_enumeration(n)


def test_count_matches_enumeration_ternary():
    for n in range(1, 9):
        _count_matches_enumeration(n, alphabet=3)


def test_histogram_is_per_k_and_diameter():
    hist = class_histogram(6, 2)
    assert sum(hist.values()) == 12
    assert hist[(3, False)] == 1
    assert sum(c for (_, refl), c in hist.items() if refl) == 11


def test_caps_and_engine_choice():
    with pytest.raises(CapExceededError):
        count_classes(Query(n=29))
    with pytest.raises(CapExceededError):
        class_records(17, 3, 1, True)
    with pytest.raises(CapExceededError):
        class_records(15, 2, 0, False, "naive")
    with pytest.raises(DomainError):
        class_records(8, 2, 0, False, "periodic")
    with pytest.raises(DomainError):
        class_records(8, 2, 0, False, "bogus")


def test_worker_count_does_not_change_output(monkeypatch):
    single = class_records(12, 3, 1, True, "periodic")
    monkeypatch.setenv("REIS_WORKERS", "2")
    config.get_settings.cache_clear()
    engines.class_records.cache_clear()
    try:
        assert class_records(12, 3, 1, True, "periodic") == single
    finally:
        monkeypatch.delenv("REIS_WORKERS")
        config.get_settings.cache_clear()
        engines.class_records.cache_clear()
