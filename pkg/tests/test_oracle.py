from math import comb

import pytest

from rank_maps.models import Ranking
from rank_maps.oracle import (
    DEFAULT_MAX_N,
    BijectionReport,
    EnumerationRangeError,
    check_bijection,
    enumerate_weak_orders,
    law_failures,
    max_supported_n,
    ordered_bell,
)


def _fubini(n):
    counts = {0: 1}
    for size in range(1, n + 1):
        counts[size] = sum(comb(size, k) * counts[size - k] for k in range(1, size + 1))
    return counts[n]


@pytest.mark.parametrize("n, expected", ((1, 1), (2, 3), (3, 13), (4, 75), (5, 541)))
def test_enumeration_counts(n, expected):
    orders = list(enumerate_weak_orders(n))
    assert len(orders) == expected == _fubini(n)
    assert len(enumerate_weak_orders(n)) == expected


def test_ordered_bell_values():
    assert [ordered_bell(n) for n in range(9)] == [1, 1, 3, 13, 75, 541, 4683, 47293, 545835]
    assert ordered_bell(9) == 7087261


def test_two_alternatives_in_lexicographic_order():
    assert [r.groups for r in enumerate_weak_orders(2)] == [((0,), (1,)), ((0, 1),), ((1,), (0,))]


def test_enumeration_has_no_duplicates():
    groups = [r.groups for r in enumerate_weak_orders(4)]
    assert len(set(groups)) == len(groups)
    assert all(isinstance(r, Ranking) and r.n == 4 for r in enumerate_weak_orders(4))


def test_enumeration_labels():
    orders = list(enumerate_weak_orders(2, labels=("a", "b")))
    assert {r.labels for r in orders} == {("a", "b")}
    with pytest.raises(EnumerationRangeError):
        enumerate_weak_orders(2, labels=("a",))


@pytest.mark.parametrize("n", (1, 2, 3, 4, 5))
def test_check_bijection(n):
    report = check_bijection(n)
    total = ordered_bell(n)
    assert report.as_tuple() == (total, total, total, 0)
    assert report.ok


@pytest.mark.parametrize("n", (0, -3, DEFAULT_MAX_N + 1))
def test_guard_rejects_out_of_range(n):
    with pytest.raises(EnumerationRangeError):
        enumerate_weak_orders(n)
    with pytest.raises(EnumerationRangeError):
        check_bijection(n)


def test_allow_large_lifts_ceiling_only():
    assert len(enumerate_weak_orders(9, allow_large=True)) == 7087261
    with pytest.raises(EnumerationRangeError):
        enumerate_weak_orders(0, allow_large=True)


def test_ceiling_from_environment(monkeypatch):
    monkeypatch.setenv("RANK_MAPS_MAX_N", "3")
    assert max_supported_n() == 3
    assert len(list(enumerate_weak_orders(3))) == 13
    with pytest.raises(EnumerationRangeError, match="limit n=3"):
        enumerate_weak_orders(4)


def test_law_failures_empty_for_worked_ranking(worked_ranking):
    assert law_failures(worked_ranking) == []


def test_order_law_follows_strict_preference(worked_ranking, monkeypatch):
    monkeypatch.setattr("rank_maps.oracle.precedes", lambda r, i, j: False)
    assert law_failures(worked_ranking) == ["order-preserved"]


def test_enumerated_rankings_share_roster():
    assert next(enumerate_weak_orders(3, labels=("a", "b", "c"))) == Ranking.from_groups(
        [[0], [1], [2]], labels=("a", "b", "c")
    )


def test_report_flags_failures():
    assert not BijectionReport(n=2, total=3, pm_images_distinct=2, cs_images_distinct=3, roundtrip_failures=0).ok
    assert not BijectionReport(n=2, total=3, pm_images_distinct=3, cs_images_distinct=3, roundtrip_failures=1).ok
    dumped = BijectionReport(n=1, total=1, pm_images_distinct=1, cs_images_distinct=1, roundtrip_failures=0).model_dump()
    assert dumped["ok"] is True
