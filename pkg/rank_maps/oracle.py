"""Exhaustive enumeration of weak orders and the round-trip laws checked over them."""

from __future__ import annotations

import logging
import os
from itertools import chain, combinations
from math import comb
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, computed_field

from .convert import cs_to_pm, cs_to_ranking, pm_centres, pm_to_cs, pm_to_ranking, ranking_to_cs, ranking_to_pm
from .core import dominance_profiles, position_sum, precedes
from .models import Position, Ranking, default_labels
from .validate import validate_cs, validate_pm

LOGGER = logging.getLogger(__name__)
DEFAULT_MAX_N = 8


class EnumerationRangeError(ValueError):
    """Raised when the requested roster size is outside the enumeration guard."""


class BijectionReport(BaseModel):
    """Outcome of checking every law over all weak orders on ``n`` alternatives."""

    model_config = ConfigDict(frozen=True)

    n: int
    total: int
    pm_images_distinct: int
    cs_images_distinct: int
    roundtrip_failures: int

    @computed_field  # type: ignore[misc]
    @property
    def ok(self) -> bool:
        return (
            self.pm_images_distinct == self.total
            and self.cs_images_distinct == self.total
            and self.roundtrip_failures == 0
        )

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.total, self.pm_images_distinct, self.cs_images_distinct, self.roundtrip_failures)


def ordered_bell(n: int) -> int:
    """Number of weak orders on ``n`` alternatives."""

    counts = [1]
    for size in range(1, n + 1):
        counts.append(sum(comb(size, top) * counts[size - top] for top in range(1, size + 1)))
    return counts[n]


def max_supported_n() -> int:
    return int(os.getenv("RANK_MAPS_MAX_N", DEFAULT_MAX_N))


def _check_range(n: int, allow_large: bool) -> None:
    if n < 1:
        raise EnumerationRangeError(f"n must be at least 1, got {n}")
    ceiling = max_supported_n()
    if n > ceiling and not allow_large:
        raise EnumerationRangeError(
            f"n={n} exceeds the enumeration limit n={ceiling}; allow large enumerations explicitly to go further"
        )


def _top_groups(remaining: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    sizes = range(1, len(remaining) + 1)
    return sorted(chain.from_iterable(combinations(remaining, size) for size in sizes))


def _ordered_partitions(remaining: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    if not remaining:
        yield []
        return
    for top in _top_groups(remaining):
        rest = tuple(index for index in remaining if index not in top)
        for tail in _ordered_partitions(rest):
            yield [top, *tail]


class WeakOrderIterator:
    """Yields every ranking on ``n`` alternatives once, ordered lexicographically by groups."""

    def __init__(self, n: int, labels: Optional[Sequence[str]] = None) -> None:
        self.n = n
        self.labels = tuple(labels) if labels is not None else default_labels(n)
        if len(self.labels) != n:
            raise EnumerationRangeError(f"{len(self.labels)} labels for n={n}")
        self._cursor = _ordered_partitions(tuple(range(n)))

    def __iter__(self) -> "WeakOrderIterator":
        return self

    def __next__(self) -> Ranking:
        return Ranking.from_groups(next(self._cursor), labels=self.labels)

    def __len__(self) -> int:
        return ordered_bell(self.n)


def enumerate_weak_orders(
    n: int,
    allow_large: bool = False,
    labels: Optional[Sequence[str]] = None,
) -> WeakOrderIterator:
    _check_range(n, allow_large)
    return WeakOrderIterator(n, labels)


def law_failures(r: Ranking) -> List[str]:
    """Names of the conversion laws that ``r`` violates (empty when all hold)."""

    failures: List[str] = []
    pm = ranking_to_pm(r)
    cs = ranking_to_cs(r)
    if not validate_pm(pm).valid:
        failures.append("pm-valid")
    if not validate_cs(cs).valid:
        failures.append("cs-valid")
    if failures:
        return failures

    if cs_to_pm(pm_to_cs(pm)) != pm:
        failures.append("pm-roundtrip")
    if pm_to_cs(cs_to_pm(cs)) != cs:
        failures.append("cs-roundtrip")
    if pm_to_ranking(pm) != r:
        failures.append("ranking-via-pm")
    if cs_to_ranking(cs) != r:
        failures.append("ranking-via-cs")

    target = position_sum(r.n)
    centres = pm_centres(pm)
    if cs.total() != target or sum(centres, Position(doubled=0)) != target:
        failures.append("sum-law")
    if list(cs.values) != centres:
        failures.append("mean-equals-centre")
    profile_total = sum((profile.centre for profile in dominance_profiles(r)), Position(doubled=0))
    if profile_total != target:
        failures.append("ranking-sum-law")

    for i in range(r.n):
        for j in range(r.n):
            strictly = precedes(r, i, j)
            by_value = cs.values[i] < cs.values[j]
            by_block = max(pm.entries[i]) < min(pm.entries[j])
            if not strictly == by_value == by_block:
                failures.append("order-preserved")
                return failures
    return failures


def check_bijection(n: int, allow_large: bool = False) -> BijectionReport:
    """Check every law over all weak orders on ``n`` alternatives and count distinct images."""

    orders = enumerate_weak_orders(n, allow_large)
    LOGGER.info("Enumerating %d weak orders on %d alternatives", len(orders), n)
    seen: Set[Tuple[Tuple[int, ...], ...]] = set()
    pm_images: Set[Tuple[Tuple[int, ...], ...]] = set()
    cs_images: Set[Tuple[Position, ...]] = set()
    total = 0
    failures = 0
    for r in orders:
        total += 1
        if r.groups in seen:
            LOGGER.error("Ranking %s enumerated twice", r.groups)
            failures += 1
        seen.add(r.groups)
        broken = law_failures(r)
        if broken:
            LOGGER.warning("Ranking %s breaks %s", r.groups, ", ".join(broken))
            failures += len(broken)
        pm_images.add(ranking_to_pm(r).entries)
        cs_images.add(ranking_to_cs(r).values)

    report = BijectionReport(
        n=n,
        total=total,
        pm_images_distinct=len(pm_images),
        cs_images_distinct=len(cs_images),
        roundtrip_failures=failures,
    )
    LOGGER.info("Checked n=%d: %s", n, report.as_tuple())
    return report


__all__ = [
    "BijectionReport",
    "DEFAULT_MAX_N",
    "EnumerationRangeError",
    "WeakOrderIterator",
    "check_bijection",
    "enumerate_weak_orders",
    "law_failures",
    "max_supported_n",
    "ordered_bell",
]
