"""Validators for untrusted preference maps and Cook-Seiford vectors."""

from __future__ import annotations

import logging
from collections import defaultdict
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .models import (
    CookSeifordVector,
    HalfIntegerError,
    Position,
    PositionLike,
    PreferenceMap,
    Ranking,
    ValidationReport,
    Violation,
    ViolationCode,
)

LOGGER = logging.getLogger(__name__)
MAX_VIOLATIONS = 64


class _ViolationLog:
    """Collects violations in check order, capped at MAX_VIOLATIONS."""

    def __init__(self) -> None:
        self.violations: List[Violation] = []
        self.dropped = 0

    def add(self, code: ViolationCode, indices: Iterable[int], message: str) -> None:
        if len(self.violations) >= MAX_VIOLATIONS:
            self.dropped += 1
            return
        self.violations.append(Violation(code=code, indices=tuple(sorted(indices)), message=message))

    def report(self) -> ValidationReport:
        if self.dropped:
            LOGGER.debug("Dropped %d violations beyond the cap of %d", self.dropped, MAX_VIOLATIONS)
        return ValidationReport(violations=tuple(self.violations))


def _format_positions(positions: Iterable[int]) -> str:
    return ", ".join(str(position) for position in positions)


def _check_size(log: _ViolationLog, n: int, labels: Optional[Sequence[str]], noun: str) -> bool:
    if n == 0:
        log.add(ViolationCode.SIZE_MISMATCH, (), f"empty {noun}: at least one alternative is required")
        return False
    if labels is not None and len(labels) != n:
        log.add(ViolationCode.SIZE_MISMATCH, (), f"{len(labels)} labels for {n} alternatives")
    return True


def validate_pm(
    candidate: Union[PreferenceMap, Sequence[Iterable[int]]],
    labels: Optional[Sequence[str]] = None,
) -> ValidationReport:
    """Decide whether ``candidate`` is the preference map of some weak order.

    Every entry must be a non-empty run of consecutive positions in ``1..n``, two entries
    are either equal or disjoint, an entry shared by ``k`` alternatives has exactly ``k``
    positions, and together the distinct entries cover ``1..n``.
    """

    if isinstance(candidate, PreferenceMap):
        labels = candidate.labels if labels is None else labels
        candidate = candidate.entries
    entries: List[FrozenSet[int]] = [frozenset(entry) for entry in candidate]
    n = len(entries)
    log = _ViolationLog()
    if not _check_size(log, n, labels, "preference map"):
        return log.report()

    flagged: Set[int] = set()
    for i, entry in enumerate(entries):
        if not entry:
            log.add(ViolationCode.PM_EMPTY_ENTRY, (i,), f"entry {i} is empty")
            flagged.add(i)
            continue
        outside = sorted(value for value in entry if not 1 <= value <= n)
        if outside:
            log.add(
                ViolationCode.PM_OUT_OF_RANGE,
                (i,),
                f"entry {i} holds positions {_format_positions(outside)} outside 1..{n}",
            )
            flagged.add(i)
        if max(entry) - min(entry) + 1 != len(entry):
            # gaps beyond 1..n are already reported as out of range
            span = range(max(1, min(entry)), min(n, max(entry)) + 1)
            missing = [position for position in span if position not in entry]
            detail = "is not a run of consecutive positions"
            if missing:
                detail = f"skips positions {_format_positions(missing)}"
            log.add(ViolationCode.PM_NOT_CONSECUTIVE, (i,), f"entry {i} {detail}")
            flagged.add(i)

    owners: Dict[FrozenSet[int], List[int]] = defaultdict(list)
    for i, entry in enumerate(entries):
        if entry:
            owners[entry].append(i)
    distinct = list(owners)
    overlaps: List[Tuple[int, int]] = []
    for first_pos, first in enumerate(distinct):
        for second in distinct[first_pos + 1:]:
            if first & second:
                overlaps.extend(
                    tuple(sorted(pair)) for pair in product(owners[first], owners[second])
                )
    for i, j in sorted(overlaps):
        shared = sorted(entries[i] & entries[j])
        log.add(
            ViolationCode.PM_OVERLAP_NOT_EQUAL,
            (i, j),
            f"entries {i} and {j} share positions {_format_positions(shared)} but differ",
        )
        flagged.update((i, j))

    for entry, members in owners.items():
        if flagged.intersection(members):
            continue
        if len(members) != len(entry):
            log.add(
                ViolationCode.PM_MULTIPLICITY_MISMATCH,
                members,
                f"block {{{_format_positions(sorted(entry))}}} is held by {len(members)} "
                f"alternatives but has {len(entry)} positions",
            )

    covered = set().union(*entries)
    uncovered = sorted(set(range(1, n + 1)) - covered)
    if uncovered:
        log.add(
            ViolationCode.PM_NOT_PARTITION,
            (),
            f"positions {_format_positions(uncovered)} belong to no entry",
        )
    return log.report()


def _parse_values(log: _ViolationLog, values: Sequence[PositionLike], n: int) -> Dict[int, Position]:
    positions: Dict[int, Position] = {}
    for i, raw in enumerate(values):
        try:
            position = Position.of(raw)
        except (HalfIntegerError, ValueError, TypeError):
            log.add(ViolationCode.CS_NOT_HALF_INTEGER, (i,), f"value {raw!s} at {i} is not an exact half-integer")
            continue
        if not 2 <= position.doubled <= 2 * n:
            log.add(ViolationCode.CS_OUT_OF_RANGE, (i,), f"value {position} at {i} is outside 1..{n}")
            continue
        positions[i] = position
    return positions


def validate_cs(
    candidate: Union[CookSeifordVector, Sequence[PositionLike]],
    labels: Optional[Sequence[str]] = None,
) -> ValidationReport:
    """Decide whether ``candidate`` is the Cook-Seiford vector of some weak order.

    Grouping equal values, a group of ``d`` alternatives at value ``v`` claims the
    positions ``v - (d-1)/2 .. v + (d-1)/2``; these bounds must be integers and the
    claimed blocks must tile ``1..n`` exactly.
    """

    if isinstance(candidate, CookSeifordVector):
        labels = candidate.labels if labels is None else labels
        candidate = candidate.values
    values = list(candidate)
    n = len(values)
    log = _ViolationLog()
    if not _check_size(log, n, labels, "Cook-Seiford vector"):
        return log.report()

    positions = _parse_values(log, values, n)
    groups: Dict[Position, List[int]] = defaultdict(list)
    for i, position in positions.items():
        groups[position].append(i)

    misaligned: List[int] = []
    blocks: List[Tuple[int, int, List[int]]] = []
    for value in sorted(groups):
        members = groups[value]
        size = len(members)
        low, high = value.doubled - (size - 1), value.doubled + (size - 1)
        if low % 2 or low < 2:
            log.add(
                ViolationCode.CS_GROUP_ALIGNMENT,
                members,
                f"value {value} shared by {size} alternatives starts its block at "
                f"{Position(doubled=low)}, not a positive integer",
            )
            misaligned.extend(members)
            continue
        blocks.append((low // 2, high // 2, members))

    if len(positions) != n:
        # the tiling is undecidable while some values are unusable
        return log.report()

    cover = [0] * (n + 2)
    offending: Set[int] = set(misaligned)
    for low, high, members in blocks:
        if high > n:
            offending.update(members)
        for position in range(low, min(high, n) + 1):
            cover[position] += 1
    for low, high, members in blocks:
        if any(cover[position] > 1 for position in range(low, min(high, n) + 1)):
            offending.update(members)
    uncovered = [position for position in range(1, n + 1) if cover[position] == 0]
    claimed_twice = [position for position in range(1, n + 1) if cover[position] > 1]
    if offending or uncovered or claimed_twice:
        details = []
        if uncovered:
            details.append(f"uncovered positions {_format_positions(uncovered)}")
        if claimed_twice:
            details.append(f"positions claimed twice {_format_positions(claimed_twice)}")
        if any(high > n for _, high, _ in blocks):
            details.append(f"blocks reaching past {n}")
        log.add(
            ViolationCode.CS_INTERVALS_DONT_TILE,
            offending,
            "blocks do not tile 1..{}: {}".format(n, "; ".join(details) or "misaligned blocks"),
        )
    return log.report()


def validate_ranking(r: Ranking) -> ValidationReport:
    """Constructed rankings already satisfy every invariant."""

    return ValidationReport()


__all__ = [
    "MAX_VIOLATIONS",
    "ViolationCode",
    "validate_cs",
    "validate_pm",
    "validate_ranking",
]
