"""Conversions among rankings, preference maps and Cook-Seiford vectors."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from typing import Dict, List, Literal, NamedTuple, Tuple, Union

from .core import dominance_profiles
from .models import CookSeifordVector, Position, PreferenceMap, Ranking, ValidationReport
from .validate import validate_cs, validate_pm

LOGGER = logging.getLogger(__name__)

Representation = Union[Ranking, PreferenceMap, CookSeifordVector]
Target = Literal["ranking", "pm", "cs"]


class InvalidRepresentationError(ValueError):
    """Raised when a conversion receives a preference map or vector that fails validation."""

    def __init__(self, kind: str, report: ValidationReport) -> None:
        codes = ", ".join(code.value for code in report.codes())
        super().__init__(f"invalid {kind}: {codes}")
        self.kind = kind
        self.report = report


class BlockBounds(NamedTuple):
    """One row of the C-S to PM decomposition: centre, tie size, first and last position."""

    centre: Position
    tie_size: int
    first: int
    last: int


def ensure_valid_pm(pm: PreferenceMap) -> PreferenceMap:
    report = validate_pm(pm)
    if not report.valid:
        raise InvalidRepresentationError("pm", report)
    return pm


def ensure_valid_cs(cs: CookSeifordVector) -> CookSeifordVector:
    report = validate_cs(cs)
    if not report.valid:
        raise InvalidRepresentationError("cs", report)
    return cs


def ranking_to_pm(r: Ranking) -> PreferenceMap:
    entries = [tuple(profile.block) for profile in dominance_profiles(r)]
    return PreferenceMap(labels=r.labels, entries=entries)


def pm_to_cs(pm: PreferenceMap) -> CookSeifordVector:
    """Each alternative sits at the midpoint of its block of possible positions."""

    ensure_valid_pm(pm)
    values = [Position.midpoint(min(entry), max(entry)) for entry in pm.entries]
    return CookSeifordVector(labels=pm.labels, values=values)


def pm_centres(pm: PreferenceMap) -> List[Position]:
    """Mean position ``sum(PM_i) / |PM_i|`` of every entry, computed without division."""

    ensure_valid_pm(pm)
    centres = []
    for entry in pm.entries:
        doubled, remainder = divmod(2 * sum(entry), len(entry))
        if remainder:
            raise ArithmeticError(f"entry {entry} has no half-integer mean")
        centres.append(Position(doubled=doubled))
    return centres


def block_bounds(cs: CookSeifordVector) -> List[BlockBounds]:
    """Centre, tie size and block bounds of every alternative of a valid vector.

    Tie sizes come from a single tally of equal values, which gives the same
    counts as comparing every pair of entries.
    """

    ensure_valid_cs(cs)
    tally = Counter(cs.values)
    rows = []
    for value in cs.values:
        size = tally[value]
        first = (value.doubled - (size - 1)) // 2
        rows.append(BlockBounds(centre=value, tie_size=size, first=first, last=first + size - 1))
    return rows


def cs_to_pm(cs: CookSeifordVector) -> PreferenceMap:
    entries = [tuple(range(row.first, row.last + 1)) for row in block_bounds(cs)]
    return PreferenceMap(labels=cs.labels, entries=entries)


def pm_to_ranking(pm: PreferenceMap) -> Ranking:
    """Alternatives sharing an entry form one tie-group; groups are ordered by their first position."""

    ensure_valid_pm(pm)
    members: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
    for index, entry in enumerate(pm.entries):
        members[entry].append(index)
    groups = [members[entry] for entry in sorted(members, key=min)]
    return Ranking(labels=pm.labels, groups=groups)


def ranking_to_cs(r: Ranking) -> CookSeifordVector:
    values = [profile.centre for profile in dominance_profiles(r)]
    return CookSeifordVector(labels=r.labels, values=values)


def cs_to_ranking(cs: CookSeifordVector) -> Ranking:
    return pm_to_ranking(cs_to_pm(cs))


def convert_to(obj: Representation, target: Target) -> Representation:
    """Convert any representation to ``target``; same-kind requests return the canonical form."""

    if isinstance(obj, Ranking):
        ranking = obj
    elif isinstance(obj, PreferenceMap):
        if target == "pm":
            return ensure_valid_pm(obj)
        if target == "cs":
            return pm_to_cs(obj)
        ranking = pm_to_ranking(obj)
    elif isinstance(obj, CookSeifordVector):
        if target == "cs":
            return ensure_valid_cs(obj)
        if target == "pm":
            return cs_to_pm(obj)
        ranking = cs_to_ranking(obj)
    else:
        raise TypeError(f"cannot convert {type(obj).__name__}")

    LOGGER.debug("Converting ranking with %d groups to %s", len(ranking.groups), target)
    if target == "ranking":
        return ranking
    if target == "pm":
        return ranking_to_pm(ranking)
    if target == "cs":
        return ranking_to_cs(ranking)
    raise ValueError(f"unknown target {target!r}")


__all__ = [
    "BlockBounds",
    "InvalidRepresentationError",
    "Representation",
    "Target",
    "block_bounds",
    "convert_to",
    "cs_to_pm",
    "cs_to_ranking",
    "ensure_valid_cs",
    "ensure_valid_pm",
    "pm_centres",
    "pm_to_cs",
    "pm_to_ranking",
    "ranking_to_cs",
    "ranking_to_pm",
]
