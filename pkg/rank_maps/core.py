"""Structural queries on a ranking: dominated sets, indifference sets and tie-groups."""

from __future__ import annotations

from typing import FrozenSet, List

from .models import DominanceProfile, Position, Ranking


class AlternativeIndexError(IndexError):
    """Raised when an alternative index is outside the roster."""


def _check_index(r: Ranking, i: int) -> None:
    if not 0 <= i < r.n:
        raise AlternativeIndexError(f"alternative index {i} outside roster of size {r.n}")


def dominated_set(r: Ranking, i: int) -> FrozenSet[int]:
    """Alternatives strictly preferred to alternative ``i``."""

    _check_index(r, i)
    position = r.group_of(i)
    return frozenset(index for group in r.groups[:position] for index in group)


def indifference_set(r: Ranking, i: int) -> FrozenSet[int]:
    """Alternatives tied with alternative ``i``, ``i`` included."""

    _check_index(r, i)
    return frozenset(r.groups[r.group_of(i)])


def dominance_profile(r: Ranking, i: int) -> DominanceProfile:
    _check_index(r, i)
    position = r.group_of(i)
    predecessors = sum(len(group) for group in r.groups[:position])
    return DominanceProfile(predecessors=predecessors, tie_size=len(r.groups[position]), n=r.n)


def dominance_profiles(r: Ranking) -> List[DominanceProfile]:
    """Profiles for every alternative in roster order, in a single pass over the groups."""

    profiles: List[DominanceProfile] = [None] * r.n  # type: ignore[list-item]
    predecessors = 0
    for group in r.groups:
        profile = DominanceProfile(predecessors=predecessors, tie_size=len(group), n=r.n)
        for index in group:
            profiles[index] = profile
        predecessors += len(group)
    return profiles


def group_count(r: Ranking) -> int:
    return len(r.groups)


def is_linear(r: Ranking) -> bool:
    return group_count(r) == r.n


def precedes(r: Ranking, i: int, j: int) -> bool:
    """True when alternative ``i`` is strictly preferred to alternative ``j``."""

    _check_index(r, i)
    _check_index(r, j)
    return r.group_of(i) < r.group_of(j)


def indifferent(r: Ranking, i: int, j: int) -> bool:
    _check_index(r, i)
    _check_index(r, j)
    return r.group_of(i) == r.group_of(j)


def position_sum(n: int) -> Position:
    """The fixed total n(n+1)/2 shared by every position vector of size ``n``."""

    return Position(doubled=n * (n + 1))


__all__ = [
    "AlternativeIndexError",
    "dominance_profile",
    "dominance_profiles",
    "dominated_set",
    "group_count",
    "indifference_set",
    "indifferent",
    "is_linear",
    "position_sum",
    "precedes",
]
