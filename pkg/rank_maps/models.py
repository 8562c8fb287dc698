"""Pydantic data models for the three representations of a weak order."""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Any, FrozenSet, Iterator, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, computed_field, field_validator, model_validator

LABEL_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
# integers and .5 decimals only; "2.50", "5/2" and "+2.5" are rejected
DECIMAL_PATTERN = re.compile(r"-?[0-9]+(?:\.5)?")

PositionLike = Union["Position", int, Fraction, str]


class HalfIntegerError(ValueError):
    """Raised when a value is not an exact half-integer."""


def default_labels(n: int) -> Tuple[str, ...]:
    """Return the positional roster ``x1 .. xn``."""

    return tuple(f"x{index}" for index in range(1, n + 1))


def _check_labels(labels: Tuple[str, ...]) -> None:
    seen = set()
    for label in labels:
        if not LABEL_PATTERN.fullmatch(label):
            raise ValueError(f"label {label!r} is not an identifier")
        if label in seen:
            raise ValueError(f"duplicate label {label!r}")
        seen.add(label)


def _prepare_members(data: Any, field: str) -> Any:
    if not isinstance(data, dict) or field not in data:
        return data
    items = list(data[field])
    if field in ("groups", "entries"):
        items = [list(member) for member in items]
    data = {**data, field: items}
    if data.get("labels") is None:
        size = sum(len(group) for group in items) if field == "groups" else len(items)
        data["labels"] = default_labels(size)
    return data


@total_ordering
class Position(BaseModel):
    """Exact half-integer ranking position, stored as twice its value."""

    model_config = ConfigDict(frozen=True)

    doubled: StrictInt

    @classmethod
    def of(cls, value: PositionLike) -> "Position":
        if isinstance(value, Position):
            return value
        if isinstance(value, (bool, float)):
            raise ValueError(f"unsupported position value {value!r}; pass an int, Fraction or decimal string")
        if isinstance(value, int):
            return cls(doubled=2 * value)
        if isinstance(value, str) and not DECIMAL_PATTERN.fullmatch(value):
            raise HalfIntegerError(f"{value!r} is not an integer or a .5 decimal")
        try:
            fraction = Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise HalfIntegerError(f"{value!r} is not a number") from exc
        twice = fraction * 2
        if twice.denominator != 1:
            raise HalfIntegerError(f"{value!s} is not an exact half-integer")
        return cls(doubled=twice.numerator)

    @classmethod
    def midpoint(cls, low: int, high: int) -> "Position":
        return cls(doubled=low + high)

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Position):
            return NotImplemented
        return self.doubled < other.doubled

    def __add__(self, other: object) -> "Position":
        if isinstance(other, Position):
            return Position(doubled=self.doubled + other.doubled)
        if isinstance(other, int) and not isinstance(other, bool):
            return Position(doubled=self.doubled + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> "Position":
        if isinstance(other, Position):
            return Position(doubled=self.doubled - other.doubled)
        if isinstance(other, int) and not isinstance(other, bool):
            return Position(doubled=self.doubled - 2 * other)
        return NotImplemented

    def __str__(self) -> str:
        whole, half = divmod(abs(self.doubled), 2)
        sign = "-" if self.doubled < 0 else ""
        return f"{sign}{whole}.5" if half else f"{sign}{whole}"


class AlternativeId(BaseModel):
    """One member of the fixed alternative roster."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=0)
    label: str = Field(min_length=1)


class Ranking(BaseModel):
    """A weak order as an ordered partition of alternative indices, best group first."""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...]
    groups: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="before")
    @classmethod
    def _default_roster(cls, data: Any) -> Any:
        return _prepare_members(data, "groups")

    @field_validator("groups")
    @classmethod
    def _canonical_groups(cls, groups: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(group)) for group in groups)

    @model_validator(mode="after")
    def _check_partition(self) -> "Ranking":
        _check_labels(self.labels)
        n = len(self.labels)
        if n == 0:
            raise ValueError("a ranking needs at least one alternative")
        seen: set = set()
        for position, group in enumerate(self.groups):
            if not group:
                raise ValueError(f"group {position} is empty")
            for index in group:
                if not 0 <= index < n:
                    raise ValueError(f"alternative index {index} outside roster of size {n}")
                if index in seen:
                    raise ValueError(f"alternative {self.labels[index]} appears twice")
                seen.add(index)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise ValueError(f"alternatives {[self.labels[i] for i in missing]} are not ranked")
        return self

    @classmethod
    def from_groups(cls, groups: List[List[int]], labels: Optional[Tuple[str, ...]] = None) -> "Ranking":
        return cls(groups=groups, labels=labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def alternatives(self) -> Iterator[AlternativeId]:
        return (AlternativeId(index=index, label=label) for index, label in enumerate(self.labels))

    def group_of(self, index: int) -> int:
        for position, group in enumerate(self.groups):
            if index in group:
                return position
        raise IndexError(index)


class DominanceProfile(BaseModel):
    """Cardinalities of the dominated set and the indifference set of one alternative."""

    model_config = ConfigDict(frozen=True)

    predecessors: int = Field(ge=0)
    tie_size: int = Field(ge=1)
    n: int = Field(ge=1)

    @model_validator(mode="after")
    def _fits_roster(self) -> "DominanceProfile":
        if self.predecessors + self.tie_size > self.n:
            raise ValueError("predecessors + tie_size exceeds the roster size")
        return self

    @property
    def block(self) -> range:
        return range(self.predecessors + 1, self.predecessors + self.tie_size + 1)

    @property
    def centre(self) -> Position:
        return Position(doubled=2 * self.predecessors + self.tie_size + 1)


class PreferenceMap(BaseModel):
    """Per-alternative sets of possible ranking positions.

    Only the shape is enforced here; whether the entries really come from a weak
    order is decided by :func:`rank_maps.validate.validate_pm`.
    """

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="before")
    @classmethod
    def _default_roster(cls, data: Any) -> Any:
        return _prepare_members(data, "entries")

    @field_validator("entries")
    @classmethod
    def _canonical_entries(cls, entries: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(set(entry))) for entry in entries)

    @model_validator(mode="after")
    def _labels_match(self) -> "PreferenceMap":
        _check_labels(self.labels)
        if len(self.labels) != len(self.entries):
            raise ValueError(f"{len(self.labels)} labels for {len(self.entries)} entries")
        return self

    @property
    def n(self) -> int:
        return len(self.entries)

    def sets(self) -> List[FrozenSet[int]]:
        return [frozenset(entry) for entry in self.entries]


class CookSeifordVector(BaseModel):
    """Per-alternative positions where tied alternatives share the middle of their block."""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...]
    values: Tuple[Position, ...]

    @model_validator(mode="before")
    @classmethod
    def _default_roster(cls, data: Any) -> Any:
        return _prepare_members(data, "values")

    @field_validator("values", mode="before")
    @classmethod
    def _exact_values(cls, values: Any) -> Tuple[Position, ...]:
        return tuple(Position.of(value) for value in values)

    @model_validator(mode="after")
    def _labels_match(self) -> "CookSeifordVector":
        _check_labels(self.labels)
        if len(self.labels) != len(self.values):
            raise ValueError(f"{len(self.labels)} labels for {len(self.values)} values")
        return self

    @property
    def n(self) -> int:
        return len(self.values)

    def total(self) -> Position:
        return sum(self.values, Position(doubled=0))


class ViolationCode(str, Enum):
    PM_EMPTY_ENTRY = "PM_EMPTY_ENTRY"
    PM_NOT_CONSECUTIVE = "PM_NOT_CONSECUTIVE"
    PM_OUT_OF_RANGE = "PM_OUT_OF_RANGE"
    PM_OVERLAP_NOT_EQUAL = "PM_OVERLAP_NOT_EQUAL"
    PM_NOT_PARTITION = "PM_NOT_PARTITION"
    PM_MULTIPLICITY_MISMATCH = "PM_MULTIPLICITY_MISMATCH"
    CS_OUT_OF_RANGE = "CS_OUT_OF_RANGE"
    CS_NOT_HALF_INTEGER = "CS_NOT_HALF_INTEGER"
    CS_GROUP_ALIGNMENT = "CS_GROUP_ALIGNMENT"
    CS_INTERVALS_DONT_TILE = "CS_INTERVALS_DONT_TILE"
    SIZE_MISMATCH = "SIZE_MISMATCH"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    code: ViolationCode
    indices: Tuple[int, ...] = ()
    message: str = ""


class ValidationReport(BaseModel):
    """Verdict on an untrusted representation; valid exactly when nothing was violated."""

    model_config = ConfigDict(frozen=True)

    violations: Tuple[Violation, ...] = ()

    @computed_field  # type: ignore[misc]
    @property
    def valid(self) -> bool:
        return not self.violations

    def codes(self) -> List[ViolationCode]:
        return [violation.code for violation in self.violations]


__all__ = [
    "AlternativeId",
    "CookSeifordVector",
    "DominanceProfile",
    "HalfIntegerError",
    "DECIMAL_PATTERN",
    "LABEL_PATTERN",
    "Position",
    "PreferenceMap",
    "Ranking",
    "ValidationReport",
    "Violation",
    "ViolationCode",
    "default_labels",
]
