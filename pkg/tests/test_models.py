from fractions import Fraction

import pytest
from pydantic import ValidationError

from rank_maps.models import (
    AlternativeId,
    CookSeifordVector,
    DominanceProfile,
    HalfIntegerError,
    Position,
    PreferenceMap,
    Ranking,
    ValidationReport,
    Violation,
    ViolationCode,
    default_labels,
)


@pytest.mark.parametrize(
    "value, doubled",
    (
        (1, 2),
        ("2.5", 5),
        ("4", 8),
        (Fraction(3, 2), 3),
        ("-0.5", -1),
    ),
)
def test_position_of(value, doubled):
    assert Position.of(value).doubled == doubled


@pytest.mark.parametrize("value", ("2.25", "0.1", "1/3", "5/2", "2.50", " 2.5 ", "+2.5", "25e-1", "1.0", "abc", ""))
def test_position_rejects_non_half_integers(value):
    with pytest.raises(HalfIntegerError):
        Position.of(value)


def test_position_rejects_floats():
    with pytest.raises(ValueError, match="unsupported"):
        Position.of(2.5)


@pytest.mark.parametrize("doubled, text", ((2, "1"), (5, "2.5"), (0, "0"), (-1, "-0.5"), (-4, "-2")))
def test_position_str(doubled, text):
    assert str(Position(doubled=doubled)) == text


def test_position_is_exact_and_ordered():
    half = Position.of("1.5")
    assert half + half == Position.of(3)
    assert Position.of(3) - 1 == Position.of(2)
    assert sum([half, half, Position.of(3), Position.of(4)]) == Position.of(10)
    assert Position.of(1) < half < Position.of(2)
    assert sorted([Position.of(4), half, Position.of(1)]) == [Position.of(1), half, Position.of(4)]
    assert half.value == Fraction(3, 2)
    assert not half.is_integer and Position.of(3).is_integer


def test_position_doubled_is_strict():
    with pytest.raises(ValidationError):
        Position(doubled=2.0)


def test_default_labels():
    assert default_labels(3) == ("x1", "x2", "x3")
    assert default_labels(0) == ()


def test_ranking_canonicalises_groups():
    ranking = Ranking(groups=[{2, 1}, [0]])
    assert ranking.groups == ((1, 2), (0,))
    assert ranking.labels == ("x1", "x2", "x3")
    assert ranking.n == 3
    assert ranking == Ranking(groups=[[1, 2], [0]])


def test_ranking_alternatives_and_groups(worked_ranking):
    assert list(worked_ranking.alternatives)[1] == AlternativeId(index=1, label="x2")
    assert worked_ranking.group_of(2) == 1
    assert Ranking.from_groups([[0]], labels=("a",)).labels == ("a",)


@pytest.mark.parametrize(
    "groups, labels, message",
    (
        ([], (), "at least one"),
        ([[0], []], ("a",), "empty"),
        ([[0, 1], [1]], ("a", "b"), "twice"),
        ([[0]], ("a", "b"), "not ranked"),
        ([[0, 2]], ("a", "b"), "outside roster"),
        ([[0, 1]], ("a", "a"), "duplicate label"),
        ([[0]], ("not a label",), "identifier"),
    ),
)
def test_ranking_rejects_invalid_partitions(groups, labels, message):
    with pytest.raises(ValidationError, match=message):
        Ranking(groups=groups, labels=labels)


def test_dominance_profile_bounds():
    profile = DominanceProfile(predecessors=1, tie_size=2, n=4)
    assert list(profile.block) == [2, 3]
    assert profile.centre == Position.of("2.5")
    with pytest.raises(ValidationError):
        DominanceProfile(predecessors=3, tie_size=2, n=4)
    with pytest.raises(ValidationError):
        DominanceProfile(predecessors=0, tie_size=0, n=4)


def test_preference_map_shape_only():
    pm = PreferenceMap(entries=[[3, 1], [2, 2]])
    assert pm.entries == ((1, 3), (2,))
    assert pm.labels == ("x1", "x2")
    assert pm.sets() == [frozenset({1, 3}), frozenset({2})]
    with pytest.raises(ValidationError, match="labels"):
        PreferenceMap(entries=[[1]], labels=("a", "b"))


def test_cook_seiford_vector_is_exact(cs_two):
    assert [str(value) for value in cs_two.values] == ["1.5", "1.5", "3", "4"]
    assert cs_two.total() == Position.of(10)
    with pytest.raises(ValidationError):
        CookSeifordVector(values=["2.25"])
    with pytest.raises(ValidationError):
        CookSeifordVector(values=[2.5])


def test_validation_report_valid_flag():
    assert ValidationReport().valid
    report = ValidationReport(violations=(Violation(code=ViolationCode.SIZE_MISMATCH),))
    assert not report.valid
    assert report.codes() == [ViolationCode.SIZE_MISMATCH]
    assert report.model_dump()["valid"] is False
