from __future__ import annotations

import pytest

from rank_maps.models import CookSeifordVector, PreferenceMap, Ranking


@pytest.fixture
def worked_ranking() -> Ranking:
    """x1 > x2 ~ x3 > x4"""
    return Ranking(groups=[[0], [1, 2], [3]])


@pytest.fixture
def pm_one() -> PreferenceMap:
    return PreferenceMap(entries=[[1], [2, 3], [2, 3], [4]])


@pytest.fixture
def pm_two() -> PreferenceMap:
    return PreferenceMap(entries=[[1, 2], [1, 2], [3], [4]])


@pytest.fixture
def cs_one() -> CookSeifordVector:
    return CookSeifordVector(values=["1", "2.5", "2.5", "4"])


@pytest.fixture
def cs_two() -> CookSeifordVector:
    return CookSeifordVector(values=["1.5", "1.5", "3", "4"])
