"""rank-maps package."""

from .convert import (
    InvalidRepresentationError,
    cs_to_pm,
    cs_to_ranking,
    pm_to_cs,
    pm_to_ranking,
    ranking_to_cs,
    ranking_to_pm,
)
from .core import dominance_profile, group_count
from .models import (
    AlternativeId,
    CookSeifordVector,
    DominanceProfile,
    Position,
    PreferenceMap,
    Ranking,
    ValidationReport,
    ViolationCode,
)
from .notation import format_ranking, parse_ranking
from .oracle import check_bijection, enumerate_weak_orders
from .validate import validate_cs, validate_pm

__all__ = [
    "AlternativeId",
    "CookSeifordVector",
    "DominanceProfile",
    "InvalidRepresentationError",
    "Position",
    "PreferenceMap",
    "Ranking",
    "ValidationReport",
    "ViolationCode",
    "check_bijection",
    "cs_to_pm",
    "cs_to_ranking",
    "dominance_profile",
    "enumerate_weak_orders",
    "format_ranking",
    "group_count",
    "parse_ranking",
    "pm_to_cs",
    "pm_to_ranking",
    "ranking_to_cs",
    "ranking_to_pm",
    "validate_cs",
    "validate_pm",
]
