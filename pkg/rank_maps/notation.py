"""Ranking expressions such as ``x1 > x2 ~ x3 > x4``."""

from __future__ import annotations

import re
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from .models import Ranking

PREFER = ">"
TIE = "~"
# ≻ and ∼ are accepted on input as aliases for > and ~
_TOKEN = re.compile(
    r"(?P<space>\s+)|(?P<label>[A-Za-z_][A-Za-z0-9_]*)|(?P<prefer>[>≻])|(?P<tie>[~∼])"
)


class RankingParseError(ValueError):
    """Raised when a ranking expression cannot be parsed; ``offset`` is a UTF-8 byte offset."""

    def __init__(self, message: str, offset: int, line: Optional[int] = None) -> None:
        where = f"line {line}, byte {offset}" if line is not None else f"byte {offset}"
        super().__init__(f"{message} (at {where})")
        self.reason = message
        self.offset = offset
        self.line = line


class _Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _tokens(text: str) -> Iterator[_Token]:
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise RankingParseError(f"unexpected character {text[position]!r}", _byte_offset(text, position))
        if match.lastgroup != "space":
            yield _Token(match.lastgroup, match.group(), _byte_offset(text, position))
        position = match.end()


def _byte_offset(text: str, position: int) -> int:
    return len(text[:position].encode("utf-8"))


def _parse_groups(text: str) -> List[List[_Token]]:
    groups: List[List[_Token]] = [[]]
    expect_label = True
    for token in _tokens(text):
        if expect_label:
            if token.kind != "label":
                raise RankingParseError(f"expected a label, found {token.text!r}", token.offset)
            groups[-1].append(token)
            expect_label = False
            continue
        if token.kind == "label":
            raise RankingParseError(f"expected '{PREFER}' or '{TIE}' before {token.text!r}", token.offset)
        if token.kind == "prefer":
            groups.append([])
        expect_label = True
    if expect_label:
        raise RankingParseError("expected a label", _byte_offset(text, len(text)))
    return groups


def parse_ranking(text: str, roster: Optional[Sequence[str]] = None) -> Ranking:
    """Parse ``text`` into a ranking.

    Without a roster, alternatives are numbered in order of first appearance. With one,
    every roster label must appear exactly once and indices follow the roster.
    """

    groups = _parse_groups(text)
    first_seen: Dict[str, _Token] = {}
    for group in groups:
        for token in group:
            if token.text in first_seen:
                raise RankingParseError(f"duplicate label {token.text!r}", token.offset)
            first_seen[token.text] = token

    if roster is None:
        labels: Tuple[str, ...] = tuple(first_seen)
    else:
        labels = tuple(roster)
        if len(set(labels)) != len(labels):
            raise RankingParseError("roster contains duplicate labels", 0)
        for label, token in first_seen.items():
            if label not in labels:
                raise RankingParseError(f"label {label!r} is not in the roster", token.offset)
        missing = [label for label in labels if label not in first_seen]
        if missing:
            raise RankingParseError(
                f"roster labels {', '.join(missing)} are missing", _byte_offset(text, len(text))
            )

    index_of = {label: index for index, label in enumerate(labels)}
    return Ranking(
        labels=labels,
        groups=[[index_of[token.text] for token in group] for group in groups],
    )


def format_ranking(r: Ranking) -> str:
    return f" {PREFER} ".join(
        f" {TIE} ".join(r.labels[index] for index in group) for group in r.groups
    )


class RankingExpression(BaseModel):
    """Source text of a ranking together with the roster it resolves against."""

    model_config = ConfigDict(frozen=True)

    source: str
    roster: Optional[Tuple[str, ...]] = None

    def resolve(self) -> Ranking:
        return parse_ranking(self.source, self.roster)


__all__ = [
    "PREFER",
    "RankingExpression",
    "RankingParseError",
    "TIE",
    "format_ranking",
    "parse_ranking",
]
