"""JSON payloads, batch files and text rendering for every representation."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Annotated, Any, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, StrictInt, StrictStr, TypeAdapter, ValidationError

from .models import (
    CookSeifordVector,
    HalfIntegerError,
    Position,
    PreferenceMap,
    Ranking,
    ValidationReport,
    Violation,
    ViolationCode,
)
from .notation import RankingParseError, format_ranking, parse_ranking
from .oracle import BijectionReport

LOGGER = logging.getLogger(__name__)

Encodable = Union[Ranking, PreferenceMap, CookSeifordVector, ValidationReport, BijectionReport]
Kind = Literal["ranking", "pm", "cs", "report", "bijection"]


class DecodeError(ValueError):
    """Raised when JSON input is malformed or does not describe the expected object."""

    def __init__(self, message: str, code: Optional[ViolationCode] = None, index: Optional[int] = None) -> None:
        super().__init__(message)
        self.code = code
        self.index = index

    def as_report(self) -> ValidationReport:
        if self.code is None:
            raise ValueError("decode error carries no violation code")
        indices = () if self.index is None else (self.index,)
        return ValidationReport(violations=(Violation(code=self.code, indices=indices, message=str(self)),))


class RankingPayload(BaseModel):
    kind: Literal["ranking"] = "ranking"
    labels: Optional[List[str]] = None
    groups: List[List[StrictInt]]

    def to_model(self) -> Ranking:
        return Ranking(labels=self.labels, groups=self.groups)


class PreferenceMapPayload(BaseModel):
    kind: Literal["pm"] = "pm"
    labels: Optional[List[str]] = None
    entries: List[List[StrictInt]]

    def to_model(self) -> PreferenceMap:
        return PreferenceMap(labels=self.labels, entries=self.entries)


class CookSeifordPayload(BaseModel):
    kind: Literal["cs"] = "cs"
    labels: Optional[List[str]] = None
    values: List[Union[StrictStr, StrictInt]]

    def positions(self) -> List[Position]:
        positions = []
        for index, value in enumerate(self.values):
            try:
                positions.append(Position.of(value))
            except (HalfIntegerError, ValueError) as exc:
                raise DecodeError(
                    f"value {value!s} at {index} is not an exact half-integer",
                    code=ViolationCode.CS_NOT_HALF_INTEGER,
                    index=index,
                ) from exc
        return positions

    def to_model(self) -> CookSeifordVector:
        return CookSeifordVector(labels=self.labels, values=self.positions())


class ReportPayload(BaseModel):
    kind: Literal["report"] = "report"
    valid: bool
    violations: List[Violation] = Field(default_factory=list)

    def to_model(self) -> ValidationReport:
        report = ValidationReport(violations=tuple(self.violations))
        if report.valid != self.valid:
            raise DecodeError("report 'valid' flag disagrees with its violations")
        return report


class BijectionPayload(BaseModel):
    kind: Literal["bijection"] = "bijection"
    n: int
    total: int
    pm_images_distinct: int
    cs_images_distinct: int
    roundtrip_failures: int
    ok: bool

    def to_model(self) -> BijectionReport:
        return BijectionReport(**self.model_dump(exclude={"kind", "ok"}))


Payload = Annotated[
    Union[RankingPayload, PreferenceMapPayload, CookSeifordPayload, ReportPayload, BijectionPayload],
    Field(discriminator="kind"),
]
_PAYLOAD_ADAPTER: TypeAdapter = TypeAdapter(Payload)


def to_payload(obj: Encodable) -> BaseModel:
    if isinstance(obj, Ranking):
        return RankingPayload(labels=list(obj.labels), groups=[list(group) for group in obj.groups])
    if isinstance(obj, PreferenceMap):
        return PreferenceMapPayload(labels=list(obj.labels), entries=[list(entry) for entry in obj.entries])
    if isinstance(obj, CookSeifordVector):
        return CookSeifordPayload(labels=list(obj.labels), values=[str(value) for value in obj.values])
    if isinstance(obj, ValidationReport):
        return ReportPayload(valid=obj.valid, violations=list(obj.violations))
    if isinstance(obj, BijectionReport):
        return BijectionPayload(ok=obj.ok, **obj.model_dump(exclude={"ok"}))
    raise TypeError(f"cannot encode {type(obj).__name__}")


def encode_json(obj: Encodable) -> str:
    return to_payload(obj).model_dump_json()


def encode_json_array(objects: Sequence[Encodable]) -> str:
    return "[" + ",".join(encode_json(obj) for obj in objects) + "]"


def load_json(text: str) -> Any:
    try:
        # JSON numbers with a fraction stay decimal strings; they never become floats
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"malformed JSON: {exc}") from exc


def read_payload(data: Any, kind: Optional[Kind] = None) -> BaseModel:
    """Validate an already-loaded JSON value as a payload, optionally of a fixed kind."""

    if not isinstance(data, dict):
        raise DecodeError(f"expected a JSON object, got {type(data).__name__}")
    if kind is not None and data.get("kind") != kind:
        raise DecodeError(f"expected kind {kind!r}, got {data.get('kind')!r}")
    try:
        return _PAYLOAD_ADAPTER.validate_python(data)
    except ValidationError as exc:
        raise DecodeError(f"invalid {data.get('kind', 'unknown')} payload: {exc.errors()[0]['msg']}") from exc


def payload_to_model(payload: BaseModel) -> Encodable:
    if isinstance(payload, (PreferenceMapPayload, CookSeifordPayload)) and payload.labels is not None:
        size = len(payload.entries if isinstance(payload, PreferenceMapPayload) else payload.values)
        if len(payload.labels) != size:
            raise DecodeError(f"{len(payload.labels)} labels for {size} alternatives", code=ViolationCode.SIZE_MISMATCH)
    try:
        return payload.to_model()  # type: ignore[attr-defined]
    except ValidationError as exc:
        raise DecodeError(f"invalid {payload.kind}: {exc.errors()[0]['msg']}") from exc  # type: ignore[attr-defined]


def decode_json(text: str, kind: Optional[Kind] = None) -> Encodable:
    return payload_to_model(read_payload(load_json(text), kind))


def load_vector(text: str, kind: Optional[Literal["pm", "cs"]] = None) -> Tuple[str, List[Any]]:
    """Load a bare JSON vector, returning its kind and the raw items.

    Nested arrays are preference-map entries, scalars are C-S values.
    """

    data = load_json(text)
    if not isinstance(data, list):
        raise DecodeError(f"expected a JSON array, got {type(data).__name__}")
    if kind is None:
        kind = "pm" if data and all(isinstance(item, list) for item in data) else "cs"
    if kind == "pm":
        if not all(isinstance(item, list) for item in data):
            raise DecodeError("preference map entries must be arrays of positions")
        if not all(isinstance(value, int) and not isinstance(value, bool) for item in data for value in item):
            raise DecodeError("preference map positions must be integers")
    elif any(isinstance(item, (list, dict, bool)) or item is None for item in data):
        raise DecodeError("C-S values must be numbers or decimal strings")
    return kind, data


def decode_vector(
    text: str,
    kind: Optional[Literal["pm", "cs"]] = None,
    labels: Optional[Sequence[str]] = None,
) -> Union[PreferenceMap, CookSeifordVector]:
    kind, items = load_vector(text, kind)
    roster = list(labels) if labels is not None else None
    if kind == "pm":
        payload: BaseModel = PreferenceMapPayload(labels=roster, entries=items)
    else:
        payload = CookSeifordPayload(labels=roster, values=items)
    return payload_to_model(payload)  # type: ignore[return-value]


def content_lines(text: str) -> List[Tuple[int, str]]:
    """Non-blank lines with ``#`` comments removed, numbered from 1."""

    lines = []
    for number, line in enumerate(text.split("\n"), start=1):
        content = line.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def read_batch(source: Union[str, Path], roster: Optional[Sequence[str]] = None) -> List[Tuple[int, Ranking]]:
    """Parse one ranking expression per line of a batch file (or of ``source`` text)."""

    text = source.read_text(encoding="utf-8") if isinstance(source, Path) else source
    rankings = []
    for number, content in content_lines(text):
        try:
            rankings.append((number, parse_ranking(content, roster)))
        except RankingParseError as exc:
            raise RankingParseError(exc.reason, exc.offset, line=number) from exc
    LOGGER.info("Read %d rankings from batch", len(rankings))
    return rankings


def render_text(obj: Encodable) -> str:
    if isinstance(obj, Ranking):
        return format_ranking(obj)
    if isinstance(obj, PreferenceMap):
        return " ".join(
            f"{label}:{{{','.join(str(value) for value in entry)}}}"
            for label, entry in zip(obj.labels, obj.entries)
        )
    if isinstance(obj, CookSeifordVector):
        return " ".join(f"{label}:{value}" for label, value in zip(obj.labels, obj.values))
    if isinstance(obj, ValidationReport):
        if obj.valid:
            return "valid"
        return "\n".join(
            f"{violation.code.value} [{','.join(str(index) for index in violation.indices)}]: {violation.message}"
            for violation in obj.violations
        )
    if isinstance(obj, BijectionReport):
        status = "ok" if obj.ok else "FAILED"
        return (
            f"n={obj.n} total={obj.total} pm={obj.pm_images_distinct} "
            f"cs={obj.cs_images_distinct} failures={obj.roundtrip_failures} {status}"
        )
    raise TypeError(f"cannot render {type(obj).__name__}")


def write_output(text: str, output_path: Optional[Union[str, Path]] = None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output_path is None:
        sys.stdout.write(text)
        return
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    LOGGER.info("Output saved to %s", path)


__all__ = [
    "CookSeifordPayload",
    "DecodeError",
    "Encodable",
    "Kind",
    "PreferenceMapPayload",
    "RankingPayload",
    "content_lines",
    "decode_json",
    "decode_vector",
    "encode_json",
    "encode_json_array",
    "load_json",
    "load_vector",
    "payload_to_model",
    "read_batch",
    "read_payload",
    "render_text",
    "to_payload",
    "write_output",
]
