"""High-level orchestration shared by the CLI and the HTTP front end."""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel

from .convert import InvalidRepresentationError, Representation, Target, convert_to
from .io import (
    CookSeifordPayload,
    DecodeError,
    PreferenceMapPayload,
    RankingPayload,
    content_lines,
    encode_json,
    encode_json_array,
    load_json,
    load_vector,
    payload_to_model,
    read_batch,
    read_payload,
    render_text,
)
from .models import Ranking, ValidationReport
from .notation import RankingParseError
from .oracle import BijectionReport, EnumerationRangeError, check_bijection, enumerate_weak_orders
from .validate import validate_cs, validate_pm, validate_ranking

LOGGER = logging.getLogger(__name__)

InputKind = Literal["ranking", "pm", "cs"]
OutputFormat = Literal["text", "json"]
Document = Union[Ranking, BaseModel]


class InputError(RuntimeError):
    """Raised when input cannot be read or parsed; carries the process exit code."""

    def __init__(self, message: str, exit_code: int = 2) -> None:
        super().__init__(message)
        self.exit_code = exit_code


def read_source(argument: Optional[str], file: Optional[Path]) -> str:
    if file is not None:
        try:
            return file.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {file}: {exc}") from exc
    if argument is not None:
        return argument
    return sys.stdin.read()


def _document(payload: BaseModel, labels: Optional[Sequence[str]]) -> Document:
    if labels is not None and getattr(payload, "labels", "") is None:
        payload = payload.model_copy(update={"labels": list(labels)})
    if isinstance(payload, RankingPayload):
        return payload_to_model(payload)  # type: ignore[return-value]
    return payload


def _json_documents(text: str, kind: Optional[InputKind], labels: Optional[Sequence[str]]) -> List[Document]:
    try:
        data = load_json(text)
    except DecodeError:
        lines = content_lines(text)
        if len(lines) < 2:
            raise
        # one JSON object per line
        return [
            _document(read_payload(load_json(line), kind), labels)
            for _, line in lines
        ]
    if isinstance(data, dict):
        return [_document(read_payload(data, kind), labels)]
    if data and all(isinstance(item, dict) for item in data):
        return [_document(read_payload(item, kind), labels) for item in data]
    if kind == "ranking":
        raise DecodeError("a bare JSON vector cannot be read as a ranking")
    vector_kind, items = load_vector(text, kind)
    roster = list(labels) if labels is not None else None
    if vector_kind == "pm":
        return [PreferenceMapPayload(labels=roster, entries=items)]
    return [CookSeifordPayload(labels=roster, values=items)]


def load_documents(
    text: str,
    kind: Optional[InputKind] = None,
    labels: Optional[Sequence[str]] = None,
) -> List[Document]:
    """Split input text into documents.

    JSON input dispatches on its ``kind`` (a bare array is a raw PM or C-S vector);
    anything else is a batch of ranking expressions, one per line.
    """

    stripped = text.strip()
    if not content_lines(stripped):
        raise InputError("no input")
    try:
        if stripped[0] in "[{":
            return _json_documents(stripped, kind, labels)
        if kind not in (None, "ranking"):
            raise InputError(f"{kind} input must be JSON")
        return [ranking for _, ranking in read_batch(stripped, labels)]
    except (DecodeError, RankingParseError) as exc:
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(f"invalid input: {exc}") from exc


def _to_model(document: Document) -> Representation:
    if isinstance(document, Ranking):
        return document
    if not isinstance(document, (PreferenceMapPayload, CookSeifordPayload)):
        raise InputError(f"cannot convert a {document.kind} document")  # type: ignore[attr-defined]
    try:
        return payload_to_model(document)  # type: ignore[return-value]
    except DecodeError as exc:
        if exc.code is None:
            raise InputError(str(exc)) from exc
        raise InvalidRepresentationError(document.kind, exc.as_report()) from exc


def _validate_document(document: Document) -> ValidationReport:
    if isinstance(document, Ranking):
        return validate_ranking(document)
    if isinstance(document, PreferenceMapPayload):
        return validate_pm(document.entries, document.labels)
    if isinstance(document, CookSeifordPayload):
        return validate_cs(document.values, document.labels)
    raise InputError(f"cannot validate a {document.kind} document")  # type: ignore[attr-defined]


def validate_documents(documents: Sequence[Document]) -> List[ValidationReport]:
    reports = [_validate_document(document) for document in documents]
    invalid = sum(1 for report in reports if not report.valid)
    LOGGER.info("Validated %d documents, %d invalid", len(reports), invalid)
    return reports


def render(objects: Sequence[object], output_format: OutputFormat) -> str:
    if output_format == "json":
        return "\n".join(encode_json(obj) for obj in objects)  # type: ignore[arg-type]
    return "\n".join(render_text(obj) for obj in objects)  # type: ignore[arg-type]


def convert_documents(documents: Sequence[Document], target: Target) -> List[Representation]:
    LOGGER.info("Converting %d documents to %s", len(documents), target)
    return [convert_to(_to_model(document), target) for document in documents]


def run_convert(
    text: str,
    target: Target,
    kind: Optional[InputKind] = None,
    labels: Optional[Sequence[str]] = None,
    output_format: OutputFormat = "json",
) -> str:
    return render(convert_documents(load_documents(text, kind, labels), target), output_format)


def run_validate(
    text: str,
    kind: Optional[InputKind] = None,
    labels: Optional[Sequence[str]] = None,
    output_format: OutputFormat = "json",
) -> Tuple[str, bool]:
    reports = validate_documents(load_documents(text, kind, labels))
    return render(reports, output_format), all(report.valid for report in reports)


def run_check(n: int, allow_large: bool = False, output_format: OutputFormat = "json") -> Tuple[str, BijectionReport]:
    try:
        report = check_bijection(n, allow_large)
    except EnumerationRangeError as exc:
        raise InputError(str(exc)) from exc
    return render([report], output_format), report


def run_enumerate(n: int, allow_large: bool = False, output_format: OutputFormat = "text") -> str:
    try:
        rankings = list(enumerate_weak_orders(n, allow_large))
    except EnumerationRangeError as exc:
        raise InputError(str(exc)) from exc
    LOGGER.info("Enumerated %d weak orders on %d alternatives", len(rankings), n)
    if output_format == "json":
        return encode_json_array(rankings)
    return render(rankings, "text")


__all__ = [
    "InputError",
    "InputKind",
    "OutputFormat",
    "convert_documents",
    "load_documents",
    "read_source",
    "render",
    "run_check",
    "run_convert",
    "run_enumerate",
    "run_validate",
    "validate_documents",
]
