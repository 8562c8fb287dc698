"""Flask JSON API for rank-maps."""

from __future__ import annotations

import json
import logging
import os
from typing import Any, Dict, List, Optional, Tuple

from flask import Flask, Response, jsonify, request
from werkzeug.exceptions import HTTPException

from .convert import InvalidRepresentationError
from .io import DecodeError, encode_json, encode_json_array, load_json
from .oracle import EnumerationRangeError, check_bijection, enumerate_weak_orders
from .pipeline import InputError, convert_documents, load_documents, validate_documents

LOGGER = logging.getLogger(__name__)

TARGETS = {"ranking", "pm", "cs"}


def _json_response(body: str, status: int = 200) -> Response:
    return Response(body, status=status, mimetype="application/json")


def _error(message: str, status: int = 400) -> Response:
    response = jsonify({"error": message})
    response.status_code = status
    return response


def _request_body() -> Dict[str, Any]:
    """Load the request body without letting JSON numbers become floats."""

    try:
        body = load_json(request.get_data(as_text=True) or "{}")
    except DecodeError as exc:
        raise InputError(str(exc)) from exc
    if not isinstance(body, dict):
        raise InputError("request body must be a JSON object")
    return body


def _request_input(body: Dict[str, Any]) -> Tuple[str, Optional[str], Optional[List[str]]]:
    raw = body.get("input")
    if raw is None:
        raise InputError("missing 'input'")
    text = raw if isinstance(raw, str) else json.dumps(raw)
    labels = body.get("labels")
    if labels is not None and not (isinstance(labels, list) and all(isinstance(label, str) for label in labels)):
        raise InputError("'labels' must be a list of strings")
    return text, body.get("kind"), labels


def _roster_size(args: Dict[str, str]) -> int:
    try:
        return int(args.get("n", ""))
    except ValueError as exc:
        raise InputError("query parameter 'n' must be an integer") from exc


def create_app() -> Flask:
    app = Flask(__name__)

    @app.route("/api/convert", methods=["POST"])
    def convert():
        try:
            body = _request_body()
            target = body.get("to")
            if target not in TARGETS:
                raise InputError(f"'to' must be one of {sorted(TARGETS)}")
            text, kind, labels = _request_input(body)
            results = convert_documents(load_documents(text, kind, labels), target)
        except InputError as exc:
            return _error(str(exc))
        except InvalidRepresentationError as exc:
            return _json_response(encode_json(exc.report), status=422)
        if len(results) == 1:
            return _json_response(encode_json(results[0]))
        return _json_response(encode_json_array(results))

    @app.route("/api/validate", methods=["POST"])
    def validate():
        try:
            text, kind, labels = _request_input(_request_body())
            reports = validate_documents(load_documents(text, kind, labels))
        except InputError as exc:
            return _error(str(exc))
        status = 200 if all(report.valid for report in reports) else 422
        if len(reports) == 1:
            return _json_response(encode_json(reports[0]), status=status)
        return _json_response(encode_json_array(reports), status=status)

    @app.route("/api/check", methods=["GET"])
    def check():
        try:
            report = check_bijection(_roster_size(request.args))
        except (InputError, EnumerationRangeError) as exc:
            return _error(str(exc))
        return _json_response(encode_json(report))

    @app.route("/api/enumerate", methods=["GET"])
    def enumerate_orders():
        try:
            rankings = list(enumerate_weak_orders(_roster_size(request.args)))
        except (InputError, EnumerationRangeError) as exc:
            return _error(str(exc))
        return _json_response(encode_json_array(rankings))

    @app.errorhandler(Exception)
    def unexpected(exc: Exception):  # pylint: disable=unused-variable
        if isinstance(exc, HTTPException):
            return exc
        LOGGER.exception("Request failed")
        return _error("internal error", status=500)

    return app


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="[%(levelname)s] %(name)s: %(message)s")
    create_app().run(
        host=os.getenv("RANK_MAPS_HOST", "127.0.0.1"),
        port=int(os.getenv("RANK_MAPS_PORT", "8000")),
    )
