"""HTTP service over the label store: resolution, profiling, staleness, comparison.

Every response body is canonical JSON, byte-identical to what the
underlying library call serializes, so scripts and the viewer can treat
the service as a remote form of the library. Errors are uniform
``{"code", "message"}`` objects.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.responses import Response
from starlette.exceptions import HTTPException as StarletteHTTPException
from starlette.middleware.cors import CORSMiddleware

from . import canonical
from .model import Label, LabelValidationError, ParseError
from .profiler import (
    EmptyInput,
    EncodingError,
    LabelHasNoFingerprint,
    RaggedRow,
    check_staleness,
    profile_csv,
)
from .reporting import FewerThanTwoLabels, NoLabelMatches, compare_labels
from .resolution import (
    PredictionNotInUseCase,
    UnknownPrediction,
    UnknownUseCase,
    resolve,
    use_cases_to_bytes,
)
from .store import DuplicateLabelId, LabelStore

log = logging.getLogger(__name__)

MAX_UPLOAD_BYTES = 50 * 1024 * 1024  # desk-scale ingestion, not a warehouse


@dataclass(frozen=True)
class ApiError:
    http_status: int
    code: str
    message: str


class ApiException(Exception):
    def __init__(self, error: ApiError, extra: dict | None = None):
        self.error = error
        self.extra = extra
        super().__init__(error.message)


def _fail(status: int, code: str, message: str, extra: dict | None = None) -> ApiException:
    return ApiException(ApiError(status, code, message), extra)


_ERROR_STATUS = {
    LabelValidationError: (422, "VALIDATION_FAILED"),
    DuplicateLabelId: (409, "DUPLICATE_ID"),
    UnknownUseCase: (404, "UNKNOWN_USE_CASE"),
    UnknownPrediction: (404, "UNKNOWN_PREDICTION"),
    PredictionNotInUseCase: (422, "PREDICTION_NOT_IN_USE_CASE"),
    EmptyInput: (422, "EMPTY_INPUT"),
    RaggedRow: (422, "RAGGED_ROW"),
    EncodingError: (422, "ENCODING_ERROR"),
    LabelHasNoFingerprint: (422, "NO_FINGERPRINT"),
    FewerThanTwoLabels: (400, "FEWER_THAN_TWO_LABELS"),
    NoLabelMatches: (404, "NO_LABEL_MATCHES"),
}


def _map_error(exc: Exception) -> ApiException:
    """Every library error lands on exactly one (status, code) pair."""
    if isinstance(exc, ParseError):
        return _fail(400, exc.code, str(exc))
    if isinstance(exc, LabelValidationError):
        return _fail(422, "VALIDATION_FAILED", str(exc), extra={"report": exc.report.to_tree()})
    for exc_type, (status, code) in _ERROR_STATUS.items():
        if isinstance(exc, exc_type):
            return _fail(status, code, str(exc))
    raise exc


def create_app(store: LabelStore, max_upload_bytes: int = MAX_UPLOAD_BYTES) -> FastAPI:
    app = FastAPI(title="dnl label service", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )

    def respond(data: bytes, status: int = 200) -> Response:
        return Response(content=data, status_code=status, media_type="application/json")

    @app.exception_handler(ApiException)
    async def on_api_error(_request: Request, exc: ApiException) -> Response:
        body = {"code": exc.error.code, "message": exc.error.message}
        if exc.extra:
            body.update(exc.extra)
        return respond(canonical.dumps(body), exc.error.http_status)

    @app.exception_handler(StarletteHTTPException)
    async def on_http_error(_request: Request, exc: StarletteHTTPException) -> Response:
        code = {404: "NOT_FOUND", 405: "METHOD_NOT_ALLOWED"}.get(exc.status_code, "HTTP_ERROR")
        return respond(canonical.dumps({"code": code, "message": str(exc.detail)}), exc.status_code)

    def require_label(label_id: str) -> Label:
        label = store.get(label_id)
        if label is None:
            raise _fail(404, "NOT_FOUND", f"no label with id {label_id!r}")
        return label

    async def read_upload(request: Request) -> bytes:
        body = await request.body()
        if len(body) > max_upload_bytes:
            raise _fail(413, "PAYLOAD_TOO_LARGE",
                        f"upload exceeds {max_upload_bytes} bytes")
        return body

    @app.get("/labels")
    def list_labels() -> Response:
        return respond(canonical.dumps(store.summaries()))

    @app.get("/labels/{label_id}")
    def get_label(label_id: str) -> Response:
        require_label(label_id)
        return respond(store.get_bytes(label_id))

    @app.get("/labels/{label_id}/use-cases")
    def get_use_cases(label_id: str) -> Response:
        return respond(use_cases_to_bytes(require_label(label_id)))

    @app.get("/labels/{label_id}/resolve")
    def get_resolved(label_id: str, use_case: str | None = None,
                     prediction: str | None = None) -> Response:
        label = require_label(label_id)
        if not use_case or not prediction:
            raise _fail(400, "MISSING_PARAMETER",
                        "query parameters use_case and prediction are required")
        try:
            view = resolve(label, use_case, prediction)
        except Exception as exc:
            raise _map_error(exc) from None
        return respond(view.to_bytes())

    @app.post("/labels", status_code=201)
    async def submit_label(request: Request) -> Response:
        body = await read_upload(request)
        try:
            label_id = store.submit(body)
        except Exception as exc:
            raise _map_error(exc) from None
        return respond(canonical.dumps({"label_id": label_id}), 201)

    @app.post("/profile")
    async def post_profile(request: Request) -> Response:
        body = await read_upload(request)
        try:
            profile = profile_csv(body)
        except Exception as exc:
            raise _map_error(exc) from None
        return respond(profile.to_bytes())

    @app.post("/labels/{label_id}/check-staleness")
    async def post_staleness(label_id: str, request: Request) -> Response:
        label = require_label(label_id)
        body = await read_upload(request)
        try:
            report = check_staleness(label, profile_csv(body))
        except Exception as exc:
            raise _map_error(exc) from None
        return respond(report.to_bytes())

    @app.get("/compare")
    def get_comparison(use_case: str | None = None, ids: str | None = None) -> Response:
        if not use_case or not ids:
            raise _fail(400, "MISSING_PARAMETER",
                        "query parameters use_case and ids are required")
        wanted = [part for part in ids.split(",") if part]
        labels = [require_label(label_id) for label_id in wanted]
        try:
            report = compare_labels(labels, use_case)
        except Exception as exc:
            raise _map_error(exc) from None
        return respond(report.to_bytes())

    return app


def serve(store_dir: str, port: int, host: str = "127.0.0.1") -> None:
    """Load the store and block serving it; invalid files are skipped with a log line."""
    import uvicorn

    store = LabelStore(store_dir)
    store.load()
    log.info("serving %d labels from %s", len(store.ids()), store_dir)
    uvicorn.run(create_app(store), host=host, port=port, log_level="warning")
