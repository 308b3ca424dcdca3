"""HTTP/JSON delivery of the estimation engine.

The service wraps the same functions the CLI calls, so for any spec the
``POST /api/v1/estimate`` body equals the CLI's json output number for
number. All numbers are emitted at full precision; rounding is a client
concern.

Error bodies have one shape::

    {"error": {"code": "VALIDATION", "message": "...", "field": "size_kloc"}}

with ``code`` drawn from VALIDATION, NOT_FOUND, CATALOG, INTERNAL, mapped
to status 400, 404, 500, 500 respectively.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .catalog import RatingCatalog, catalog_to_mapping, resolve_catalog
from .core import estimate
from .errors import CocoestError, ValidationError
from .output import estimate_payload, sweep_rows
from .specio import spec_from_mapping
from .store import ScenarioStore, record_to_mapping

_STATUS_BY_CODE = {
    "VALIDATION": 400,
    "NOT_FOUND": 404,
    "CATALOG": 500,
    "INTERNAL": 500,
}

#: Origins always allowed, for local development against the bundled UI.
_LOCAL_ORIGIN_REGEX = r"https?://(localhost|127\.0\.0\.1)(:\d+)?"


def _error_response(exc: CocoestError) -> JSONResponse:
    body: dict[str, Any] = {"code": exc.code, "message": str(exc)}
    field = getattr(exc, "field", None)
    if field is not None:
        body["field"] = field
    return JSONResponse(
        status_code=_STATUS_BY_CODE.get(exc.code, 500), content={"error": body}
    )


async def _json_object(request: Request) -> dict:
    try:
        doc = await request.json()
    except json.JSONDecodeError:
        raise ValidationError("request body must be valid JSON") from None
    if not isinstance(doc, dict):
        raise ValidationError("request body must be a JSON object")
    return doc


def create_app(
    catalog: RatingCatalog | None = None,
    store: ScenarioStore | None = None,
    allow_origins: Sequence[str] | None = None,
) -> FastAPI:
    """Build the service around one catalog and one scenario store.

    Defaults resolve the catalog through the usual chain (explicit path
    not applicable here, then $COCOEST_CATALOG, then built-in) and put the
    store at its default path. Nothing touches the store file until a
    scenario endpoint is hit.
    """
    if catalog is None:
        catalog = resolve_catalog()
    if store is None:
        store = ScenarioStore()

    app = FastAPI(title="cocoest", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(allow_origins) if allow_origins else [],
        allow_origin_regex=_LOCAL_ORIGIN_REGEX,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(CocoestError)
    async def _on_cocoest_error(request: Request, exc: CocoestError) -> JSONResponse:
        return _error_response(exc)

    @app.exception_handler(Exception)
    async def _on_unhandled(request: Request, exc: Exception) -> JSONResponse:
        return JSONResponse(
            status_code=500,
            content={"error": {"code": "INTERNAL", "message": "internal error"}},
        )

    @app.get("/healthz")
    async def healthz() -> dict:
        return {
            "status": "ok",
            "version": __version__,
            "catalog_version": catalog.catalog_version,
        }

    @app.post("/api/v1/estimate")
    async def api_estimate(request: Request) -> dict:
        spec = spec_from_mapping(await _json_object(request))
        return estimate_payload(spec, estimate(spec, catalog))

    @app.get("/api/v1/catalog")
    async def api_catalog() -> dict:
        return catalog_to_mapping(catalog)

    @app.post("/api/v1/sweep")
    async def api_sweep(request: Request) -> list:
        doc = await _json_object(request)
        if not isinstance(doc.get("spec"), dict):
            raise ValidationError("sweep body must carry a 'spec' object", field="spec")
        driver = doc.get("driver")
        if not isinstance(driver, str) or not driver:
            raise ValidationError(
                "sweep body must carry a 'driver' id string", field="driver"
            )
        spec = spec_from_mapping(doc["spec"])
        return sweep_rows(spec, driver, catalog)

    @app.get("/api/v1/scenarios")
    async def api_list_scenarios() -> list:
        return [record_to_mapping(record) for record in store.list()]

    @app.post("/api/v1/scenarios", status_code=201)
    async def api_create_scenario(request: Request) -> dict:
        doc = await _json_object(request)
        name = doc.get("name")
        if not isinstance(name, str):
            raise ValidationError("scenario 'name' must be a string", field="name")
        notes = doc.get("notes")
        if notes is not None and not isinstance(notes, str):
            raise ValidationError("scenario 'notes' must be a string", field="notes")
        if not isinstance(doc.get("spec"), dict):
            raise ValidationError(
                "scenario body must carry a 'spec' object", field="spec"
            )
        spec = spec_from_mapping(doc["spec"])
        record = store.save(name, spec, notes=notes)
        return record_to_mapping(record)

    @app.get("/api/v1/scenarios/{scenario_id}")
    async def api_get_scenario(scenario_id: str) -> dict:
        return record_to_mapping(store.get(scenario_id))

    @app.delete("/api/v1/scenarios/{scenario_id}", status_code=204)
    async def api_delete_scenario(scenario_id: str) -> None:
        store.delete(scenario_id)

    return app
