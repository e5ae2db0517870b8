"""JSON-over-HTTP service exposing the engine to remote clients.

Request bodies are parsed by hand (no model layer) so malformed input maps
to 400 instead of a framework-shaped 422; the status codes mirror the error
taxonomy:

* 400 — body is not JSON, not an object, or a field is missing/malformed
* 413 — requested degree exceeds the cap (default 64)
* 422 — a local pattern required by the operation does not hold; the body's
  ``error`` field names the violated pattern
* 500 — an internal invariant fired

Every response is rendered by the shared serializer, so bodies are
byte-identical to CLI JSON output for the same request.  If a built explorer
bundle exists at ``frontend/dist`` it is served at ``/``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import Response

from .diagrams import WeightDiagram, parse_diagram, relative_length, validate_runs
from .errors import (
    CapExceededError,
    DiagramError,
    InternalInvariantError,
    PreconditionError,
)
from .moves import apply_move, applicable_moves, enumerate_allowable
from .resolution import plan_step, resolve, step_options
from .serialize import (
    applicable_moves_doc,
    applied_move_doc,
    diagram_doc,
    diagram_from_doc,
    error_doc,
    function_from_doc,
    functions_doc,
    health_doc,
    move_from_doc,
    plan_doc,
    resolution_doc,
    series_doc,
    to_json,
)

DEFAULT_CAP = 64

app = FastAPI(title="kacres", docs_url=None, redoc_url=None)


def _json_response(doc: dict[str, Any], status: int = 200) -> Response:
    return Response(
        content=to_json(doc), media_type="application/json", status_code=status
    )


@app.exception_handler(DiagramError)
async def _on_diagram_error(_request, exc: DiagramError) -> Response:
    return _json_response(error_doc(str(exc)), 400)


@app.exception_handler(PreconditionError)
async def _on_precondition_error(_request, exc: PreconditionError) -> Response:
    return _json_response(error_doc(str(exc)), 422)


@app.exception_handler(CapExceededError)
async def _on_cap_error(_request, exc: CapExceededError) -> Response:
    return _json_response(error_doc(str(exc)), 413)


@app.exception_handler(InternalInvariantError)
async def _on_invariant_error(_request, exc: InternalInvariantError) -> Response:
    return _json_response(error_doc(str(exc)), 500)


# ---------------------------------------------------------------------------
# request parsing


async def _body(request: Request) -> dict[str, Any]:
    try:
        data = await request.json()
    except Exception:
        raise DiagramError("request body is not valid JSON") from None
    if not isinstance(data, dict):
        raise DiagramError("request body must be a JSON object")
    return data


def _field(data: dict[str, Any], key: str) -> Any:
    if key not in data:
        raise DiagramError(f"request is missing the {key!r} field")
    return data[key]


def _diagram_field(data: dict[str, Any], key: str) -> WeightDiagram:
    return diagram_from_doc(_field(data, key), key)


def _depth_field(
    data: dict[str, Any], key: str = "maxDegree", required: bool = True
) -> int | None:
    if key not in data:
        if required:
            raise DiagramError(f"request is missing the {key!r} field")
        return None
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DiagramError(f"{key} must be a nonnegative integer, got {value!r}")
    if value > DEFAULT_CAP:
        raise CapExceededError(f"requested degree {value} exceeds the cap {DEFAULT_CAP}")
    return value


# ---------------------------------------------------------------------------
# endpoints


@app.get("/health")
async def health() -> Response:
    return _json_response(health_doc())


@app.post("/api/diagram/parse")
async def diagram_parse(request: Request) -> Response:
    data = await _body(request)
    if "text" in data:
        if not isinstance(data["text"], str):
            raise DiagramError("the 'text' field must be a string")
        mu = parse_diagram(data["text"])
    else:
        mu = _diagram_field(data, "mu")
    return _json_response(diagram_doc(mu))


@app.post("/api/resolve")
async def api_resolve(request: Request) -> Response:
    data = await _body(request)
    mu = _diagram_field(data, "mu")
    depth = _depth_field(data)
    if data.get("withFunctions"):
        from .resolution import resolve_with_functions

        return _json_response(resolution_doc(resolve_with_functions(mu, depth)))
    return _json_response(resolution_doc(resolve(mu, depth)))


@app.post("/api/functions")
async def api_functions(request: Request) -> Response:
    data = await _body(request)
    mu = _diagram_field(data, "mu")
    lam = _diagram_field(data, "lambda") if "lambda" in data else None
    depth = _depth_field(data, required=lam is None)
    if depth is None:
        depth = max(relative_length(lam, mu), 0) // 2
    return _json_response(
        functions_doc(mu, depth, enumerate_allowable(mu, depth), lam=lam)
    )


@app.post("/api/moves/applicable")
async def api_moves_applicable(request: Request) -> Response:
    data = await _body(request)
    f = function_from_doc(_field(data, "function"))
    return _json_response(applicable_moves_doc(f, applicable_moves(f)))


@app.post("/api/moves/apply")
async def api_moves_apply(request: Request) -> Response:
    data = await _body(request)
    f = function_from_doc(_field(data, "function"))
    rec = move_from_doc(_field(data, "move"))
    return _json_response(applied_move_doc(apply_move(f, rec)))


@app.post("/api/series")
async def api_series(request: Request) -> Response:
    data = await _body(request)
    runs_value = _field(data, "runs")
    if isinstance(runs_value, str):
        from .diagrams import parse_runs

        parts = parse_runs(runs_value)
    elif isinstance(runs_value, list):
        parts = validate_runs(runs_value)
    else:
        raise DiagramError("runs must be a list of sizes or a comma-separated string")
    depth = _depth_field(data)
    return _json_response(series_doc(parts, depth))


@app.post("/api/step/plan")
async def api_step_plan(request: Request) -> Response:
    data = await _body(request)
    mu = _diagram_field(data, "mu")
    return _json_response(plan_doc(mu, plan_step(mu), step_options(mu)))


@app.post("/api/step/custom")
async def api_step_custom(request: Request) -> Response:
    data = await _body(request)
    mu = _diagram_field(data, "mu")
    i = _field(data, "i")
    j = _field(data, "j")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j)):
        raise DiagramError("step sites i and j must be integers")
    plan = plan_step(mu, choice=(i, j))
    doc = plan_doc(mu, plan, step_options(mu))
    depth = _depth_field(data, required=False)
    if depth is not None:
        forced = _root_forced_chooser(mu, (i, j))
        doc["resolution"] = resolution_doc(resolve(mu, depth, chooser=forced))
    return _json_response(doc)


def _root_forced_chooser(root: WeightDiagram, choice: tuple[int, int]):
    """Pick ``choice`` at the root, the default first option everywhere else.

    The recursion never revisits the root diagram (every child drops the dot
    sum by one), so forcing by equality is unambiguous.
    """

    def chooser(mu: WeightDiagram, options: list[tuple[int, int]]) -> tuple[int, int]:
        return choice if mu == root else options[0]

    return chooser


# Serve a built explorer bundle when present (repository layout only).
_DIST = Path(__file__).resolve().parents[2] / "frontend" / "dist"
if _DIST.is_dir():  # pragma: no cover - depends on the frontend build
    from fastapi.staticfiles import StaticFiles

    app.mount("/", StaticFiles(directory=str(_DIST), html=True), name="explorer")
