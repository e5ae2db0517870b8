"""Canonical JSON documents shared by the CLI and the HTTP service.

Every public response — whether printed by the command line tool or returned
by an endpoint — is produced by :func:`to_json` on a document built here, so
the two surfaces are byte-identical for identical requests.  All documents
carry ``schema_version`` so cached output stays self-describing.

The ``*_from_doc`` helpers are the inverse direction: they turn untrusted
JSON values back into library objects, raising :class:`DiagramError` with a
message naming the offending field.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from .diagrams import (
    WeightDiagram,
    atypicality,
    dominant_from_diagram,
    is_isolated,
    is_left_isolated,
    odd_run_count,
    relative_length,
    render_ascii,
    runs,
    validate_runs,
)
from .errors import DiagramError
from .moves import (
    AllowableFunction,
    MoveKind,
    MoveRecord,
    crossing_count,
    degree,
    trace_start,
)
from .resolution import Resolution, StepCase, StepPlan
from .series import (
    complexity,
    growth_exponent,
    rank_variety_dim,
    series_coeffs,
    support_variety_dim,
    z_complexity,
)

SCHEMA_VERSION = "1"

__all__ = [
    "SCHEMA_VERSION",
    "to_json",
    "diagram_doc",
    "move_doc",
    "function_doc",
    "functions_doc",
    "resolution_doc",
    "series_doc",
    "plan_doc",
    "applicable_moves_doc",
    "applied_move_doc",
    "health_doc",
    "error_doc",
    "diagram_from_doc",
    "move_from_doc",
    "function_from_doc",
]


def to_json(doc: Mapping[str, Any]) -> str:
    """Canonical rendering used by both output surfaces."""
    return json.dumps(doc, sort_keys=True, indent=2)


def _dots(d: WeightDiagram) -> list[int]:
    return list(d.dots)


# ---------------------------------------------------------------------------
# documents


def diagram_doc(d: WeightDiagram) -> dict[str, Any]:
    """Everything the editor readout needs about one diagram."""
    return {
        "schema_version": SCHEMA_VERSION,
        "mu": _dots(d),
        "n": d.n,
        "dominant": list(dominant_from_diagram(d)),
        "runs": list(runs(d)),
        "atypicality": atypicality(d),
        "odd_run_count": odd_run_count(d),
        "isolated": [p for p in d.dots if is_isolated(d, p)],
        "left_isolated": [p for p in d.dots if is_left_isolated(d, p)],
        "ascii": render_ascii(d),
    }


def move_doc(rec: MoveRecord) -> dict[str, Any]:
    doc: dict[str, Any] = {"kind": rec.kind.value, "j": rec.j}
    if rec.kind is MoveKind.MOVE2:
        doc["k"] = rec.k
    return doc


def function_doc(f: AllowableFunction) -> dict[str, Any]:
    """Function plus the three readout numbers (degree is null when the
    displacement is odd, which transient hand-built functions may be) and
    the diagram its trace started from (null when the trace does not walk
    back to an identity)."""
    ell = relative_length(f.target, f.source)
    try:
        start: list[int] | None = _dots(trace_start(f, f.trace))
    except DiagramError:
        start = None
    return {
        "source": _dots(f.source),
        "target": _dots(f.target),
        "pairing": list(f.pairing),
        "trace": [move_doc(rec) for rec in f.trace],
        "trace_start": start,
        "relative_length": ell,
        "crossing_count": crossing_count(f),
        "degree": degree(f) if ell % 2 == 0 else None,
    }


def _function_sort_key(doc: Mapping[str, Any]) -> tuple:
    return (doc["degree"], doc["target"], doc["pairing"])


def functions_doc(
    mu: WeightDiagram,
    max_degree: int,
    by_degree: Mapping[int, Sequence[AllowableFunction]],
    lam: WeightDiagram | None = None,
) -> dict[str, Any]:
    """Flat listing of allowable functions out of ``mu``, optionally filtered
    to one target, ordered by (degree, target, pairing)."""
    functions = [
        function_doc(f)
        for d in sorted(by_degree)
        for f in by_degree[d]
        if lam is None or f.target == lam
    ]
    functions.sort(key=_function_sort_key)
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "mu": _dots(mu),
        "max_degree": max_degree,
        "functions": functions,
    }
    if lam is not None:
        doc["lambda"] = _dots(lam)
    return doc


def resolution_doc(r: Resolution) -> dict[str, Any]:
    """Terms in degree order; summands of each term in lexicographic order."""
    terms = []
    for term in r.terms:
        summands = []
        for lam in sorted(term.summands, key=lambda d: d.dots):
            entry: dict[str, Any] = {
                "lambda": _dots(lam),
                "multiplicity": term.summands[lam],
            }
            if term.functions is not None:
                docs = [function_doc(f) for f in term.functions.get(lam, ())]
                docs.sort(key=_function_sort_key)
                entry["functions"] = docs
            summands.append(entry)
        terms.append({"degree": term.degree, "summands": summands})
    return {
        "schema_version": SCHEMA_VERSION,
        "mu": _dots(r.mu),
        "max_degree": r.max_degree,
        "terms": terms,
    }


def series_doc(parts: Sequence[int], max_degree: int) -> dict[str, Any]:
    """Coefficients up to the truncation plus every derived invariant."""
    parts = validate_runs(parts)
    n = sum(parts)
    o = sum(1 for p in parts if p % 2)
    return {
        "schema_version": SCHEMA_VERSION,
        "runs": list(parts),
        "truncation": max_degree,
        "coeffs": series_coeffs(parts, max_degree),
        "z_complexity": z_complexity(parts),
        "complexity": complexity(n, o),
        "rank_variety_dim": rank_variety_dim(n, (n - o) // 2),
        "support_variety_dim": support_variety_dim(n, o),
        "growth_exponent": growth_exponent(parts),
    }


def plan_doc(
    mu: WeightDiagram, plan: StepPlan, options: Sequence[tuple[int, int]]
) -> dict[str, Any]:
    """One recursion step: the chosen case/site plus every alternate site."""
    return {
        "schema_version": SCHEMA_VERSION,
        "mu": _dots(mu),
        "case": plan.case.value,
        "i": plan.i,
        "j": plan.j,
        "nu": None if plan.nu is None else _dots(plan.nu),
        "mu_prime": None if plan.mu_prime is None else _dots(plan.mu_prime),
        "options": [[i, j] for i, j in options],
    }


def applicable_moves_doc(
    f: AllowableFunction, records: Sequence[MoveRecord]
) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "function": function_doc(f),
        "moves": [move_doc(rec) for rec in records],
    }


def applied_move_doc(f: AllowableFunction) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "function": function_doc(f),
    }


def health_doc() -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "status": "ok"}


def error_doc(message: str) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "error": message}


# ---------------------------------------------------------------------------
# parsing untrusted document values


def _require(doc: Any, field: str, context: str) -> Any:
    if not isinstance(doc, Mapping):
        raise DiagramError(f"{context} must be a JSON object, got {type(doc).__name__}")
    if field not in doc:
        raise DiagramError(f"{context} is missing the {field!r} field")
    return doc[field]


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise DiagramError(f"{what} must be a list of integers, got {value!r}")
    return value


def diagram_from_doc(value: Any, what: str = "diagram") -> WeightDiagram:
    return WeightDiagram.of(*_int_list(value, what))


def move_from_doc(doc: Any) -> MoveRecord:
    kind_value = _require(doc, "kind", "move")
    try:
        kind = MoveKind(kind_value)
    except ValueError:
        raise DiagramError(f"unknown move kind {kind_value!r}") from None
    j = doc.get("j")
    if not isinstance(j, int) or isinstance(j, bool):
        raise DiagramError(f"move site j must be an integer, got {j!r}")
    k = doc.get("k")
    if k is not None and (not isinstance(k, int) or isinstance(k, bool)):
        raise DiagramError(f"move site k must be an integer, got {k!r}")
    return MoveRecord(kind=kind, j=j, k=k)


def function_from_doc(doc: Any) -> AllowableFunction:
    source = diagram_from_doc(_require(doc, "source", "function"), "function source")
    target = diagram_from_doc(_require(doc, "target", "function"), "function target")
    pairing = tuple(_int_list(_require(doc, "pairing", "function"), "function pairing"))
    trace_value = doc.get("trace", [])
    if not isinstance(trace_value, list):
        raise DiagramError(f"function trace must be a list, got {trace_value!r}")
    trace = tuple(move_from_doc(rec) for rec in trace_value)
    return AllowableFunction(source=source, target=target, pairing=pairing, trace=trace)
