"""Command line interface.

Exit codes are part of the contract:

* 0 — success (for ``verify``: every check passed)
* 1 — a verify check failed
* 2 — unusable input (argparse errors and malformed diagrams/runs)
* 3 — requested degree exceeds the cap (``--cap``, default 64)
* 4 — an internal invariant fired; always a bug worth reporting

All JSON output goes through the shared serializer, so a CLI response is
byte-identical to the HTTP service's response for the same request.  Set
``KACRES_CACHE`` to a file path to persist the resolution memo between runs.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Any, Mapping

from .cache import load_cache, save_cache
from .diagrams import (
    WeightDiagram,
    parse_diagram,
    parse_runs,
    relative_length,
    render_ascii,
)
from .errors import CapExceededError, DiagramError, InternalInvariantError
from .moves import AllowableFunction, enumerate_allowable
from .resolution import resolve, resolve_with_functions
from .serialize import functions_doc, resolution_doc, series_doc, to_json
from .verify import CHECK_NAMES, CheckConfig, run_checks

log = logging.getLogger("kacres.cli")

DEFAULT_CAP = 64


# ---------------------------------------------------------------------------
# text renderings (tables derive from the same documents the JSON prints)


def _fixed(rows: list[list[str]], right: set[int]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    out = []
    for row in rows:
        cells = [
            cell.rjust(widths[c]) if c in right else cell.ljust(widths[c])
            for c, cell in enumerate(row)
        ]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out)


def _dots_text(dots: list[int]) -> str:
    return "[" + ",".join(str(v) for v in dots) + "]"


def resolution_table(doc: Mapping[str, Any]) -> str:
    rows = [["degree", "count", "summands"]]
    for term in doc["terms"]:
        count = sum(s["multiplicity"] for s in term["summands"])
        pieces = []
        for s in term["summands"]:
            text = _dots_text(s["lambda"])
            if s["multiplicity"] != 1:
                text += f"^{s['multiplicity']}"
            pieces.append(text)
        rows.append([str(term["degree"]), str(count), ", ".join(pieces)])
    return _fixed(rows, right={0, 1})


def resolution_ascii(doc: Mapping[str, Any]) -> str:
    blocks = []
    for term in doc["terms"]:
        lines = [f"degree {term['degree']}:"]
        for s in term["summands"]:
            d = WeightDiagram.of(*s["lambda"])
            art = "\n".join("  " + row for row in render_ascii(d).splitlines())
            lines.append(art + f"\n  (multiplicity {s['multiplicity']})")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def series_table(doc: Mapping[str, Any]) -> str:
    coeffs = " ".join(str(c) for c in doc["coeffs"])
    return "\n".join(
        [
            f"s_0..s_{doc['truncation']}: {coeffs}",
            f"z_complexity: {doc['z_complexity']}",
            f"complexity: {doc['complexity']}",
            f"rank_variety_dim: {doc['rank_variety_dim']}",
            f"support_variety_dim: {doc['support_variety_dim']}",
            f"growth_exponent: {doc['growth_exponent']}",
        ]
    )


def functions_table(doc: Mapping[str, Any]) -> str:
    rows = [["degree", "length", "crossings", "pairing"]]
    for f in doc["functions"]:
        rows.append(
            [
                "-" if f["degree"] is None else str(f["degree"]),
                str(f["relative_length"]),
                str(f["crossing_count"]),
                "(" + ", ".join(str(v) for v in f["pairing"]) + ")",
            ]
        )
    return _fixed(rows, right={0, 1, 2})


def function_ascii(f: AllowableFunction) -> str:
    """Two aligned dot rows over a shared ruler, then the arrow list."""
    lo = min(f.source.dots[0], f.target.dots[0]) - 1
    hi = max(f.source.dots[-1], f.target.dots[-1]) + 1
    width = max(len(str(p)) for p in (lo, hi))

    def row(d: WeightDiagram) -> str:
        return " ".join(
            ("o" if d.has_dot(p) else ".").rjust(width) for p in range(lo, hi + 1)
        )

    ruler = " ".join(str(p).rjust(width) for p in range(lo, hi + 1))
    arrows = "\n".join(
        f"{a} -> {fa}" for a, fa in zip(f.source.dots, f.pairing)
    )
    return "\n".join([ruler, row(f.source), row(f.target), arrows])


def functions_ascii(doc: Mapping[str, Any], functions: list[AllowableFunction]) -> str:
    blocks = []
    for fdoc, f in zip(doc["functions"], functions):
        head = (
            f"degree {'-' if fdoc['degree'] is None else fdoc['degree']}, "
            f"length {fdoc['relative_length']}, crossings {fdoc['crossing_count']}"
        )
        blocks.append(head + "\n" + function_ascii(f))
    return "\n\n".join(blocks)


# ---------------------------------------------------------------------------
# cache plumbing


def _cache_load() -> None:
    path = os.environ.get("KACRES_CACHE")
    if path and os.path.exists(path):
        installed, skipped = load_cache(path)
        log.info("cache %s: installed %d entries, skipped %d", path, installed, skipped)


def _cache_save() -> None:
    path = os.environ.get("KACRES_CACHE")
    if path:
        written = save_cache(path)
        log.info("cache %s: wrote %d entries", path, written)


def _check_cap(depth: int, cap: int) -> int:
    if depth > cap:
        raise CapExceededError(f"requested degree {depth} exceeds the cap {cap}")
    return depth


# ---------------------------------------------------------------------------
# subcommands


def cmd_resolve(args: argparse.Namespace) -> int:
    mu = parse_diagram(args.mu)
    depth = _check_cap(args.max_degree, args.cap)
    _cache_load()
    r = resolve_with_functions(mu, depth) if args.with_functions else resolve(mu, depth)
    doc = resolution_doc(r)
    if args.format == "json":
        print(to_json(doc))
    elif args.format == "table":
        print(resolution_table(doc))
    else:
        print(resolution_ascii(doc))
    _cache_save()
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    parts = parse_runs(args.runs)
    depth = _check_cap(args.max_degree, args.cap)
    doc = series_doc(parts, depth)
    if args.format == "json":
        print(to_json(doc))
    else:
        print(series_table(doc))
    return 0


def cmd_functions(args: argparse.Namespace) -> int:
    mu = parse_diagram(args.mu)
    lam = parse_diagram(args.lam) if args.lam is not None else None
    if args.max_degree is not None:
        depth = args.max_degree
    elif lam is not None:
        depth = max(relative_length(lam, mu), 0) // 2
    else:
        raise DiagramError("functions needs --lambda or --max-degree (or both)")
    depth = _check_cap(depth, args.cap)
    _cache_load()
    by_degree = enumerate_allowable(mu, depth)
    doc = functions_doc(mu, depth, by_degree, lam=lam)
    if args.format == "json":
        print(to_json(doc))
    elif args.format == "table":
        print(functions_table(doc))
    else:
        ordered = [
            f
            for d in sorted(by_degree)
            for f in sorted(
                (f for f in by_degree[d] if lam is None or f.target == lam),
                key=lambda f: (f.target.dots, f.pairing),
            )
        ]
        print(functions_ascii(doc, ordered))
    _cache_save()
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = args.check or list(CHECK_NAMES)
    for name in names:
        if name not in CHECK_NAMES:
            raise DiagramError(
                f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}"
            )
    log.info("verify seed %d, trials %d", args.seed, args.trials)
    cfg = CheckConfig(
        max_n=args.max_n,
        max_degree=args.max_degree,
        trials=args.trials,
        seed=args.seed,
    )
    results = run_checks(names, cfg)
    for result in results:
        print(result.summary())
    return 0 if all(r.passed for r in results) else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kacres",
        description="Exact resolution combinatorics for weight diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats=("json", "table", "ascii")):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_CAP,
            help="largest degree this invocation will compute",
        )

    p = sub.add_parser("resolve", help="resolve a diagram out to a degree")
    p.add_argument("--mu", required=True, help='diagram, e.g. "[0,1]"')
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument(
        "--with-functions",
        action="store_true",
        help="label every summand with its functions",
    )
    add_common(p)
    p.set_defaults(handler=cmd_resolve)

    p = sub.add_parser("series", help="generating series for run sizes")
    p.add_argument("--runs", required=True, help='comma-separated sizes, e.g. "2,1"')
    p.add_argument("--max-degree", type=int, required=True)
    add_common(p, formats=("json", "table"))
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("functions", help="list allowable functions out of a diagram")
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam", default=None, help="restrict to one target")
    p.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="defaults to half the displacement when --lambda is given",
    )
    add_common(p)
    p.set_defaults(handler=cmd_functions)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument(
        "--check",
        action="append",
        metavar="NAME",
        help=f"run one named check (repeatable); known: {', '.join(CHECK_NAMES)}",
    )
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(
        level=logging.INFO, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
