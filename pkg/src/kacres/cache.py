"""Persistent JSON-lines cache for the resolution count memo.

One line per normalized diagram (minimum dot pinned to 0):

    {"depth":3,"dots":[0,1],"terms":[[[[0,1],1]],[[[-1,0],1]],...],"v":1}

``terms[d]`` lists ``[dots, multiplicity]`` pairs in lexicographic order, so a
save → load → save round trip is bit-exact.  Loading is forgiving: any line
that fails to parse or validate is skipped with a logged warning, and a valid
line only replaces an in-memory entry when it is deeper.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

from . import resolution
from .diagrams import WeightDiagram, leq
from .errors import DiagramError

log = logging.getLogger(__name__)

CACHE_VERSION = 1

__all__ = ["CACHE_VERSION", "save_cache", "load_cache"]


def _entry_line(
    dots: tuple[int, ...], depth: int, terms: list[dict[WeightDiagram, int]]
) -> str:
    payload = {
        "v": CACHE_VERSION,
        "dots": list(dots),
        "depth": depth,
        "terms": [
            [[list(lam.dots), m] for lam, m in sorted(t.items(), key=lambda kv: kv[0].dots)]
            for t in terms
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def save_cache(path: str | Path) -> int:
    """Write every memo entry, sorted by diagram; returns the line count."""
    lines = [
        _entry_line(dots, depth, terms)
        for dots, (depth, terms) in sorted(resolution._COUNT_MEMO.items())
    ]
    Path(path).write_text("".join(line + "\n" for line in lines))
    return len(lines)


def _int_list(value: object, what: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise DiagramError(f"{what} must be a list of integers")
    return value


def _parse_entry(
    obj: object,
) -> tuple[tuple[int, ...], int, list[dict[WeightDiagram, int]]]:
    if not isinstance(obj, dict):
        raise DiagramError("entry is not an object")
    if obj.get("v") != CACHE_VERSION:
        raise DiagramError(f"unsupported cache version {obj.get('v')!r}")
    mu = WeightDiagram.of(*_int_list(obj.get("dots"), "dots"))
    if mu.dots[0] != 0:
        raise DiagramError(f"entry diagram {list(mu.dots)} is not normalized")
    depth = obj.get("depth")
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < 0:
        raise DiagramError(f"depth must be a nonnegative integer, got {depth!r}")
    terms_raw = obj.get("terms")
    if not isinstance(terms_raw, list) or len(terms_raw) != depth + 1:
        raise DiagramError(f"terms must be a list of {depth + 1} degree layers")
    terms: list[dict[WeightDiagram, int]] = []
    for layer_raw in terms_raw:
        if not isinstance(layer_raw, list):
            raise DiagramError("degree layer must be a list")
        layer: dict[WeightDiagram, int] = {}
        for pair in layer_raw:
            if not isinstance(pair, list) or len(pair) != 2:
                raise DiagramError(f"summand entry must be [dots, multiplicity], got {pair!r}")
            lam = WeightDiagram.of(*_int_list(pair[0], "summand dots"))
            mult = pair[1]
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise DiagramError(f"multiplicity must be a positive integer, got {mult!r}")
            if lam.n != mu.n or not leq(mu, lam):
                raise DiagramError(
                    f"summand {list(lam.dots)} does not lie below {list(mu.dots)}"
                )
            if lam in layer:
                raise DiagramError(f"duplicate summand {list(lam.dots)} in one layer")
            layer[lam] = mult
        terms.append(layer)
    return mu.dots, depth, terms


def load_cache(path: str | Path) -> tuple[int, int]:
    """Merge a cache file into the memo; returns (entries installed, lines skipped).

    A valid entry is installed only when the memo has nothing deeper for that
    diagram.  Unreadable or invalid lines are skipped with a warning.
    """
    installed = skipped = 0
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            dots, depth, terms = _parse_entry(json.loads(line))
        except (ValueError, TypeError) as exc:
            skipped += 1
            log.warning("skipping cache line %d: %s", lineno, exc)
            continue
        existing = resolution._COUNT_MEMO.get(dots)
        if existing is None or existing[0] < depth:
            resolution._COUNT_MEMO[dots] = (depth, terms)
            installed += 1
    return installed, skipped
